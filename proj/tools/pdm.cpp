#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdm/bench.hpp"
#include "pdm/equiv.hpp"
#include "pdm/errors.hpp"
#include "pdm/monitor.hpp"
#include "pdm/parser.hpp"
#include "pdm/patterns.hpp"
#include "pdm/rewrite.hpp"
#include "pdm/sop.hpp"
#include "pdm/table.hpp"
#include "pdm/trace_io.hpp"

namespace {

pdm::table_mode pick_mode(const std::string& flag, const pdm::formula& f) {
  if (flag == "prop") return pdm::table_mode::propositional;
  if (flag == "prog") return pdm::table_mode::progression;
  return f.is_temporal_free() ? pdm::table_mode::propositional
                              : pdm::table_mode::progression;
}

pdm::count_mode pick_counting(const std::string& flag) {
  return flag == "full" ? pdm::count_mode::full : pdm::count_mode::step_only;
}

const char* mode_name(pdm::table_mode m) {
  return m == pdm::table_mode::propositional ? "propositional"
                                             : "progression";
}

void print_table(const pdm::analysis_table& t) {
  std::vector<std::size_t> widths;
  for (const std::string& v : t.vars)
    widths.push_back(std::max<std::size_t>(v.size(), 1));
  for (std::size_t c = 0; c < t.vars.size(); ++c)
    std::cout << std::left << std::setw(static_cast<int>(widths[c]) + 1)
              << t.vars[c];
  std::cout << "| result\n";
  for (const pdm::table_row& row : t.rows) {
    for (std::size_t c = 0; c < row.values.size(); ++c)
      std::cout << std::left << std::setw(static_cast<int>(widths[c]) + 1)
                << pdm::to_symbol(row.values[c]);
    std::cout << "| " << row.result.text() << '\n';
  }
}

void print_weights(const pdm::weight_set& ws, pdm::table_mode m) {
  std::cout << "mode: " << mode_name(m) << ", counting: "
            << (ws.counting == pdm::count_mode::full ? "full" : "step")
            << '\n';
  for (const auto& [var, w] : ws.by_var)
    std::cout << "IW(" << var << ") = " << w.str() << " ("
              << std::setprecision(6) << w.value() << ")\n";
}

void print_partition(const pdm::equiv_partition& p) {
  if (p.classes.empty()) {
    std::cout << "no equivalence classes\n";
  } else {
    for (const pdm::equiv_class& c : p.classes) {
      std::cout << "{";
      for (std::size_t i = 0; i < c.members.size(); ++i)
        std::cout << (i ? ", " : "") << c.members[i];
      std::cout << "}\n";
    }
  }
  if (!p.singletons.empty()) {
    std::cout << "singletons:";
    for (const std::string& s : p.singletons) std::cout << ' ' << s;
    std::cout << '\n';
  }
}

void print_outcome(const pdm::monitor_outcome& out) {
  std::cout << "verdict: " << pdm::to_string(out.v);
  if (out.at_step) std::cout << " at step " << *out.at_step;
  std::cout << '\n';
  if (out.v == pdm::verdict::inconclusive && out.residual.valid())
    std::cout << "residual: " << out.residual.text() << '\n';
  std::cout << "messages: " << out.stats.msg_count << " ("
            << out.stats.msg_bits << " bits)\n";
  std::cout << "memory peak: " << out.stats.mem_bits_peak << " bits\n";
  std::cout << "steps consumed: " << out.stats.steps_consumed << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Three-valued formula tables, influence weights, and decentralized "
      "LTL monitoring"};
  app.require_subcommand(1);

  const std::vector<std::string> modes = {"auto", "prop", "prog"};
  const std::vector<std::string> countings = {"step", "full"};
  std::vector<std::string> class_names;
  for (const pdm::pattern& p : pdm::pattern_catalog())
    class_names.push_back(p.name);

  // table
  auto* cmd_table = app.add_subcommand(
      "table", "Enumerate all three-valued rows of a formula");
  std::string tbl_formula, tbl_mode = "auto", tbl_csv;
  std::size_t tbl_cap = pdm::default_variable_cap;
  cmd_table->add_option("formula", tbl_formula, "formula text")->required();
  cmd_table->add_option("--mode", tbl_mode, "prop|prog|auto")
      ->check(CLI::IsMember(modes));
  cmd_table->add_option("--csv", tbl_csv, "write rows as CSV to this path");
  cmd_table->add_option("--cap", tbl_cap, "variable cap");

  // weights
  auto* cmd_weights =
      app.add_subcommand("weights", "Influence weight of every variable");
  std::string w_formula, w_mode = "auto", w_count = "step";
  std::size_t w_cap = pdm::default_variable_cap;
  cmd_weights->add_option("formula", w_formula, "formula text")->required();
  cmd_weights->add_option("--mode", w_mode, "prop|prog|auto")
      ->check(CLI::IsMember(modes));
  cmd_weights->add_option("--count-mode", w_count, "step|full")
      ->check(CLI::IsMember(countings));
  cmd_weights->add_option("--cap", w_cap, "variable cap");

  // equiv
  auto* cmd_equiv = app.add_subcommand(
      "equiv", "Partition variables into interchangeability classes");
  std::string e_formula;
  cmd_equiv->add_option("formula", e_formula, "formula text")->required();

  // reduce
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Contract each equivalence class to two representatives");
  std::string r_formula;
  cmd_reduce->add_option("formula", r_formula, "formula text")->required();

  // synth
  auto* cmd_synth = app.add_subcommand(
      "synth", "Synthesize the trigger expression for a table result");
  std::string s_formula, s_mode = "auto", s_target;
  std::size_t s_cap = pdm::default_variable_cap;
  cmd_synth->add_option("formula", s_formula, "formula text")->required();
  cmd_synth->add_option("--target", s_target,
                        "row result to characterize (default: all)");
  cmd_synth->add_option("--mode", s_mode, "prop|prog|auto")
      ->check(CLI::IsMember(modes));
  cmd_synth->add_option("--cap", s_cap, "variable cap");

  // plan
  auto* cmd_plan = app.add_subcommand(
      "plan", "Precompute the monitoring plan for a topology");
  std::string p_formula, p_topo, p_count = "step";
  std::size_t p_cap = pdm::default_variable_cap;
  bool p_json = false;
  cmd_plan->add_option("formula", p_formula, "formula text")->required();
  cmd_plan->add_option("--topo", p_topo, "topology, e.g. A:a1,a2;B:b")
      ->required();
  cmd_plan->add_option("--count-mode", p_count, "step|full")
      ->check(CLI::IsMember(countings));
  cmd_plan->add_option("--cap", p_cap, "variable cap");
  cmd_plan->add_flag("--json", p_json, "emit the plan as JSON");

  // monitor
  auto* cmd_monitor =
      app.add_subcommand("monitor", "Run a monitor over a recorded trace");
  std::string m_formula, m_topo, m_trace, m_count = "step";
  std::size_t m_cap = pdm::default_variable_cap;
  bool m_baseline = false;
  cmd_monitor->add_option("formula", m_formula, "formula text")->required();
  cmd_monitor->add_option("--topo", m_topo, "topology, e.g. A:a1,a2;B:b")
      ->required();
  cmd_monitor->add_option("--trace", m_trace, "JSON Lines trace file")
      ->required();
  cmd_monitor->add_flag("--baseline", m_baseline,
                        "run the formula-passing baseline instead");
  cmd_monitor->add_option("--count-mode", m_count, "step|full")
      ->check(CLI::IsMember(countings));
  cmd_monitor->add_option("--cap", m_cap, "variable cap");

  // bench
  auto* cmd_bench = app.add_subcommand(
      "bench", "Paired monitor benchmark over pattern formulas");
  std::vector<std::string> b_classes;
  std::size_t b_count = 200, b_procs = 3, b_len = 50;
  std::uint64_t b_seed = 1;
  std::string b_countmode = "step", b_csv;
  cmd_bench->add_option("--class", b_classes, "pattern class (repeatable)")
      ->check(CLI::IsMember(class_names));
  cmd_bench->add_option("--count", b_count, "runs per class");
  cmd_bench->add_option("--procs", b_procs, "process count");
  cmd_bench->add_option("--len", b_len, "trace length");
  cmd_bench->add_option("--seed", b_seed, "experiment seed");
  cmd_bench->add_option("--count-mode", b_countmode, "step|full")
      ->check(CLI::IsMember(countings));
  cmd_bench->add_option("--csv", b_csv, "write the report as CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_table->parsed()) {
      pdm::formula f = pdm::parse(tbl_formula);
      pdm::analysis_table t =
          pdm::build_table(f, pick_mode(tbl_mode, f), tbl_cap);
      print_table(t);
      if (!tbl_csv.empty()) {
        std::ofstream os(tbl_csv);
        if (!os) throw std::runtime_error("cannot write " + tbl_csv);
        os << pdm::to_csv(t);
        std::cout << "wrote " << tbl_csv << '\n';
      }
    } else if (cmd_weights->parsed()) {
      pdm::formula f = pdm::parse(w_formula);
      pdm::table_mode m = pick_mode(w_mode, f);
      pdm::analysis_table t = pdm::build_table(f, m, w_cap);
      print_weights(pdm::all_weights(t, pick_counting(w_count)), m);
    } else if (cmd_equiv->parsed()) {
      print_partition(pdm::partition(pdm::parse(e_formula)));
    } else if (cmd_reduce->parsed()) {
      pdm::reduction red = pdm::reduce(pdm::parse(r_formula));
      std::cout << "reduced: " << red.reduced.text() << '\n';
      for (const pdm::equiv_class& c : red.classes) {
        std::cout << "class {";
        for (std::size_t i = 0; i < c.members.size(); ++i)
          std::cout << (i ? ", " : "") << c.members[i];
        std::cout << "} kept " << c.rep1();
        if (c.has_pair()) std::cout << ", " << c.rep2();
        std::cout << '\n';
      }
    } else if (cmd_synth->parsed()) {
      pdm::formula f = pdm::parse(s_formula);
      pdm::analysis_table t =
          pdm::build_table(f, pick_mode(s_mode, f), s_cap);
      if (s_target.empty()) {
        for (const pdm::sop& s : pdm::synthesize_all(t))
          std::cout << "B[" << s.target.text() << "] = " << s.str() << '\n';
      } else {
        pdm::formula target = pdm::simplify(pdm::parse(s_target));
        pdm::sop s = pdm::synthesize(t, target);
        std::cout << "B[" << s.target.text() << "] = " << s.str() << '\n';
      }
    } else if (cmd_plan->parsed()) {
      pdm::formula f = pdm::parse(p_formula);
      pdm::topology topo = pdm::parse_topology(p_topo);
      pdm::plan_options opts;
      opts.counting = pick_counting(p_count);
      opts.cap = p_cap;
      pdm::monitor_plan plan = pdm::make_plan(f, topo, opts);
      std::cout << (p_json ? pdm::plan_to_json(plan)
                           : pdm::plan_to_text(plan));
    } else if (cmd_monitor->parsed()) {
      pdm::formula f = pdm::parse(m_formula);
      pdm::topology topo = pdm::parse_topology(m_topo);
      pdm::trace tr = pdm::read_trace_jsonl_file(m_trace);
      pdm::plan_options opts;
      opts.counting = pick_counting(m_count);
      opts.cap = m_cap;
      print_outcome(m_baseline ? pdm::run_baseline(f, topo, tr)
                               : pdm::run_decentralized(f, topo, tr, opts));
    } else if (cmd_bench->parsed()) {
      if (b_classes.empty()) b_classes = class_names;
      std::vector<pdm::bench_config> cfgs;
      for (const std::string& cls : b_classes) {
        pdm::bench_config cfg;
        cfg.pattern_class = cls;
        cfg.count = b_count;
        cfg.procs = b_procs;
        cfg.trace_len = b_len;
        cfg.seed = b_seed;
        cfg.counting = pick_counting(b_countmode);
        cfgs.push_back(cfg);
      }
      pdm::bench_report report = pdm::run_bench(cfgs);
      std::cout << report.to_text();
      if (!b_csv.empty()) {
        std::ofstream os(b_csv);
        if (!os) throw std::runtime_error("cannot write " + b_csv);
        os << report.to_csv();
        std::cout << "wrote " << b_csv << '\n';
      }
    }
    return 0;
  } catch (const pdm::variable_cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
