#include "pdm/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pdm/patterns.hpp"

namespace pdm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t pattern_arity(const std::string& name) {
  for (const pattern& p : pattern_catalog())
    if (p.name == name) return p.arity;
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

// Partial Fisher-Yates: the first `k` slots end up holding a uniform draw
// of distinct elements.
std::vector<std::string> draw_distinct(std::mt19937_64& rng,
                                       std::vector<std::string> pool,
                                       std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

topology bench_topology(std::size_t procs) {
  if (procs == 0) throw std::invalid_argument("need at least one process");
  topology topo;
  for (std::size_t i = 0; i < procs; ++i) {
    process_spec p;
    p.name = procs <= 26 ? std::string(1, static_cast<char>('A' + i))
                         : "P" + std::to_string(i + 1);
    p.atoms.insert("x" + std::to_string(2 * i + 1));
    p.atoms.insert("x" + std::to_string(2 * i + 2));
    topo.procs.push_back(std::move(p));
  }
  return topo;
}

formula gen_pattern(const std::string& pattern_class, const topology& topo,
                    std::uint64_t seed) {
  const std::size_t arity = pattern_arity(pattern_class);
  std::set<std::string> atom_set = topo.all_atoms();
  std::vector<std::string> alphabet(atom_set.begin(), atom_set.end());
  if (arity > alphabet.size())
    throw std::invalid_argument("pattern '" + pattern_class + "' needs " +
                                std::to_string(arity) +
                                " atoms but the topology only has " +
                                std::to_string(alphabet.size()));
  std::mt19937_64 rng(seed);
  return instantiate_pattern(pattern_class,
                             draw_distinct(rng, alphabet, arity));
}

bench_row run_bench_class(const bench_config& cfg) {
  if (cfg.count == 0) throw std::invalid_argument("count must be >= 1");
  const std::size_t arity = pattern_arity(cfg.pattern_class);
  topology topo = bench_topology(cfg.procs);
  std::set<std::string> atom_set = topo.all_atoms();
  std::vector<std::string> alphabet(atom_set.begin(), atom_set.end());
  if (arity > alphabet.size())
    throw std::invalid_argument("pattern '" + cfg.pattern_class + "' needs " +
                                std::to_string(arity) + " atoms but " +
                                std::to_string(cfg.procs) +
                                " processes only observe " +
                                std::to_string(alphabet.size()));

  bench_row row;
  row.pattern_class = cfg.pattern_class;
  row.count = cfg.count;
  const std::uint64_t base = splitmix64(cfg.seed ^ fnv1a(cfg.pattern_class));

  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t run_seed = splitmix64(base + i);
    std::mt19937_64 rng(run_seed);
    try {
      formula f = instantiate_pattern(cfg.pattern_class,
                                      draw_distinct(rng, alphabet, arity));
      trace tr = gen_trace(rng, alphabet, cfg.trace_len);

      plan_options opts;
      opts.counting = cfg.counting;
      monitor_outcome pdm = run_decentralized(f, topo, tr, opts);
      monitor_outcome bf = run_baseline(f, topo, tr);

      row.pdm_trace += static_cast<double>(pdm.stats.steps_consumed);
      row.pdm_msgs += static_cast<double>(pdm.stats.msg_count);
      row.pdm_msg_bits += static_cast<double>(pdm.stats.msg_bits);
      row.pdm_mem_bits += static_cast<double>(pdm.stats.mem_bits_peak);
      row.bf_trace += static_cast<double>(bf.stats.steps_consumed);
      row.bf_msgs += static_cast<double>(bf.stats.msg_count);
      row.bf_msg_bits += static_cast<double>(bf.stats.msg_bits);
      row.bf_mem_bits += static_cast<double>(bf.stats.mem_bits_peak);
    } catch (const std::exception& e) {
      throw std::runtime_error("bench run failed: class=" +
                               cfg.pattern_class + " index=" +
                               std::to_string(i) + " seed=" +
                               std::to_string(run_seed) + ": " + e.what());
    }
  }

  const double n = static_cast<double>(cfg.count);
  row.pdm_trace /= n;
  row.pdm_msgs /= n;
  row.pdm_msg_bits /= n;
  row.pdm_mem_bits /= n;
  row.bf_trace /= n;
  row.bf_msgs /= n;
  row.bf_msg_bits /= n;
  row.bf_mem_bits /= n;
  return row;
}

bench_report run_bench(const std::vector<bench_config>& cfgs) {
  bench_report report;
  for (const bench_config& cfg : cfgs)
    report.rows.push_back(run_bench_class(cfg));
  return report;
}

std::string bench_report::to_text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << std::left << std::setw(20) << "pattern" << std::right;
  for (const char* group : {"#msg", "|msg| bits", "|mem| bits", "|trace|"})
    os << std::setw(12) << (std::string(group) + " P")
       << std::setw(12) << (std::string(group) + " B");
  os << '\n';
  os << std::string(20 + 8 * 12, '-') << '\n';
  for (const bench_row& r : rows) {
    os << std::left << std::setw(20) << r.pattern_class << std::right
       << std::setw(12) << r.pdm_msgs << std::setw(12) << r.bf_msgs
       << std::setw(12) << r.pdm_msg_bits << std::setw(12) << r.bf_msg_bits
       << std::setw(12) << r.pdm_mem_bits << std::setw(12) << r.bf_mem_bits
       << std::setw(12) << r.pdm_trace << std::setw(12) << r.bf_trace;
    os << '\n';
  }
  os << "P = ring monitor, B = formula-passing baseline; means over "
     << (rows.empty() ? 0 : rows.front().count) << " paired runs per row\n";
  return os.str();
}

std::string bench_report::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "pattern,monitor,runs,mean_trace,mean_msgs,mean_msg_bits,"
        "mean_mem_bits\n";
  for (const bench_row& r : rows) {
    os << r.pattern_class << ",pdm," << r.count << ',' << r.pdm_trace << ','
       << r.pdm_msgs << ',' << r.pdm_msg_bits << ',' << r.pdm_mem_bits
       << '\n';
    os << r.pattern_class << ",baseline," << r.count << ',' << r.bf_trace
       << ',' << r.bf_msgs << ',' << r.bf_msg_bits << ',' << r.bf_mem_bits
       << '\n';
  }
  return os.str();
}

}  // namespace pdm
