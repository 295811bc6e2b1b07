#include "pdm/trace_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pdm/errors.hpp"

namespace pdm {

using nlohmann::json;

trace read_trace_jsonl(std::istream& in) {
  trace tr;
  std::string line;
  int lineno = 0;
  std::set<std::string> atoms;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw parse_error("expected a JSON object of atom:bool pairs", lineno, 1);
    std::map<std::string, bool> step;
    for (const auto& [key, val] : j.items()) {
      if (!val.is_boolean())
        throw parse_error("value for '" + key + "' is not a boolean", lineno, 1);
      step[key] = val.get<bool>();
    }
    if (tr.steps.empty()) {
      for (const auto& [key, val] : step) atoms.insert(key);
    } else {
      std::set<std::string> here;
      for (const auto& [key, val] : step) here.insert(key);
      if (here != atoms)
        throw parse_error("step assigns a different atom set than step 1",
                          lineno, 1);
    }
    tr.steps.push_back(std::move(step));
  }
  tr.atoms.assign(atoms.begin(), atoms.end());
  return tr;
}

trace read_trace_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open trace file " + path, 1, 1);
  return read_trace_jsonl(in);
}

std::string trace_to_jsonl(const trace& tr) {
  std::string out;
  for (const auto& step : tr.steps) {
    json j = json::object();
    for (const auto& [atom, val] : step) j[atom] = val;
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

json plan_json(const monitor_plan& p) {
  json j;
  j["formula"] = p.property.text();
  j["reduced"] = p.red.reduced.text();
  j["counting"] = p.counting == count_mode::step_only ? "step" : "full";

  json classes = json::array();
  for (const equiv_class& c : p.red.classes) classes.push_back(c.members);
  j["classes"] = classes;

  json weights = json::object();
  for (const auto& [var, w] : p.weights.by_var)
    weights[var] = {{"value", w.value.str()},
                    {"numeric", w.value.value()},
                    {"exact", w.exact}};
  j["weights"] = weights;

  json factors = json::object();
  for (const auto& [name, r] : p.factors)
    factors[name] = {{"value", r.str()}, {"numeric", r.value()}};
  j["factors"] = factors;

  j["ring"] = p.ring;

  json sops = json::array();
  for (const extended_sop& s : p.sops) {
    json terms = json::array();
    for (const term& t : s.terms) terms.push_back(t.str());
    sops.push_back({{"target", s.target.text()}, {"terms", terms}});
  }
  j["descriptions"] = sops;
  return j;
}

}  // namespace

std::string plan_to_json(const monitor_plan& p) { return plan_json(p).dump(2); }

std::string plan_to_text(const monitor_plan& p) {
  std::ostringstream out;
  out << "formula:  " << p.property.text() << "\n";
  out << "reduced:  " << p.red.reduced.text() << "\n";
  out << "classes:";
  if (p.red.classes.empty()) out << " none";
  for (const equiv_class& c : p.red.classes) {
    out << " {";
    for (std::size_t i = 0; i < c.members.size(); ++i)
      out << (i ? "," : "") << c.members[i];
    out << "}";
  }
  out << "\n";
  out << "weights:\n";
  for (const auto& [var, w] : p.weights.by_var)
    out << "  " << var << " = " << w.value.str()
        << (w.exact ? "" : " (approximate)") << "\n";
  out << "factors:\n";
  for (const auto& [name, r] : p.factors)
    out << "  " << name << " = " << r.str() << "\n";
  out << "ring: ";
  for (std::size_t i = 0; i < p.ring.size(); ++i)
    out << (i ? " -> " : "") << p.ring[i];
  out << "\n";
  out << "descriptions:\n";
  for (const extended_sop& s : p.sops) {
    out << "  " << s.target.text() << "  <=  ";
    for (std::size_t i = 0; i < s.terms.size(); ++i)
      out << (i ? " | " : "") << s.terms[i].str();
    if (s.terms.empty()) out << "false";
    out << "\n";
  }
  return out.str();
}

}  // namespace pdm
