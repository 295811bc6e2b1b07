#include "pdm/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdm {

namespace {

formula weak_until(const formula& a, const formula& b) {
  return formula::lor(formula::until(a, b), formula::globally(a));
}

formula implies(const formula& a, const formula& b) {
  return formula::lor(formula::lnot(a), b);
}

formula build(const std::string& name, const std::vector<formula>& at) {
  if (name == "absence") return formula::globally(formula::lnot(at[0]));
  if (name == "existence") return formula::eventually(at[0]);
  if (name == "universal") return formula::globally(at[0]);
  if (name == "response")
    return formula::globally(implies(at[0], formula::eventually(at[1])));
  if (name == "precedence")
    return formula::lor(
        formula::until(formula::lnot(at[0]), at[1]),
        formula::globally(formula::lnot(at[0])));
  if (name == "bounded-existence") {
    // At most two stretches where the atom holds.
    formula p = at[0];
    formula np = formula::lnot(p);
    formula w = weak_until(p, formula::globally(np));
    w = weak_until(np, w);
    w = weak_until(p, w);
    return weak_until(np, w);
  }
  if (name == "precedence-chain") {
    // p only after the two-step chain s, then t, has completed.
    formula p = at[0], s = at[1], t = at[2];
    formula np = formula::lnot(p);
    formula chain = formula::land(
        s, formula::land(np, formula::next(formula::until(np, t))));
    return formula::lor(formula::lnot(formula::eventually(p)),
                        formula::until(np, chain));
  }
  if (name == "response-chain") {
    // Every p is answered by s and later t.
    formula p = at[0], s = at[1], t = at[2];
    formula answer = formula::eventually(
        formula::land(s, formula::next(formula::eventually(t))));
    return formula::globally(implies(p, answer));
  }
  if (name == "constrained-chain") {
    // As response_chain, but z must stay false between s and t.
    formula p = at[0], s = at[1], t = at[2], z = at[3];
    formula nz = formula::lnot(z);
    formula answer = formula::eventually(formula::land(
        s, formula::land(nz, formula::next(formula::until(nz, t)))));
    return formula::globally(implies(p, answer));
  }
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

}  // namespace

const std::vector<pattern>& pattern_catalog() {
  static const std::vector<pattern> catalog = {
      {"absence", 1},          {"existence", 1},
      {"universal", 1},     {"response", 2},
      {"precedence", 2},       {"bounded-existence", 1},
      {"precedence-chain", 3}, {"response-chain", 3},
      {"constrained-chain", 4},
  };
  return catalog;
}

formula instantiate_pattern(const std::string& name,
                            const std::vector<std::string>& atoms) {
  const std::vector<pattern>& catalog = pattern_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const pattern& p) { return p.name == name; });
  if (it == catalog.end())
    throw std::invalid_argument("unknown pattern '" + name + "'");
  if (atoms.size() != it->arity)
    throw std::invalid_argument("pattern '" + name + "' needs " +
                                std::to_string(it->arity) + " atoms, got " +
                                std::to_string(atoms.size()));
  std::vector<formula> at;
  at.reserve(atoms.size());
  for (const std::string& a : atoms) at.push_back(formula::atom(a));
  return build(name, at);
}

trace gen_trace(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                std::size_t len) {
  trace tr;
  tr.atoms = atoms;
  std::sort(tr.atoms.begin(), tr.atoms.end());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < len; ++t) {
    std::map<std::string, bool> step;
    for (const std::string& a : tr.atoms) step[a] = coin(rng);
    tr.steps.push_back(std::move(step));
  }
  return tr;
}

}  // namespace pdm
