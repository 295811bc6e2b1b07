#include "pdm/rewrite.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pdm {

namespace {

// Collect the operands of a &/| chain. Children are already simplified,
// so same-kind children are flat chains themselves.
void gather(const formula& f, op k, std::vector<formula>& out) {
  if (f.kind() == k) {
    gather(f.left(), k, out);
    gather(f.right(), k, out);
  } else {
    out.push_back(f);
  }
}

formula rebuild_chain(op k, std::vector<formula> ops) {
  formula acc = ops.back();
  for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it) {
    acc = k == op::land ? formula::land(*it, acc) : formula::lor(*it, acc);
  }
  return acc;
}

formula simplify_junction(op k, const formula& lhs, const formula& rhs) {
  const bool conj = k == op::land;
  std::vector<formula> ops;
  gather(lhs, k, ops);
  gather(rhs, k, ops);

  std::vector<formula> kept;
  for (const formula& g : ops) {
    if (g.kind() == op::tt) {
      if (!conj) return formula::tt();  // true absorbs a disjunction
      continue;                         // and disappears from a conjunction
    }
    if (g.kind() == op::ff) {
      if (conj) return formula::ff();
      continue;
    }
    kept.push_back(g);
  }
  if (kept.empty()) return conj ? formula::tt() : formula::ff();

  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.size() == 1) return kept.front();
  return rebuild_chain(k, std::move(kept));
}

}  // namespace

formula simplify(const formula& f) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
    case op::atom:
      return f;
    case op::lnot: {
      formula c = simplify(f.left());
      if (c.kind() == op::tt) return formula::ff();
      if (c.kind() == op::ff) return formula::tt();
      if (c.kind() == op::lnot) return c.left();
      return formula::lnot(std::move(c));
    }
    case op::land:
    case op::lor:
      return simplify_junction(f.kind(), simplify(f.left()), simplify(f.right()));
    case op::next:
      return formula::next(simplify(f.left()));
    case op::eventually:
      return formula::eventually(simplify(f.left()));
    case op::globally:
      return formula::globally(simplify(f.left()));
    case op::until:
      return formula::until(simplify(f.left()), simplify(f.right()));
  }
  return f;
}

namespace {

formula substitute_raw(const formula& f, const assignment& a, bool freeze_next) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
      return f;
    case op::atom:
      switch (lookup(a, f.name())) {
        case truth3::top: return formula::tt();
        case truth3::bot: return formula::ff();
        case truth3::unknown: return f;
      }
      return f;
    case op::lnot:
      return formula::lnot(substitute_raw(f.left(), a, freeze_next));
    case op::land:
      return formula::land(substitute_raw(f.left(), a, freeze_next),
                           substitute_raw(f.right(), a, freeze_next));
    case op::lor:
      return formula::lor(substitute_raw(f.left(), a, freeze_next),
                          substitute_raw(f.right(), a, freeze_next));
    case op::next:
      if (freeze_next) return f;
      return formula::next(substitute_raw(f.left(), a, freeze_next));
    case op::eventually:
      return formula::eventually(substitute_raw(f.left(), a, freeze_next));
    case op::globally:
      return formula::globally(substitute_raw(f.left(), a, freeze_next));
    case op::until:
      return formula::until(substitute_raw(f.left(), a, freeze_next),
                            substitute_raw(f.right(), a, freeze_next));
  }
  return f;
}

}  // namespace

formula substitute(const formula& f, const assignment& a) {
  return simplify(substitute_raw(f, a, false));
}

formula substitute_outside_next(const formula& f, const assignment& a) {
  return simplify(substitute_raw(f, a, true));
}

formula rename(const formula& f, const std::string& from, const std::string& to) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
      return f;
    case op::atom:
      return f.name() == from ? formula::atom(to) : f;
    case op::lnot:
      return formula::lnot(rename(f.left(), from, to));
    case op::land:
      return formula::land(rename(f.left(), from, to), rename(f.right(), from, to));
    case op::lor:
      return formula::lor(rename(f.left(), from, to), rename(f.right(), from, to));
    case op::next:
      return formula::next(rename(f.left(), from, to));
    case op::eventually:
      return formula::eventually(rename(f.left(), from, to));
    case op::globally:
      return formula::globally(rename(f.left(), from, to));
    case op::until:
      return formula::until(rename(f.left(), from, to), rename(f.right(), from, to));
  }
  return f;
}

formula expand_step(const formula& f) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
    case op::atom:
    case op::next:  // already talks about the next step; frozen
      return f;
    case op::lnot:
      return formula::lnot(expand_step(f.left()));
    case op::land:
      return formula::land(expand_step(f.left()), expand_step(f.right()));
    case op::lor:
      return formula::lor(expand_step(f.left()), expand_step(f.right()));
    case op::eventually:
      return formula::lor(expand_step(f.left()), formula::next(f));
    case op::globally:
      return formula::land(expand_step(f.left()), formula::next(f));
    case op::until:
      // f U g = g | (f & X(f U g))
      return formula::lor(expand_step(f.right()),
                          formula::land(expand_step(f.left()), formula::next(f)));
  }
  return f;
}

formula strip_residues(const formula& f) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
    case op::atom:
      return f;
    case op::next:
      return f.left();
    case op::lnot:
      return formula::lnot(strip_residues(f.left()));
    case op::land:
      return formula::land(strip_residues(f.left()), strip_residues(f.right()));
    case op::lor:
      return formula::lor(strip_residues(f.left()), strip_residues(f.right()));
    case op::eventually:
      return formula::eventually(strip_residues(f.left()));
    case op::globally:
      return formula::globally(strip_residues(f.left()));
    case op::until:
      return formula::until(strip_residues(f.left()), strip_residues(f.right()));
  }
  return f;
}

formula progress(const formula& f, const assignment& step) {
  return strip_residues(substitute_outside_next(expand_step(f), step));
}

truth3 eval_prop(const formula& f, const assignment& a) {
  switch (f.kind()) {
    case op::tt: return truth3::top;
    case op::ff: return truth3::bot;
    case op::atom: return lookup(a, f.name());
    case op::lnot: {
      truth3 v = eval_prop(f.left(), a);
      if (v == truth3::top) return truth3::bot;
      if (v == truth3::bot) return truth3::top;
      return truth3::unknown;
    }
    case op::land: {
      truth3 l = eval_prop(f.left(), a);
      if (l == truth3::bot) return truth3::bot;
      truth3 r = eval_prop(f.right(), a);
      if (r == truth3::bot) return truth3::bot;
      if (l == truth3::top && r == truth3::top) return truth3::top;
      return truth3::unknown;
    }
    case op::lor: {
      truth3 l = eval_prop(f.left(), a);
      if (l == truth3::top) return truth3::top;
      truth3 r = eval_prop(f.right(), a);
      if (r == truth3::top) return truth3::top;
      if (l == truth3::bot && r == truth3::bot) return truth3::bot;
      return truth3::unknown;
    }
    default:
      throw std::invalid_argument("eval_prop: temporal operator in " + f.text());
  }
}

}  // namespace pdm
