#include "pdm/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pdm/errors.hpp"
#include "pdm/rewrite.hpp"

namespace pdm {

bool interchangeable(const formula& f, const std::string& a,
                     const std::string& b) {
  for (truth3 v : {truth3::top, truth3::bot}) {
    formula fixed_a = substitute(f, {{a, v}});
    formula fixed_b = substitute(f, {{b, v}});
    if (fixed_a != simplify(rename(fixed_b, a, b))) return false;
  }
  return true;
}

equiv_partition partition(const formula& f) {
  std::set<std::string> props = f.props();
  std::vector<std::string> vars(props.begin(), props.end());
  std::vector<std::size_t> root(vars.size());
  std::iota(root.begin(), root.end(), 0);

  auto find = [&](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };

  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (find(i) != find(j) && interchangeable(f, vars[i], vars[j]))
        root[find(j)] = find(i);

  std::map<std::size_t, equiv_class> grouped;
  for (std::size_t i = 0; i < vars.size(); ++i)
    grouped[find(i)].members.push_back(vars[i]);

  equiv_partition out;
  for (auto& [r, c] : grouped) {
    std::sort(c.members.begin(), c.members.end());
    if (c.members.size() >= 2)
      out.classes.push_back(std::move(c));
    else
      out.singletons.push_back(c.members.front());
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const equiv_class& a, const equiv_class& b) {
              return a.members.front() < b.members.front();
            });
  std::sort(out.singletons.begin(), out.singletons.end());
  return out;
}

reduction reduce(const formula& f) {
  reduction r;
  r.original = f;
  equiv_partition p = partition(f);
  r.classes = std::move(p.classes);
  r.singletons = std::move(p.singletons);
  formula cur = f;
  for (const equiv_class& c : r.classes)
    for (const std::string& d : c.dropped()) cur = rename(cur, d, c.rep1());
  r.reduced = simplify(cur);
  return r;
}

rational class_projection_weight(const formula& f, const equiv_class& c,
                                 table_mode tmode, count_mode counting) {
  std::set<std::string> subset{c.rep1()};
  if (c.has_pair()) subset.insert(c.rep2());
  analysis_table t = build_table(f, tmode, default_variable_cap, subset);
  return influence_weight(t, c.rep1(), counting);
}

extended_weights extend_weights(const reduction& r, const weight_set& reduced_ws,
                                count_mode counting, table_mode tmode,
                                std::size_t cap) {
  if (counting != reduced_ws.counting) throw mode_mismatch();

  extended_weights out;
  out.counting = counting;
  const std::size_t n_orig = r.original.props().size();
  const rational one = rational::integer(1);

  // A variable the reduced formula simplified away never shows up in any
  // simplified result, so its weight is zero everywhere.
  auto reduced_weight = [&](const std::string& v) {
    auto it = reduced_ws.by_var.find(v);
    return it == reduced_ws.by_var.end() ? rational::integer(0) : it->second;
  };

  // remaining: variable -> the reduced-table weight it would inherit if no
  // exact recomputation is possible.
  std::vector<std::pair<std::string, rational>> remaining;
  for (const equiv_class& c : r.classes) {
    rational w = reduced_weight(c.rep1());
    if (w == one) {
      for (const std::string& m : c.members) out.by_var[m] = {one, true};
    } else if (r.classes.size() == 1 && r.singletons.empty() &&
               c.members.size() == n_orig) {
      rational lifted = pow(w, static_cast<unsigned>(n_orig - 1));
      for (const std::string& m : c.members) out.by_var[m] = {lifted, true};
    } else {
      for (const std::string& m : c.members) remaining.emplace_back(m, w);
    }
  }
  for (const std::string& s : r.singletons) {
    rational w = reduced_weight(s);
    if (w == one)
      out.by_var[s] = {one, true};
    else if (r.classes.empty())
      out.by_var[s] = {w, true};  // nothing was renamed, weights carry over
    else
      remaining.emplace_back(s, w);
  }
  if (remaining.empty()) return out;

  if (n_orig <= cap) {
    analysis_table full = build_table(r.original, tmode, cap);
    for (const auto& [m, w] : remaining)
      out.by_var[m] = {influence_weight(full, m, counting), true};
  } else {
    for (const auto& [m, w] : remaining) out.by_var[m] = {w, false};
  }
  return out;
}

namespace {

// Insert per-dropped-variable copies into every &/| operand list that
// carries both representatives as images of one another under the
// rep1 -> rep2 renaming. Works bottom-up so nested chains (inside X
// residues in particular) are covered.
formula widen_chains(const formula& f, const std::string& r1,
                     const std::string& r2,
                     const std::vector<std::string>& dropped) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
    case op::atom:
      return f;
    case op::lnot:
      return formula::lnot(widen_chains(f.left(), r1, r2, dropped));
    case op::next:
      return formula::next(widen_chains(f.left(), r1, r2, dropped));
    case op::eventually:
      return formula::eventually(widen_chains(f.left(), r1, r2, dropped));
    case op::globally:
      return formula::globally(widen_chains(f.left(), r1, r2, dropped));
    case op::until:
      return formula::until(widen_chains(f.left(), r1, r2, dropped),
                            widen_chains(f.right(), r1, r2, dropped));
    case op::land:
    case op::lor:
      break;
  }

  const op k = f.kind();
  std::vector<formula> operands;
  std::vector<formula> stack{f};
  while (!stack.empty()) {
    formula g = stack.back();
    stack.pop_back();
    if (g.kind() == k) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    } else {
      operands.push_back(widen_chains(g, r1, r2, dropped));
    }
  }

  std::set<std::string> present;
  for (const formula& g : operands) present.insert(g.text());

  std::vector<formula> additions;
  for (const formula& g : operands) {
    if (!g.contains(r1, true)) continue;
    formula image = simplify(rename(g, r1, r2));
    if (image == g || !present.count(image.text())) continue;
    for (const std::string& d : dropped) {
      formula copy = simplify(rename(g, r1, d));
      if (!present.count(copy.text())) {
        present.insert(copy.text());
        additions.push_back(std::move(copy));
      }
    }
  }

  formula acc = operands.back();
  for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it)
    acc = k == op::land ? formula::land(*it, acc) : formula::lor(*it, acc);
  for (const formula& add : additions)
    acc = k == op::land ? formula::land(add, acc) : formula::lor(add, acc);
  return simplify(acc);
}

void add_literal_sorted(term& t, const literal& l) {
  if (t.has_atom(l.atom)) return;
  t.lits.insert(std::upper_bound(t.lits.begin(), t.lits.end(), l), l);
}

term rename_literal(const term& t, const std::string& from, const std::string& to) {
  term out;
  for (const literal& l : t.lits)
    out.lits.push_back(l.atom == from ? literal{to, l.positive} : l);
  std::sort(out.lits.begin(), out.lits.end());
  return out;
}

}  // namespace

extended_sop extend_boolean(const reduction& r,
                            const analysis_table& reduced_table,
                            const formula& reduced_target) {
  if (reduced_table.source != r.reduced)
    throw not_a_reduced_target(reduced_table.source.text());

  sop base = synthesize(reduced_table, reduced_target);
  formula target = reduced_target;
  std::vector<term> terms = base.terms;

  for (const equiv_class& c : r.classes) {
    std::vector<std::string> dropped = c.dropped();
    if (dropped.empty()) continue;
    const std::string& r1 = c.rep1();
    const std::string& r2 = c.rep2();

    // Presence of representatives outside X residues decides how terms
    // carrying a single representative behave: with one representative
    // still pending in the target, the siblings that were renamed away
    // must all have been observed, so they join the term; otherwise each
    // sibling could have played the representative's role and gets its
    // own copy of the term.
    const bool out1 = target.contains(r1, false);
    const bool out2 = target.contains(r2, false);
    const bool pending_rep = out1 != out2;

    target = widen_chains(target, r1, r2, dropped);

    std::vector<term> next;
    for (const term& t : terms) {
      const literal* l1 = t.find(r1);
      const literal* l2 = t.find(r2);
      if (!l1 && !l2) {
        next.push_back(t);
        continue;
      }
      if ((l1 && l2) || pending_rep) {
        term widened = t;
        bool sign = l1 ? l1->positive : l2->positive;
        for (const std::string& d : dropped)
          add_literal_sorted(widened, literal{d, sign});
        next.push_back(std::move(widened));
      } else {
        next.push_back(t);
        const std::string& rep = l1 ? r1 : r2;
        for (const std::string& d : dropped)
          next.push_back(rename_literal(t, rep, d));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    terms = std::move(next);
  }

  return extended_sop{target, terms};
}

}  // namespace pdm
