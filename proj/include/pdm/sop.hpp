#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdm/formula.hpp"
#include "pdm/table.hpp"
#include "pdm/truth.hpp"

namespace pdm {

/// One sign-carrying variable occurrence. A positive literal is satisfied
/// by true, a negative one by false; unknown satisfies neither.
struct literal {
  std::string atom;
  bool positive = true;

  std::string str() const { return positive ? atom : "!" + atom; }

  friend bool operator==(const literal& a, const literal& b) {
    return a.atom == b.atom && a.positive == b.positive;
  }
  friend bool operator<(const literal& a, const literal& b) {
    return a.atom != b.atom ? a.atom < b.atom : a.positive < b.positive;
  }
};

/// Conjunction of literals, at most one per atom, sorted. The empty term
/// is the constant true.
struct term {
  std::vector<literal> lits;

  bool always() const { return lits.empty(); }
  bool has_atom(const std::string& atom) const;
  const literal* find(const std::string& atom) const;
  bool satisfied_by(const assignment& a) const;

  /// True when every literal of *this also occurs in `other` (so *this
  /// covers at least the configurations `other` does).
  bool subsumes(const term& other) const;

  /// The partial assignment that sets exactly this term's literals.
  assignment characteristic() const;

  std::string str() const;  // "a & !b", or "true" when empty
  formula to_formula() const;

  friend bool operator==(const term& a, const term& b) { return a.lits == b.lits; }
  friend bool operator<(const term& a, const term& b);
};

/// Sum-of-products description of the configurations mapped to `target`
/// by an analysis table.
struct sop {
  formula target;
  std::vector<term> terms;  // sorted, deduped

  bool satisfied_by(const assignment& a) const;
  std::string str() const;  // terms joined with " | ", "false" when empty
  formula to_formula() const;
};

/// Apply absorption (drop any term another term subsumes) and merging of
/// complementary pairs (x & rest with !x & rest becomes rest) until
/// nothing changes. Output is sorted by size, then rendering.
std::vector<term> minimize(std::vector<term> terms);

/// Characterise the rows of `t` whose result equals `target` as a
/// minimized sum of products. Throws target_not_in_table when no row
/// matches.
sop synthesize(const analysis_table& t, const formula& target);

/// One sop per distinct row result, ordered by target rendering.
std::vector<sop> synthesize_all(const analysis_table& t);

/// Smallest term, over every sop in `sops`, that `observed` satisfies:
/// fewest literals first, ties broken by rendering. Returns nullopt when
/// no term is satisfied.
std::optional<term> minimal_set(const std::vector<sop>& sops,
                                const assignment& observed);

}  // namespace pdm
