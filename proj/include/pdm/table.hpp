#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdm/formula.hpp"
#include "pdm/truth.hpp"

namespace pdm {

/// Exact fraction with a positive denominator, kept in lowest terms.
/// Weight arithmetic never leaves int64 range for the table sizes the cap
/// admits (numerators are bounded by 3^cap).
struct rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  rational() = default;
  rational(std::int64_t n, std::int64_t d);
  static rational integer(std::int64_t n) { return rational(n, 1); }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;  // "8/9", integers without the "/1"

  friend rational operator+(const rational& a, const rational& b);
  friend rational operator*(const rational& a, const rational& b);
  friend bool operator==(const rational& a, const rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend bool operator<(const rational& a, const rational& b);
};

rational pow(const rational& base, unsigned exp);

/// How a table maps a configuration to a formula.
enum class table_mode {
  propositional,  // plain substitution into the formula
  progression     // one-step unfolding first; X residues stay in the result
};

/// Which atom occurrences count when measuring influence.
enum class count_mode {
  step_only,  // occurrences inside X residues are invisible
  full        // every occurrence counts
};

struct table_row {
  std::vector<truth3> values;  // aligned with analysis_table::vars
  formula result;
};

/// All 3^k verdicts of a formula under partial knowledge of k variables.
/// Rows enumerate values in the order (?, false, true) with the rightmost
/// variable cycling fastest.
struct analysis_table {
  table_mode mode = table_mode::propositional;
  formula source;
  std::vector<std::string> vars;  // lexicographically sorted
  std::vector<table_row> rows;

  assignment row_assignment(std::size_t i) const;
};

inline constexpr std::size_t default_variable_cap = 12;

/// Build the table over all variables of `f`, or over `subset` only (the
/// remaining variables stay symbolic in the results). Throws
/// variable_cap_exceeded when more than `cap` variables would be
/// enumerated, and unknown_variable if `subset` names a variable `f` does
/// not use.
analysis_table build_table(const formula& f, table_mode mode,
                           std::size_t cap = default_variable_cap,
                           const std::optional<std::set<std::string>>& subset =
                               std::nullopt);

/// Share of rows, among those where `var` is unknown, whose result still
/// depends on `var`. Exact: numerator over 3^(k-1).
rational influence_weight(const analysis_table& t, const std::string& var,
                          count_mode counting);

struct weight_set {
  count_mode counting = count_mode::step_only;
  std::map<std::string, rational> by_var;
};

weight_set all_weights(const analysis_table& t, count_mode counting);

/// Indices of rows whose result equals `target`. Throws target_not_in_table
/// when no row matches.
std::vector<std::size_t> rows_with_result(const analysis_table& t,
                                          const formula& target);

/// Header line plus one line per row; values rendered ?, F, T.
std::string to_csv(const analysis_table& t);

}  // namespace pdm
