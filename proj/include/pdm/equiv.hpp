#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdm/formula.hpp"
#include "pdm/sop.hpp"
#include "pdm/table.hpp"

namespace pdm {

/// Variables whose observations are interchangeable for the formula at
/// hand. Members are sorted; the first two act as the representatives
/// that survive reduction.
struct equiv_class {
  std::vector<std::string> members;

  const std::string& rep1() const { return members.front(); }
  bool has_pair() const { return members.size() >= 2; }
  const std::string& rep2() const { return members[1]; }

  /// Members beyond the two representatives; reduction renames these away.
  std::vector<std::string> dropped() const {
    if (members.size() <= 2) return {};
    return {members.begin() + 2, members.end()};
  }
};

/// Two variables are interchangeable when fixing either to a constant
/// yields the same formula up to swapping their names, for both constants.
bool interchangeable(const formula& f, const std::string& a,
                     const std::string& b);

/// Interchangeability classes (two members or more) plus the variables
/// that pair with nothing. Together they cover props(f) exactly.
struct equiv_partition {
  std::vector<equiv_class> classes;
  std::vector<std::string> singletons;
};

/// Group the formula's variables by interchangeability (the pairwise
/// relation is closed transitively). Classes are ordered by their
/// smallest member; singletons are sorted.
equiv_partition partition(const formula& f);

struct reduction {
  formula original;
  formula reduced;
  std::vector<equiv_class> classes;
  std::vector<std::string> singletons;
};

/// Shrink the formula by renaming everything beyond two representatives
/// per class onto the first representative; duplicates then collapse.
reduction reduce(const formula& f);

/// Influence weight of a class measured on a two-variable projection:
/// only the representatives are enumerated, everything else stays
/// symbolic, so the denominator is exactly 3.
rational class_projection_weight(const formula& f, const equiv_class& c,
                                 table_mode tmode, count_mode counting);

struct extended_weight {
  rational value;
  bool exact = true;
};

struct extended_weights {
  count_mode counting = count_mode::step_only;
  std::map<std::string, extended_weight> by_var;
};

/// Map weights measured on the reduced formula back to every original
/// variable. Per class, in order: weight one carries over exactly; a
/// single class spanning all n variables gets the projection weight
/// raised to n-1 (exact); otherwise the original table is rebuilt when it
/// fits under `cap` (exact), or the representative's reduced weight is
/// inherited and flagged approximate. Throws mode_mismatch when
/// `counting` disagrees with how `reduced_ws` was measured.
extended_weights extend_weights(const reduction& r, const weight_set& reduced_ws,
                                count_mode counting, table_mode tmode,
                                std::size_t cap = default_variable_cap);

struct extended_sop {
  formula target;  // the original-table result the reduced target stands for
  std::vector<term> terms;
};

/// Rebuild the original formula's configuration description from one
/// synthesized on the reduced table. `reduced_table` must be a table of
/// r.reduced (throws not_a_reduced_target otherwise); the target must be
/// one of its results (throws target_not_in_table).
extended_sop extend_boolean(const reduction& r,
                            const analysis_table& reduced_table,
                            const formula& reduced_target);

}  // namespace pdm
