#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "pdm/formula.hpp"
#include "pdm/truth.hpp"

namespace pdm {

/// Step-stamped atom names ("p@3") mark values that belong to a fixed
/// earlier step. The '@' keeps them disjoint from anything the parser can
/// produce, so stamped and live atoms never collide.
std::string stamped_name(const std::string& atom, std::size_t step);

bool is_stamped(const std::string& name);

/// Split "p@3" into ("p", 3); nullopt for unstamped names.
std::optional<std::pair<std::string, std::size_t>> split_stamp(
    const std::string& name);

/// Rename every unstamped atom outside X subtrees to its step-stamped
/// form. Applied after a step's known values are substituted, this pins
/// the leftovers to that step so later progressions cannot confuse them
/// with fresh occurrences.
formula stamp_outside_next(const formula& f, std::size_t step);

/// Replace stamped atoms whose base belongs to `own` and whose step is
/// recorded in `history` by the recorded constant. Stamped atoms denote
/// fixed steps, so the substitution applies everywhere, X subtrees
/// included. The result is not simplified.
formula substitute_stamped(
    const formula& f,
    const std::map<std::pair<std::size_t, std::string>, bool>& history,
    const std::set<std::string>& own);

/// One progression step under partial knowledge: unfold, substitute the
/// known values, stamp the unknown leftovers with the step, simplify and
/// drop the X wrappers. Unlike plain progression the output may carry
/// stamped atoms; it is exact, not an approximation.
formula progress_stamped(const formula& f, const assignment& known,
                         std::size_t step);

}  // namespace pdm
