#pragma once

#include <string>

#include "pdm/formula.hpp"
#include "pdm/truth.hpp"

namespace pdm {

/// Normalise a formula without changing its meaning:
///   - fold constants (true & f, !false, double negation, ...)
///   - flatten &/| chains, sort operands by rendering, drop duplicates,
///     rebuild right-associated
/// Temporal operators are kept in place; only their arguments are
/// normalised. G true is not reduced, so progression residues stay visible.
formula simplify(const formula& f);

/// Replace atoms by constants everywhere (unknown entries keep the atom
/// symbolic), then simplify.
formula substitute(const formula& f, const assignment& a);

/// Like substitute, but X-subtrees are left untouched: they talk about
/// later steps, so current-step observations must not reach inside.
formula substitute_outside_next(const formula& f, const assignment& a);

/// Textual rename of one atom. No simplification is applied.
formula rename(const formula& f, const std::string& from, const std::string& to);

/// One-step unfolding: F, G and U at the current step are rewritten into
/// a now-part and an X-wrapped rest (F f => f | X F f, and so on). X nodes
/// are frozen as-is, and so is everything inside them.
formula expand_step(const formula& f);

/// Remove every outermost X wrapper, keeping its subtree verbatim. Applied
/// after a step's values have been substituted, this turns "what must hold
/// from the next step on" into the next step's obligation.
formula strip_residues(const formula& f);

/// Full progression: unfold, substitute the step's values outside X,
/// simplify, drop the X wrappers.
formula progress(const formula& f, const assignment& step);

/// Three-valued propositional evaluation (unknown propagates unless a
/// constant decides the connective). Throws std::invalid_argument on
/// temporal operators.
truth3 eval_prop(const formula& f, const assignment& a);

}  // namespace pdm
