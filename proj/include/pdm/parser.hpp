#pragma once

#include <string>

#include "pdm/formula.hpp"

namespace pdm {

/// Parse an LTL formula.
///
/// Grammar, loosest binding first (binary operators associate to the right):
///   until  := or ('U' until)?
///   or     := and ('|' or)?
///   and    := unary ('&' and)?
///   unary  := ('!' | 'X' | 'F' | 'G') unary | primary
///   primary:= 'true' | 'false' | atom | '(' until ')'
///
/// Atoms match [a-zA-Z_][a-zA-Z0-9_]* and may not be one of the reserved
/// words true, false, U, X, F, G. Throws parse_error on bad input.
formula parse(const std::string& text);

/// True if `name` is usable as an atom in the concrete syntax.
bool is_valid_atom_name(const std::string& name);

}  // namespace pdm
