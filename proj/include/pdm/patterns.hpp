#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "pdm/formula.hpp"
#include "pdm/monitor.hpp"

namespace pdm {

// Property templates over placeholder atoms, all scoped to the whole
// trace. Weak-until is spelled out as (p U q) | G p so the grammar stays
// minimal.
struct pattern {
  std::string name;
  std::size_t arity;
};

const std::vector<pattern>& pattern_catalog();

// Builds the named template over the given atoms. Throws
// std::invalid_argument for an unknown name or an atom count that does not
// match the template's arity.
formula instantiate_pattern(const std::string& name,
                            const std::vector<std::string>& atoms);

// Fair-coin valuations for every atom at every step.
trace gen_trace(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                std::size_t len);

}  // namespace pdm
