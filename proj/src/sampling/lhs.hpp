#ifndef CIEMO_SAMPLING_LHS_HPP
#define CIEMO_SAMPLING_LHS_HPP

#include <vector>

#include "core/types.hpp"
#include "problems/problems.hpp"
#include "sampling/rng.hpp"

namespace ciemo {

/// Latin hypercube design of n points: each dimension is split into n
/// equal-width strata, strata are assigned by a random permutation, and the
/// position inside each stratum is uniform.
std::vector<DecisionVector> latin_hypercube(std::size_t n, const ProblemSpec& spec, RngStream& rng);

} // namespace ciemo

#endif
