#ifndef CIEMO_MOEA_VARIATION_HPP
#define CIEMO_MOEA_VARIATION_HPP

#include <utility>
#include <vector>

#include "core/types.hpp"
#include "sampling/rng.hpp"

namespace ciemo {

/// Simulated binary crossover. p_c gates the whole pair; each variable is
/// exchanged with probability 1/2 using a spread factor drawn from the
/// polynomial distribution with index eta_c. Children are clamped to bounds.
std::pair<DecisionVector, DecisionVector> sbx_crossover(
    const DecisionVector& p1, const DecisionVector& p2, double eta_c, double p_c,
    const std::vector<double>& lower, const std::vector<double>& upper, RngStream& rng);

/// Bounded polynomial mutation with per-gene probability p_m.
DecisionVector polynomial_mutation(const DecisionVector& x, double eta_m, double p_m,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng);

} // namespace ciemo

#endif
