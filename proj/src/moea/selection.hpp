#ifndef CIEMO_MOEA_SELECTION_HPP
#define CIEMO_MOEA_SELECTION_HPP

#include <vector>

#include "core/types.hpp"
#include "moea/reference_vectors.hpp"
#include "sampling/rng.hpp"

namespace ciemo {

/// Decision vector with surrogate-predicted objectives (and predictive
/// variance, one entry per objective).
struct Candidate {
    DecisionVector x;
    ObjectiveVector predicted;
    std::vector<double> variance;
};

using SurrogatePopulation = std::vector<Candidate>;

/// NSGA-III environmental selection: keep whole fronts while they fit, then
/// fill from the splitting front by reference-line niching. `ideal` is the
/// translation point; intercepts come from the standard extreme-point
/// construction with a per-objective-max fallback when degenerate.
SurrogatePopulation environmental_selection(const SurrogatePopulation& pop,
                                            const ObjectiveVector& ideal,
                                            const ReferenceVectorSet& V, std::size_t N,
                                            RngStream& rng);

} // namespace ciemo

#endif
