#ifndef CIEMO_INFILL_INDICATORS_HPP
#define CIEMO_INFILL_INDICATORS_HPP

#include <vector>

#include "core/types.hpp"
#include "moea/selection.hpp"

namespace ciemo {

/// (v - min) / (max - min); an all-equal input maps to all zeros.
std::vector<double> minmax_normalize(const std::vector<double>& values);

/// Candidate and archive objectives rescaled per objective by the archive's
/// min/max (candidate values may leave [0,1]). A constant archive objective
/// maps to 0 for the archive and scales candidates by sign-preserving offset.
struct NormalizedObjectives {
    std::vector<ObjectiveVector> candidates;
    std::vector<ObjectiveVector> database;
};
NormalizedObjectives normalize_objectives(const SurrogatePopulation& pstar, const Database& db);

/// Angle in radians between objective vectors (cosine clamped to [-1,1],
/// norms floored at 1e-12).
double angle(const ObjectiveVector& a, const ObjectiveVector& b);

/// Raw scores feeding the three indicators. All operate purely on
/// objective-space data.
std::vector<double> min_angle_scores(const std::vector<ObjectiveVector>& pstar_raw,
                                     const std::vector<ObjectiveVector>& db_nd_raw);
std::vector<double> nearest_neighbor_scores(const std::vector<ObjectiveVector>& pstar_norm,
                                            const std::vector<ObjectiveVector>& db_norm);
std::vector<double> ideal_distance_scores(const std::vector<ObjectiveVector>& pstar_norm);

/// I1: min angle to the archive's non-dominated set on raw objectives,
/// min-max normalized to [0,1].
std::vector<double> distribution_indicator(const std::vector<ObjectiveVector>& pstar_raw,
                                           const std::vector<ObjectiveVector>& db_nd_raw);

/// I2: nearest-neighbor distance to the whole archive in normalized
/// objective space, min-max normalized to [0,1].
std::vector<double> diversity_indicator(const std::vector<ObjectiveVector>& pstar_norm,
                                        const std::vector<ObjectiveVector>& db_norm);

/// I3: distance to the ideal point (origin of the normalized space), min-max
/// normalized and negated into [-1,0].
std::vector<double> convergence_indicator(const std::vector<ObjectiveVector>& pstar_norm);

} // namespace ciemo

#endif
