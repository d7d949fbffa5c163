#ifndef CIEMO_CORE_DOMINANCE_HPP
#define CIEMO_CORE_DOMINANCE_HPP

#include <cstddef>
#include <vector>

#include "core/types.hpp"

namespace ciemo {

/// Pareto dominance (minimization): a dominates b iff a <= b componentwise
/// with strict improvement in at least one component. Exact floating-point
/// comparison, no tolerance.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Indices of all points not dominated by any other point. Duplicates of a
/// non-dominated value are all retained.
std::vector<std::size_t> nondominated_subset(const std::vector<ObjectiveVector>& points);

/// Fast non-dominated sort (domination-count bookkeeping). fronts[0] equals
/// nondominated_subset of the input.
FrontPartition fast_nondominated_sort(const std::vector<ObjectiveVector>& points);

/// Per-objective minimum over the archive.
ObjectiveVector ideal_point(const Database& db);

} // namespace ciemo

#endif
