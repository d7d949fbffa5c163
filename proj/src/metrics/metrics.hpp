#ifndef CIEMO_METRICS_METRICS_HPP
#define CIEMO_METRICS_METRICS_HPP

#include <string>
#include <vector>

#include "core/types.hpp"

namespace ciemo {

/// IGD+: mean over reference points of the modified distance
/// ||max(a - r, 0)|| to the nearest approximation point. Lower is better.
double igd_plus(const std::vector<ObjectiveVector>& approx,
                const std::vector<ObjectiveVector>& reference);

/// Exact hypervolume dominated by `approx` up to ref_point, for m in {2, 3}
/// (sorted sweep and dimension-sweep slicing). Points not strictly better
/// than the reference point in every objective contribute nothing.
double hypervolume(const std::vector<ObjectiveVector>& approx, const ObjectiveVector& ref_point);

enum class Verdict { Better, Worse, Similar };

/// Two-sided rank-sum test (normal approximation, tie correction, continuity
/// correction). When significant at `alpha`, the direction comes from the
/// median: smaller median of `a` means Better (minimization).
Verdict wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b, double alpha);

std::string verdict_symbol(Verdict v);

struct MetricReport {
    double igd_plus = 0.0;
    double hv = 0.0;
    std::size_t n_solutions = 0;
    std::string reference_meta;
};

} // namespace ciemo

#endif
