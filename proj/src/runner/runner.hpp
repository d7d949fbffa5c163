#ifndef CIEMO_RUNNER_RUNNER_HPP
#define CIEMO_RUNNER_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"
#include "metrics/metrics.hpp"
#include "problems/problems.hpp"
#include "runner/config.hpp"

namespace ciemo {

/// Metric protocol shared by runs and the recompute path: objectives are
/// affinely normalized by the true front's ideal and nadir, IGD+ is taken
/// against the equally normalized reference set, and hypervolume uses the
/// reference point (1.1, ..., 1.1).
class MetricContext {
public:
    MetricContext(const ProblemSpec& spec, std::size_t reference_size);

    double igd_plus_of(const std::vector<ObjectiveVector>& nondominated_raw) const;
    double hv_of(const std::vector<ObjectiveVector>& nondominated_raw) const;

    const std::vector<ObjectiveVector>& reference_raw() const noexcept { return reference_raw_; }
    const ObjectiveVector& front_ideal() const noexcept { return ideal_; }
    const ObjectiveVector& front_nadir() const noexcept { return nadir_; }

    ObjectiveVector normalize(const ObjectiveVector& f) const;

private:
    std::vector<ObjectiveVector> reference_raw_;
    std::vector<ObjectiveVector> reference_norm_;
    ObjectiveVector ideal_;
    ObjectiveVector nadir_;
    ObjectiveVector hv_ref_;
};

struct EvalLogEntry {
    std::size_t eval_index = 0; ///< 0-based, contiguous
    DecisionVector x;
    ObjectiveVector f;
    bool has_weights = false;    ///< false for the initial design and random picks
    bool has_indicators = false; ///< false when the duplicate guard fell back
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    double i1 = 0.0, i2 = 0.0, i3 = 0.0;
};

struct TrajectoryPoint {
    std::size_t eval_count = 0; ///< archive size when the metrics were taken
    double igd_plus = 0.0;
    double hv = 0.0;
};

struct PhaseSeconds {
    double gp_fit = 0.0;
    double search = 0.0;
    double select = 0.0;
    double evaluate = 0.0;
    double metrics = 0.0;
    double total = 0.0;
};

struct RunRecord {
    RunConfig config; ///< resolved
    std::string run_id;
    std::vector<EvalLogEntry> evals;
    std::vector<TrajectoryPoint> trajectory;
    std::vector<EvaluatedSample> final_nondominated;
    PhaseSeconds phase_seconds;
    std::size_t duplicate_fallbacks = 0;
    bool aborted = false;
    std::string abort_reason;

    double final_igd_plus() const { return trajectory.back().igd_plus; }
    double final_hv() const { return trajectory.back().hv; }
};

/// One full optimization run: Latin hypercube initialization, then
/// fit-search-select-evaluate iterations until the budget is spent.
/// Deterministic for a fixed config (all randomness flows from the seed).
RunRecord run_ci_emo(const RunConfig& config);

/// As run_ci_emo but reuses a prebuilt metric context (campaigns share them).
RunRecord run_ci_emo(const RunConfig& config, const MetricContext& metrics);

} // namespace ciemo

#endif
