#ifndef CIEMO_RUNNER_CAMPAIGN_HPP
#define CIEMO_RUNNER_CAMPAIGN_HPP

#include <string>
#include <vector>

#include "metrics/metrics.hpp"
#include "runner/runner.hpp"

namespace ciemo {

/// Aggregates over the repeats of one (problem, variant) cell.
struct CampaignCell {
    std::string problem;
    std::string variant;
    std::vector<double> final_igd;
    std::vector<double> final_hv;
    double igd_mean = 0.0;
    double igd_std = 0.0;
    double hv_mean = 0.0;
    double hv_std = 0.0;
    Verdict verdict = Verdict::Similar; ///< variant vs baseline on final IGD+
    bool is_baseline = false;
    std::size_t failures = 0;
};

struct CampaignSummary {
    std::vector<CampaignCell> cells;
    std::size_t repeats = 0;
    std::string baseline;
};

struct CampaignResult {
    CampaignSummary summary;
    std::vector<RunRecord> records; ///< deterministic order: problem, variant, repeat
};

/// Runs the problems x variants x repeats grid. Repeat r uses seed
/// config.seed + r. Runs execute in parallel up to config.parallelism;
/// results are deterministic regardless of scheduling. Individual run
/// failures are recorded and the campaign continues.
CampaignResult run_campaign(const RunConfig& config);

} // namespace ciemo

#endif
