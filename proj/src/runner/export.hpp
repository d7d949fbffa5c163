#ifndef CIEMO_RUNNER_EXPORT_HPP
#define CIEMO_RUNNER_EXPORT_HPP

#include <string>
#include <vector>

#include "runner/campaign.hpp"
#include "runner/runner.hpp"

namespace ciemo {

/// Formats a double with 9 significant digits (the on-disk float format).
std::string format_float(double v);

/// runs.csv: one row per expensive evaluation
/// (run_id, eval_index, x*, f*, r1..r3, i1..i3; indicator fields blank where
/// not applicable).
void write_runs_csv(const std::string& path, const std::vector<RunRecord>& records);

/// trajectory.csv: run_id, eval_index, igd_plus, hv at the metric cadence.
void write_trajectory_csv(const std::string& path, const std::vector<RunRecord>& records);

/// summary.csv: problem, variant, mean, std, verdict (IGD+ against the
/// campaign baseline).
void write_summary_csv(const std::string& path, const CampaignSummary& summary);

/// Machine-readable echo of the resolved configuration (seed included).
void write_config_echo(const std::string& path, const RunConfig& config);

/// Raw evaluation rows parsed back from runs.csv, grouped by run in file
/// order. Used to recompute metrics offline.
struct ParsedRun {
    std::string run_id;
    std::vector<DecisionVector> xs;
    std::vector<ObjectiveVector> fs;
};
std::vector<ParsedRun> read_runs_csv(const std::string& path);

} // namespace ciemo

#endif
