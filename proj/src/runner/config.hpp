#ifndef CIEMO_RUNNER_CONFIG_HPP
#define CIEMO_RUNNER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "infill/select.hpp"

namespace ciemo {

/// Full parameterization of a run or campaign. Zero-valued size fields mean
/// "resolve the default": d from the problem family, n0 = 11d-1 capped at
/// 100, n_total = 200 (m=2) / 300 (m>=3), reference size 1000 / 990.
struct RunConfig {
    std::string problem = "zdt1";
    std::size_t m = 2;
    std::size_t d = 0;
    std::size_t n0 = 0;
    std::size_t n_total = 0;
    std::size_t t_max = 20;
    InfillVariant variant;
    std::uint64_t seed = 1;
    std::size_t metric_cadence = 1;
    std::size_t reference_size = 0;

    // Campaign-level settings.
    std::vector<std::string> problems; ///< empty: just `problem`
    std::vector<std::string> variants; ///< labels; empty: just `variant`
    std::string baseline = "ci";
    std::size_t repeats = 21;
    std::size_t parallelism = 1;
    std::string out_dir = "out";
};

/// Key=value map with '#' comments and blank lines ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Applies one key=value pair; throws ConfigError for unknown keys or
/// unparsable values.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

RunConfig config_from_map(const std::map<std::string, std::string>& entries);

/// Fills the derived defaults in place and validates the invariants
/// (n0 < n_total, q >= 1, problem known).
void resolve_config(RunConfig& config);

/// Flat key=value echo of a resolved config; parses back to the same config.
std::string echo_config(const RunConfig& config);

/// Stable identifier used as the run_id column and in file names.
std::string run_id_of(const RunConfig& config);

} // namespace ciemo

#endif
