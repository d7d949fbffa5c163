// Command-line harness over the ciemo shared library. Talks to the core
// exclusively through the public C interface.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ciemo/ciemo.h"

namespace {

struct ConfigHandle {
    ciemo_config* ptr;
    ConfigHandle() : ptr(ciemo_config_new()) {}
    ~ConfigHandle() { ciemo_config_free(ptr); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int fail(ciemo_status status) {
    std::fprintf(stderr, "error: %s: %s\n", ciemo_status_name(status), ciemo_last_error());
    return 1;
}

// Every config key doubles as a CLI flag; values are passed through as text.
struct KeyedOptions {
    std::vector<std::pair<std::string, std::string>> entries;

    void register_on(CLI::App* app) {
        static const char* keys[] = {"problem",   "m",        "d",           "n0",
                                     "n_total",   "t_max",    "indicators",  "weights",
                                     "normalize", "q",        "random_pick", "seed",
                                     "metric_cadence", "reference_size", "variants",
                                     "baseline",  "repeats",  "parallelism"};
        for (const char* key : keys) {
            app->add_option_function<std::string>(
                std::string("--") + key,
                [this, key](const std::string& value) { entries.emplace_back(key, value); });
        }
    }

    ciemo_status apply(ciemo_config* config) const {
        for (const auto& [key, value] : entries) {
            const ciemo_status s = ciemo_config_set(config, key.c_str(), value.c_str());
            if (s != CIEMO_OK) return s;
        }
        return CIEMO_OK;
    }
};

int load_into(ConfigHandle& handle, const std::string& config_path, const KeyedOptions& options) {
    if (!config_path.empty()) {
        const ciemo_status s = ciemo_config_load_file(handle.ptr, config_path.c_str());
        if (s != CIEMO_OK) return fail(s);
    }
    const ciemo_status s = options.apply(handle.ptr);
    if (s != CIEMO_OK) return fail(s);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite-indicator infill sampling harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string runs_csv;
    std::string out_csv = "trajectory_recomputed.csv";
    std::string summary_csv;

    KeyedOptions run_keys, campaign_keys, metrics_keys;

    CLI::App* run = app.add_subcommand("run", "execute a single optimization run");
    run->add_option("--config", config_path, "key=value configuration file");
    run->add_option("--out_dir", out_dir, "output directory");
    run_keys.register_on(run);

    CLI::App* campaign = app.add_subcommand("campaign", "run a problems x variants x repeats grid");
    campaign->add_option("--config", config_path, "key=value configuration file");
    campaign->add_option("--out_dir", out_dir, "output directory");
    campaign_keys.register_on(campaign);

    CLI::App* metrics = app.add_subcommand("metrics", "recompute metrics from a runs.csv");
    metrics->add_option("--config", config_path, "key=value configuration file");
    metrics->add_option("--runs", runs_csv, "input runs.csv")->required();
    metrics->add_option("--out", out_csv, "output trajectory csv");
    metrics_keys.register_on(metrics);

    CLI::App* report = app.add_subcommand("report", "print a summary.csv as a table");
    report->add_option("--summary", summary_csv, "input summary.csv")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        ConfigHandle handle;
        if (int rc = load_into(handle, config_path, run_keys)) return rc;
        double igd = 0.0, hv = 0.0;
        const ciemo_status s = ciemo_run(handle.ptr, out_dir.c_str(), &igd, &hv);
        if (s != CIEMO_OK) return fail(s);
        std::printf("run complete: igd_plus=%.9g hv=%.9g outputs=%s\n", igd, hv, out_dir.c_str());
        return 0;
    }
    if (campaign->parsed()) {
        ConfigHandle handle;
        if (int rc = load_into(handle, config_path, campaign_keys)) return rc;
        const ciemo_status s = ciemo_campaign(handle.ptr, out_dir.c_str());
        if (s != CIEMO_OK) return fail(s);
        std::printf("campaign complete: outputs=%s\n", out_dir.c_str());
        return 0;
    }
    if (metrics->parsed()) {
        ConfigHandle handle;
        if (int rc = load_into(handle, config_path, metrics_keys)) return rc;
        const ciemo_status s = ciemo_recompute_metrics(handle.ptr, runs_csv.c_str(), out_csv.c_str());
        if (s != CIEMO_OK) return fail(s);
        std::printf("metrics written to %s\n", out_csv.c_str());
        return 0;
    }
    if (report->parsed()) {
        size_t needed = 0;
        ciemo_status s = ciemo_report(summary_csv.c_str(), nullptr, 0, &needed);
        if (s != CIEMO_OK) return fail(s);
        std::string buffer(needed, '\0');
        s = ciemo_report(summary_csv.c_str(), buffer.data(), buffer.size(), &needed);
        if (s != CIEMO_OK) return fail(s);
        std::fputs(buffer.c_str(), stdout);
        return 0;
    }
    return 1;
}
