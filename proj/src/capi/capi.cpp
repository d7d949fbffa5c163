#include "ciemo/ciemo.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/dominance.hpp"
#include "core/errors.hpp"
#include "metrics/metrics.hpp"
#include "problems/problems.hpp"
#include "runner/campaign.hpp"
#include "runner/config.hpp"
#include "runner/export.hpp"
#include "runner/runner.hpp"

struct ciemo_config {
    ciemo::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

ciemo_status status_of(ciemo::ErrorCode code) {
    using ciemo::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return CIEMO_ERROR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return CIEMO_ERROR_DIMENSION;
    case ErrorCode::EmptyInput: return CIEMO_ERROR_EMPTY_INPUT;
    case ErrorCode::BudgetExhausted: return CIEMO_ERROR_BUDGET_EXHAUSTED;
    case ErrorCode::UnknownProblem: return CIEMO_ERROR_UNKNOWN_PROBLEM;
    case ErrorCode::IllConditioned: return CIEMO_ERROR_ILL_CONDITIONED;
    case ErrorCode::ConfigError: return CIEMO_ERROR_CONFIG;
    case ErrorCode::Io: return CIEMO_ERROR_IO;
    default: return CIEMO_ERROR_INTERNAL;
    }
}

template <typename Fn>
ciemo_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return CIEMO_OK;
    } catch (const ciemo::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CIEMO_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CIEMO_ERROR_INTERNAL;
    }
}

void copy_to_buffer(const std::string& text, char* buffer, size_t buffer_size, size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (!buffer || buffer_size == 0) return;
    const size_t n = std::min(buffer_size - 1, text.size());
    std::memcpy(buffer, text.data(), n);
    buffer[n] = '\0';
}

void require(bool ok, const char* message) {
    if (!ok) throw ciemo::Error(ciemo::ErrorCode::InvalidArgument, message);
}

std::vector<ciemo::ObjectiveVector> rows_of(const double* data, size_t n, size_t m) {
    std::vector<ciemo::ObjectiveVector> rows(n, ciemo::ObjectiveVector(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) rows[i][j] = data[i * m + j];
    return rows;
}

} // namespace

extern "C" {

const char* ciemo_version(void) { return "0.1.0"; }

const char* ciemo_status_name(ciemo_status status) {
    switch (status) {
    case CIEMO_OK: return "ok";
    case CIEMO_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CIEMO_ERROR_DIMENSION: return "dimension mismatch";
    case CIEMO_ERROR_EMPTY_INPUT: return "empty input";
    case CIEMO_ERROR_BUDGET_EXHAUSTED: return "budget exhausted";
    case CIEMO_ERROR_UNKNOWN_PROBLEM: return "unknown problem";
    case CIEMO_ERROR_ILL_CONDITIONED: return "ill-conditioned data";
    case CIEMO_ERROR_CONFIG: return "configuration error";
    case CIEMO_ERROR_IO: return "io error";
    default: return "internal error";
    }
}

const char* ciemo_last_error(void) { return g_last_error.c_str(); }

ciemo_config* ciemo_config_new(void) { return new (std::nothrow) ciemo_config(); }

void ciemo_config_free(ciemo_config* config) { delete config; }

ciemo_status ciemo_config_load_file(ciemo_config* config, const char* path) {
    return guarded([&] {
        require(config && path, "config and path must not be NULL");
        for (const auto& [k, v] : ciemo::load_config_file(path))
            ciemo::apply_config_entry(config->cfg, k, v);
    });
}

ciemo_status ciemo_config_set(ciemo_config* config, const char* key, const char* value) {
    return guarded([&] {
        require(config && key && value, "config, key and value must not be NULL");
        ciemo::apply_config_entry(config->cfg, key, value);
    });
}

ciemo_status ciemo_config_echo(const ciemo_config* config, char* buffer, size_t buffer_size,
                               size_t* needed) {
    return guarded([&] {
        require(config != nullptr, "config must not be NULL");
        ciemo::RunConfig resolved = config->cfg;
        ciemo::resolve_config(resolved);
        copy_to_buffer(ciemo::echo_config(resolved), buffer, buffer_size, needed);
    });
}

ciemo_status ciemo_run(const ciemo_config* config, const char* out_dir, double* final_igd_plus,
                       double* final_hv) {
    return guarded([&] {
        require(config && out_dir, "config and out_dir must not be NULL");
        ciemo::RunConfig cfg = config->cfg;
        cfg.out_dir = out_dir;
        ciemo::resolve_config(cfg);

        ciemo::RunRecord record = ciemo::run_ci_emo(cfg);
        if (record.aborted)
            throw ciemo::Error(ciemo::ErrorCode::IllConditioned,
                               "run aborted: " + record.abort_reason);

        std::filesystem::create_directories(out_dir);
        const std::filesystem::path dir(out_dir);
        const std::vector<ciemo::RunRecord> records{record};
        ciemo::write_runs_csv((dir / "runs.csv").string(), records);
        ciemo::write_trajectory_csv((dir / "trajectory.csv").string(), records);
        ciemo::write_config_echo((dir / "config_echo.cfg").string(), record.config);

        if (final_igd_plus) *final_igd_plus = record.final_igd_plus();
        if (final_hv) *final_hv = record.final_hv();
    });
}

ciemo_status ciemo_campaign(const ciemo_config* config, const char* out_dir) {
    return guarded([&] {
        require(config && out_dir, "config and out_dir must not be NULL");
        ciemo::RunConfig cfg = config->cfg;
        cfg.out_dir = out_dir;
        ciemo::resolve_config(cfg);

        const ciemo::CampaignResult result = ciemo::run_campaign(cfg);

        std::filesystem::create_directories(out_dir);
        const std::filesystem::path dir(out_dir);
        ciemo::write_runs_csv((dir / "runs.csv").string(), result.records);
        ciemo::write_trajectory_csv((dir / "trajectory.csv").string(), result.records);
        ciemo::write_summary_csv((dir / "summary.csv").string(), result.summary);
        ciemo::write_config_echo((dir / "config_echo.cfg").string(), cfg);
    });
}

ciemo_status ciemo_recompute_metrics(const ciemo_config* config, const char* runs_csv,
                                     const char* out_csv) {
    return guarded([&] {
        require(config && runs_csv && out_csv, "arguments must not be NULL");
        ciemo::RunConfig cfg = config->cfg;
        ciemo::resolve_config(cfg);

        const ciemo::ProblemSpec spec = ciemo::make_problem(cfg.problem, cfg.m, cfg.d);
        const ciemo::MetricContext metrics(spec, cfg.reference_size);

        const auto parsed = ciemo::read_runs_csv(runs_csv);
        std::vector<ciemo::RunRecord> records;
        for (const auto& run : parsed) {
            if (run.fs.empty()) continue;
            if (run.fs[0].size() != spec.m)
                throw ciemo::Error(ciemo::ErrorCode::DimensionMismatch,
                                   "runs.csv objective count does not match the problem");
            ciemo::RunRecord rec;
            rec.run_id = run.run_id;
            std::vector<ciemo::ObjectiveVector> archive;
            for (std::size_t i = 0; i < run.fs.size(); ++i) {
                archive.push_back(run.fs[i]);
                const std::size_t count = i + 1;
                if (count < cfg.n0) continue;
                if ((count - cfg.n0) % cfg.metric_cadence != 0 && count != run.fs.size()) continue;
                std::vector<ciemo::ObjectiveVector> nd;
                for (std::size_t k : ciemo::nondominated_subset(archive)) nd.push_back(archive[k]);
                rec.trajectory.push_back(ciemo::TrajectoryPoint{count, metrics.igd_plus_of(nd),
                                                                metrics.hv_of(nd)});
            }
            records.push_back(std::move(rec));
        }
        ciemo::write_trajectory_csv(out_csv, records);
    });
}

ciemo_status ciemo_report(const char* summary_csv, char* buffer, size_t buffer_size,
                          size_t* needed) {
    return guarded([&] {
        require(summary_csv != nullptr, "summary_csv must not be NULL");
        std::ifstream in(summary_csv);
        if (!in)
            throw ciemo::Error(ciemo::ErrorCode::Io,
                               std::string("cannot open ") + summary_csv);

        std::vector<std::vector<std::string>> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::vector<std::string> fields;
            std::stringstream ss(line);
            std::string field;
            while (std::getline(ss, field, ',')) fields.push_back(field);
            rows.push_back(std::move(fields));
        }
        if (rows.empty())
            throw ciemo::Error(ciemo::ErrorCode::Io, "summary file is empty");

        std::vector<size_t> widths;
        for (const auto& row : rows) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        }
        std::ostringstream out;
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                out << row[i];
                if (i + 1 < row.size())
                    out << std::string(widths[i] - row[i].size() + 2, ' ');
            }
            out << '\n';
        }
        copy_to_buffer(out.str(), buffer, buffer_size, needed);
    });
}

ciemo_status ciemo_problem_evaluate(const char* name, size_t m, size_t d, const double* x,
                                    double* f_out) {
    return guarded([&] {
        require(name && x && f_out, "name, x and f_out must not be NULL");
        const ciemo::ProblemSpec spec = ciemo::make_problem(name, m, d);
        const ciemo::DecisionVector xv(x, x + spec.d);
        const ciemo::ObjectiveVector f = ciemo::evaluate_objectives(spec, xv);
        for (size_t j = 0; j < f.size(); ++j) f_out[j] = f[j];
    });
}

ciemo_status ciemo_igd_plus(const double* approx, size_t n_approx, const double* reference,
                            size_t n_reference, size_t m, double* out) {
    return guarded([&] {
        require(approx && reference && out, "arguments must not be NULL");
        *out = ciemo::igd_plus(rows_of(approx, n_approx, m), rows_of(reference, n_reference, m));
    });
}

ciemo_status ciemo_hypervolume(const double* points, size_t n_points, size_t m,
                               const double* reference_point, double* out) {
    return guarded([&] {
        require(points && reference_point && out, "arguments must not be NULL");
        ciemo::ObjectiveVector ref(reference_point, reference_point + m);
        *out = ciemo::hypervolume(rows_of(points, n_points, m), ref);
    });
}

} // extern "C"
