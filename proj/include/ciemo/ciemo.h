/*
 * ciemo - composite-indicator infill sampling for expensive multi-objective
 * optimization.
 *
 * C interface to the optimizer core. All entry points are thread-safe as
 * long as each ciemo_config handle is used from one thread at a time.
 * Functions return CIEMO_OK on success; on failure they return a status
 * code and ciemo_last_error() carries a human-readable message for the
 * calling thread.
 */

#ifndef CIEMO_CIEMO_H
#define CIEMO_CIEMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CIEMO_API __declspec(dllexport)
#else
#define CIEMO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ciemo_status {
    CIEMO_OK = 0,
    CIEMO_ERROR_INVALID_ARGUMENT = 1,
    CIEMO_ERROR_DIMENSION = 2,
    CIEMO_ERROR_EMPTY_INPUT = 3,
    CIEMO_ERROR_BUDGET_EXHAUSTED = 4,
    CIEMO_ERROR_UNKNOWN_PROBLEM = 5,
    CIEMO_ERROR_ILL_CONDITIONED = 6,
    CIEMO_ERROR_CONFIG = 7,
    CIEMO_ERROR_IO = 8,
    CIEMO_ERROR_INTERNAL = 9,
} ciemo_status;

/* Opaque run/campaign configuration. */
typedef struct ciemo_config ciemo_config;

CIEMO_API const char* ciemo_version(void);
CIEMO_API const char* ciemo_status_name(ciemo_status status);

/* Last error message of the calling thread; empty string when none. */
CIEMO_API const char* ciemo_last_error(void);

/* --- configuration ------------------------------------------------------ */

CIEMO_API ciemo_config* ciemo_config_new(void);
CIEMO_API void ciemo_config_free(ciemo_config* config);

/* Loads key=value lines ('#' starts a comment). Later calls override. */
CIEMO_API ciemo_status ciemo_config_load_file(ciemo_config* config, const char* path);

/* Sets one key (problem, m, d, n0, n_total, t_max, indicators, weights,
 * normalize, q, random_pick, seed, metric_cadence, reference_size, variants,
 * baseline, repeats, parallelism, out_dir). */
CIEMO_API ciemo_status ciemo_config_set(ciemo_config* config, const char* key, const char* value);

/* Writes the resolved key=value echo into buffer (NUL-terminated). *needed
 * receives the required size including the terminator; if buffer_size is too
 * small the content is truncated and the call still succeeds. */
CIEMO_API ciemo_status ciemo_config_echo(const ciemo_config* config, char* buffer,
                                         size_t buffer_size, size_t* needed);

/* --- execution ----------------------------------------------------------- */

/* Runs one optimization with the configured problem/variant/seed. Writes
 * runs.csv, trajectory.csv and config_echo.cfg into out_dir (created if
 * missing). final_igd_plus/final_hv may be NULL. */
CIEMO_API ciemo_status ciemo_run(const ciemo_config* config, const char* out_dir,
                                 double* final_igd_plus, double* final_hv);

/* Runs the problems x variants x repeats grid; seed r uses base seed + r.
 * Writes runs.csv, trajectory.csv, summary.csv and config_echo.cfg. */
CIEMO_API ciemo_status ciemo_campaign(const ciemo_config* config, const char* out_dir);

/* Recomputes the metric trajectory from a runs.csv produced by ciemo_run or
 * ciemo_campaign, using the problem/cadence settings in config. */
CIEMO_API ciemo_status ciemo_recompute_metrics(const ciemo_config* config, const char* runs_csv,
                                               const char* out_csv);

/* Renders a summary.csv as an aligned text table (buffer protocol as in
 * ciemo_config_echo). */
CIEMO_API ciemo_status ciemo_report(const char* summary_csv, char* buffer, size_t buffer_size,
                                    size_t* needed);

/* --- direct computations ------------------------------------------------- */

/* Evaluates benchmark objectives (no budget accounting). x has length d,
 * f_out length m. d = 0 selects the default dimension. */
CIEMO_API ciemo_status ciemo_problem_evaluate(const char* name, size_t m, size_t d,
                                              const double* x, double* f_out);

/* IGD+ between row-major point sets (n_approx x m and n_reference x m). */
CIEMO_API ciemo_status ciemo_igd_plus(const double* approx, size_t n_approx,
                                      const double* reference, size_t n_reference, size_t m,
                                      double* out);

/* Exact hypervolume (m = 2 or 3) of a row-major point set against
 * reference_point (length m). */
CIEMO_API ciemo_status ciemo_hypervolume(const double* points, size_t n_points, size_t m,
                                         const double* reference_point, double* out);

#ifdef __cplusplus
}
#endif

#endif /* CIEMO_CIEMO_H */
