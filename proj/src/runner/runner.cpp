#include "runner/runner.hpp"

#include <chrono>
#include <memory>

#include "core/dominance.hpp"
#include "core/errors.hpp"
#include "moea/sa_nsga3.hpp"
#include "sampling/lhs.hpp"
#include "sampling/rng.hpp"
#include "surrogate/gp.hpp"

namespace ciemo {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ObjectiveVector> nondominated_rows(const Database& db) {
    const auto rows = db.objective_rows();
    std::vector<ObjectiveVector> nd;
    for (std::size_t i : nondominated_subset(rows)) nd.push_back(rows[i]);
    return nd;
}

} // namespace

MetricContext::MetricContext(const ProblemSpec& spec, std::size_t reference_size) {
    reference_raw_ = true_front_reference(spec, reference_size);
    const std::size_t m = spec.m;
    ideal_ = reference_raw_[0];
    nadir_ = reference_raw_[0];
    for (const auto& r : reference_raw_) {
        for (std::size_t j = 0; j < m; ++j) {
            ideal_[j] = std::min(ideal_[j], r[j]);
            nadir_[j] = std::max(nadir_[j], r[j]);
        }
    }
    reference_norm_.reserve(reference_raw_.size());
    for (const auto& r : reference_raw_) reference_norm_.push_back(normalize(r));
    hv_ref_.assign(m, 1.1);
}

ObjectiveVector MetricContext::normalize(const ObjectiveVector& f) const {
    ObjectiveVector out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double span = nadir_[j] - ideal_[j];
        out[j] = (f[j] - ideal_[j]) / (span > 0.0 ? span : 1.0);
    }
    return out;
}

double MetricContext::igd_plus_of(const std::vector<ObjectiveVector>& nd_raw) const {
    std::vector<ObjectiveVector> approx;
    approx.reserve(nd_raw.size());
    for (const auto& a : nd_raw) approx.push_back(normalize(a));
    return igd_plus(approx, reference_norm_);
}

double MetricContext::hv_of(const std::vector<ObjectiveVector>& nd_raw) const {
    std::vector<ObjectiveVector> approx;
    approx.reserve(nd_raw.size());
    for (const auto& a : nd_raw) approx.push_back(normalize(a));
    return hypervolume(approx, hv_ref_);
}

RunRecord run_ci_emo(const RunConfig& config) {
    RunConfig resolved = config;
    resolve_config(resolved);
    const ProblemSpec spec = make_problem(resolved.problem, resolved.m, resolved.d);
    const MetricContext metrics(spec, resolved.reference_size);
    return run_ci_emo(resolved, metrics);
}

RunRecord run_ci_emo(const RunConfig& config, const MetricContext& metrics) {
    RunConfig cfg = config;
    resolve_config(cfg);

    RunRecord record;
    record.config = cfg;
    record.run_id = run_id_of(cfg);

    const ProblemSpec spec = make_problem(cfg.problem, cfg.m, cfg.d);
    EvaluationBudget budget(cfg.n_total);

    RngStream init_rng(cfg.seed, "init");
    RngStream moea_rng(cfg.seed, "moea");
    RngStream weights_rng(cfg.seed, "weights");
    RngStream gp_rng(cfg.seed, "gp");

    Database db(spec.d, spec.m);

    const auto run_start = std::chrono::steady_clock::now();

    auto record_metrics_if_due = [&]() {
        const std::size_t count = db.size();
        if (count < cfg.n0) return;
        const bool due = (count - cfg.n0) % cfg.metric_cadence == 0 || count == cfg.n_total;
        if (!due) return;
        const auto t0 = std::chrono::steady_clock::now();
        const auto nd = nondominated_rows(db);
        record.trajectory.push_back(
            TrajectoryPoint{count, metrics.igd_plus_of(nd), metrics.hv_of(nd)});
        record.phase_seconds.metrics += seconds_since(t0);
    };

    try {
        // Initial design.
        {
            const auto t0 = std::chrono::steady_clock::now();
            const auto design = latin_hypercube(cfg.n0, spec, init_rng);
            for (const auto& x : design) {
                ObjectiveVector f = evaluate(spec, x, budget);
                EvalLogEntry entry;
                entry.eval_index = db.size();
                entry.x = x;
                entry.f = f;
                record.evals.push_back(entry);
                db.append(x, std::move(f));
            }
            record.phase_seconds.evaluate += seconds_since(t0);
        }
        record_metrics_if_due();

        SaNsga3Params search_params = default_sa_nsga3_params(spec.m, cfg.n0);
        search_params.t_max = cfg.t_max;

        while (!budget.exhausted()) {
            // Fit one model per objective on the whole archive.
            const auto t_fit = std::chrono::steady_clock::now();
            GpFitOptions gp_opts;
            gp_opts.x_lower = spec.lower;
            gp_opts.x_upper = spec.upper;
            std::vector<DecisionVector> X;
            X.reserve(db.size());
            for (const auto& s : db.samples()) X.push_back(s.x);
            std::vector<std::unique_ptr<GpModel>> models;
            std::vector<const Surrogate*> model_views;
            for (std::size_t j = 0; j < spec.m; ++j) {
                std::vector<double> y(db.size());
                for (std::size_t i = 0; i < db.size(); ++i) y[i] = db[i].f[j];
                models.push_back(std::make_unique<GpModel>(GpModel::fit(X, y, gp_opts, gp_rng)));
                model_views.push_back(models.back().get());
            }
            record.phase_seconds.gp_fit += seconds_since(t_fit);

            const auto t_search = std::chrono::steady_clock::now();
            const SurrogatePopulation pstar =
                sa_nsga3(db, model_views, search_params, spec, moea_rng);
            record.phase_seconds.search += seconds_since(t_search);

            const auto t_select = std::chrono::steady_clock::now();
            InfillVariant variant = cfg.variant;
            variant.q = static_cast<int>(
                std::min<std::size_t>(static_cast<std::size_t>(variant.q), budget.remaining()));
            variant.q = static_cast<int>(
                std::min<std::size_t>(static_cast<std::size_t>(variant.q), pstar.size()));
            const SelectionResult sel = select(pstar, db, variant, spec, weights_rng);
            record.phase_seconds.select += seconds_since(t_select);

            for (std::size_t slot = 0; slot < sel.chosen_x.size(); ++slot) {
                const auto t_eval = std::chrono::steady_clock::now();
                ObjectiveVector f = evaluate(spec, sel.chosen_x[slot], budget);
                record.phase_seconds.evaluate += seconds_since(t_eval);

                EvalLogEntry entry;
                entry.eval_index = db.size();
                entry.x = sel.chosen_x[slot];
                entry.f = f;
                if (!cfg.variant.random_pick) {
                    const IndicatorScores& s = sel.slots[slot];
                    entry.has_weights = true;
                    entry.r1 = s.r1;
                    entry.r2 = s.r2;
                    entry.r3 = s.r3;
                    if (!sel.random_fallback[slot]) {
                        entry.has_indicators = true;
                        entry.i1 = s.i1[s.chosen];
                        entry.i2 = s.i2[s.chosen];
                        entry.i3 = s.i3[s.chosen];
                    }
                }
                if (sel.random_fallback[slot]) ++record.duplicate_fallbacks;
                record.evals.push_back(entry);
                db.append(sel.chosen_x[slot], std::move(f));
                record_metrics_if_due();
            }
        }
    } catch (const Error& e) {
        record.aborted = true;
        record.abort_reason = e.what();
    }

    if (!record.aborted) {
        const auto rows = db.objective_rows();
        for (std::size_t i : nondominated_subset(rows))
            record.final_nondominated.push_back(db[i]);
    }
    record.phase_seconds.total = seconds_since(run_start);
    return record;
}

} // namespace ciemo
