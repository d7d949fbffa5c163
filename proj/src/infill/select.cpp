#include "infill/select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/dominance.hpp"
#include "core/errors.hpp"

namespace ciemo {

namespace {

constexpr double kDuplicateTol = 1e-8;

// Infinity-norm closeness in box-scaled decision space.
bool near_duplicate(const DecisionVector& a, const DecisionVector& b, const ProblemSpec& problem) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double span = problem.upper[k] - problem.lower[k];
        const double diff = std::abs(a[k] - b[k]) / (span > 0.0 ? span : 1.0);
        if (diff > kDuplicateTol) return false;
    }
    return true;
}

std::vector<std::size_t> sorted_by_ci_desc(const std::vector<double>& ci) {
    std::vector<std::size_t> order(ci.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ci[a] > ci[b]; });
    return order;
}

} // namespace

std::string InfillVariant::label() const {
    if (random_pick) return "rand";
    std::string s;
    if (use_i1 && use_i2 && use_i3) {
        s = "ci";
    } else {
        s = "i";
        if (use_i1) s += '1';
        if (use_i2) s += '2';
        if (use_i3) s += '3';
    }
    if (weights == WeightMode::FixedOne) s += "-sw";
    if (!normalize) s += "-nonorm";
    if (q > 1) s += "-q" + std::to_string(q);
    return s;
}

InfillVariant variant_from_label(const std::string& label) {
    InfillVariant v;
    std::string rest = label;

    const auto qpos = rest.rfind("-q");
    if (qpos != std::string::npos && qpos > 0) {
        const std::string digits = rest.substr(qpos + 2);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            v.q = std::stoi(digits);
            rest = rest.substr(0, qpos);
        }
    }
    if (rest.size() > 7 && rest.substr(rest.size() - 7) == "-nonorm") {
        v.normalize = false;
        rest = rest.substr(0, rest.size() - 7);
    }
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "-sw") {
        v.weights = WeightMode::FixedOne;
        rest = rest.substr(0, rest.size() - 3);
    }

    if (rest == "rand") {
        if (v.q != 1 || !v.normalize || v.weights != WeightMode::Random)
            throw Error(ErrorCode::ConfigError, "variant: rand takes no modifiers: " + label);
        v = InfillVariant{};
        v.random_pick = true;
        return v;
    }
    if (rest == "ci") {
        return v;
    }
    if (rest.size() >= 2 && rest[0] == 'i' &&
        rest.find_first_not_of("123", 1) == std::string::npos) {
        v.use_i1 = rest.find('1') != std::string::npos;
        v.use_i2 = rest.find('2') != std::string::npos;
        v.use_i3 = rest.find('3') != std::string::npos;
        return v;
    }
    throw Error(ErrorCode::ConfigError, "unknown variant label: " + label);
}

SelectionResult select(const SurrogatePopulation& pstar, const Database& db,
                       const InfillVariant& variant, const ProblemSpec& problem, RngStream& rng) {
    if (pstar.empty())
        throw Error(ErrorCode::EmptyInput, "select: empty candidate population");
    if (variant.q < 1 || static_cast<std::size_t>(variant.q) > pstar.size())
        throw Error(ErrorCode::InvalidArgument, "select: q must be in [1, |pool|]");
    if (db.empty())
        throw Error(ErrorCode::EmptyInput, "select: empty database");

    // Archive views reused across slots; the archive does not change here.
    const std::vector<ObjectiveVector> db_rows = db.objective_rows();
    std::vector<ObjectiveVector> db_nd_raw;
    for (std::size_t i : nondominated_subset(db_rows)) db_nd_raw.push_back(db_rows[i]);

    SurrogatePopulation pool = pstar;
    SelectionResult result;

    for (int slot = 0; slot < variant.q; ++slot) {
        if (variant.random_pick) {
            // Uniform pick, still guarded against archive duplicates.
            std::vector<std::size_t> order = rng.permutation(pool.size());
            std::size_t pick = pool.size();
            for (std::size_t idx : order) {
                bool dup = false;
                for (const auto& s : db.samples())
                    if (near_duplicate(pool[idx].x, s.x, problem)) { dup = true; break; }
                for (const auto& x : result.chosen_x)
                    if (!dup && near_duplicate(pool[idx].x, x, problem)) { dup = true; break; }
                if (!dup) { pick = idx; break; }
                ++result.duplicate_rejections;
            }
            if (pick == pool.size()) {
                DecisionVector x(problem.d);
                for (std::size_t k = 0; k < problem.d; ++k)
                    x[k] = rng.uniform(problem.lower[k], problem.upper[k]);
                result.chosen_x.push_back(std::move(x));
                result.random_fallback.push_back(true);
            } else {
                result.chosen_x.push_back(pool[pick].x);
                result.random_fallback.push_back(false);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            }
            result.slots.emplace_back();
            continue;
        }

        const NormalizedObjectives norm = normalize_objectives(pool, db);
        std::vector<ObjectiveVector> pool_raw;
        pool_raw.reserve(pool.size());
        for (const auto& c : pool) pool_raw.push_back(c.predicted);

        IndicatorScores scores;
        const std::size_t n = pool.size();
        scores.i1.assign(n, 0.0);
        scores.i2.assign(n, 0.0);
        scores.i3.assign(n, 0.0);

        if (variant.use_i1) {
            scores.i1 = variant.normalize ? distribution_indicator(pool_raw, db_nd_raw)
                                          : min_angle_scores(pool_raw, db_nd_raw);
        }
        if (variant.use_i2) {
            scores.i2 = variant.normalize
                            ? diversity_indicator(norm.candidates, norm.database)
                            : nearest_neighbor_scores(norm.candidates, norm.database);
        }
        if (variant.use_i3) {
            if (variant.normalize) {
                scores.i3 = convergence_indicator(norm.candidates);
            } else {
                scores.i3 = ideal_distance_scores(norm.candidates);
                for (double& v : scores.i3) v = v == 0.0 ? 0.0 : -v;
            }
        }

        if (variant.weights == WeightMode::Random) {
            scores.r1 = rng.uniform();
            scores.r2 = rng.uniform();
            scores.r3 = rng.uniform();
        } else {
            scores.r1 = scores.r2 = scores.r3 = 1.0;
        }

        scores.ci.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            scores.ci[i] = scores.r1 * scores.i1[i] + scores.r2 * scores.i2[i] +
                           scores.r3 * scores.i3[i];

        // Argmax with stable tie-break toward the lowest index, then walk
        // down the ranking past near-duplicates of evaluated points.
        const std::vector<std::size_t> order = sorted_by_ci_desc(scores.ci);
        std::size_t pick = n;
        for (std::size_t idx : order) {
            bool dup = false;
            for (const auto& s : db.samples())
                if (near_duplicate(pool[idx].x, s.x, problem)) { dup = true; break; }
            for (const auto& x : result.chosen_x)
                if (!dup && near_duplicate(pool[idx].x, x, problem)) { dup = true; break; }
            if (!dup) { pick = idx; break; }
            ++result.duplicate_rejections;
        }

        if (pick == n) {
            DecisionVector x(problem.d);
            for (std::size_t k = 0; k < problem.d; ++k)
                x[k] = rng.uniform(problem.lower[k], problem.upper[k]);
            scores.chosen = order.empty() ? 0 : order[0];
            result.chosen_x.push_back(std::move(x));
            result.random_fallback.push_back(true);
            result.slots.push_back(std::move(scores));
        } else {
            scores.chosen = pick;
            result.chosen_x.push_back(pool[pick].x);
            result.random_fallback.push_back(false);
            result.slots.push_back(std::move(scores));
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
    }
    return result;
}

} // namespace ciemo
