#include "moea/selection.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "core/dominance.hpp"
#include "core/errors.hpp"

namespace ciemo {

namespace {

// Objectives translated by the ideal point and scaled by hyperplane
// intercepts through the extreme points; falls back to the per-objective
// max of the considered members when the hyperplane is degenerate.
std::vector<ObjectiveVector> normalize_for_niching(const std::vector<ObjectiveVector>& objs,
                                                   const ObjectiveVector& ideal) {
    const std::size_t n = objs.size();
    const std::size_t m = ideal.size();

    std::vector<ObjectiveVector> translated(n, ObjectiveVector(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) translated[i][j] = objs[i][j] - ideal[j];

    // Extreme point per axis: member minimizing the achievement scalarizing
    // function with the axis weight vector (off-axis weights 1e-6).
    std::vector<std::size_t> extreme(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            double asf = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double w = (k == j) ? 1.0 : 1e-6;
                asf = std::max(asf, translated[i][k] / w);
            }
            if (asf < best) {
                best = asf;
                extreme[j] = i;
            }
        }
    }

    std::vector<double> intercepts(m, 0.0);
    bool ok = true;
    Eigen::MatrixXd E(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            E(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = translated[extreme[j]][k];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(E);
    if (lu.isInvertible()) {
        const Eigen::VectorXd b = lu.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m)));
        for (std::size_t k = 0; k < m; ++k) {
            const double a = 1.0 / b[static_cast<Eigen::Index>(k)];
            if (!std::isfinite(a) || a <= 1e-12) {
                ok = false;
                break;
            }
            intercepts[k] = a;
        }
    } else {
        ok = false;
    }
    if (!ok) {
        for (std::size_t k = 0; k < m; ++k) {
            double mx = 0.0;
            for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, translated[i][k]);
            intercepts[k] = mx > 1e-12 ? mx : 1.0;
        }
    }

    for (auto& row : translated)
        for (std::size_t k = 0; k < m; ++k) row[k] /= intercepts[k];
    return translated;
}

// Perpendicular distance from point p to the line through the origin along v.
double perpendicular_distance(const ObjectiveVector& p, const std::vector<double>& v) {
    double vv = 0.0, pv = 0.0, pp = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        vv += v[k] * v[k];
        pv += p[k] * v[k];
        pp += p[k] * p[k];
    }
    const double t = pv / vv;
    return std::sqrt(std::max(0.0, pp - t * t * vv));
}

} // namespace

SurrogatePopulation environmental_selection(const SurrogatePopulation& pop,
                                            const ObjectiveVector& ideal,
                                            const ReferenceVectorSet& V, std::size_t N,
                                            RngStream& rng) {
    if (pop.size() < N)
        throw Error(ErrorCode::InvalidArgument, "environmental_selection: population smaller than N");
    if (N == 0) return {};

    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& c : pop) objs.push_back(c.predicted);

    const FrontPartition fronts = fast_nondominated_sort(objs);

    std::vector<std::size_t> retained;
    std::size_t split = fronts.fronts.size();
    for (std::size_t f = 0; f < fronts.fronts.size(); ++f) {
        if (retained.size() + fronts.fronts[f].size() <= N) {
            retained.insert(retained.end(), fronts.fronts[f].begin(), fronts.fronts[f].end());
            if (retained.size() == N) break;
        } else {
            split = f;
            break;
        }
    }

    SurrogatePopulation out;
    out.reserve(N);
    if (retained.size() == N) {
        for (std::size_t i : retained) out.push_back(pop[i]);
        return out;
    }

    const std::vector<std::size_t>& last = fronts.fronts[split];
    const std::size_t slots = N - retained.size();

    // Normalize over the members still in contention.
    std::vector<std::size_t> considered = retained;
    considered.insert(considered.end(), last.begin(), last.end());
    std::vector<ObjectiveVector> considered_objs;
    considered_objs.reserve(considered.size());
    for (std::size_t i : considered) considered_objs.push_back(objs[i]);
    const auto normalized = normalize_for_niching(considered_objs, ideal);

    const std::size_t nv = V.size();
    std::vector<std::size_t> assoc(considered.size());
    std::vector<double> dist(considered.size());
    for (std::size_t i = 0; i < considered.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t j = 0; j < nv; ++j) {
            const double dd = perpendicular_distance(normalized[i], V.vectors[j]);
            if (dd < best) {
                best = dd;
                arg = j;
            }
        }
        assoc[i] = arg;
        dist[i] = best;
    }

    std::vector<std::size_t> niche_count(nv, 0);
    for (std::size_t i = 0; i < retained.size(); ++i) ++niche_count[assoc[i]];

    // Pending last-front members grouped by their reference line.
    std::vector<std::vector<std::size_t>> pending(nv); // indices into `considered`
    for (std::size_t i = retained.size(); i < considered.size(); ++i)
        pending[assoc[i]].push_back(i);

    std::vector<std::size_t> picked;
    picked.reserve(slots);
    while (picked.size() < slots) {
        std::size_t min_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = 0; j < nv; ++j)
            if (!pending[j].empty()) min_count = std::min(min_count, niche_count[j]);

        std::vector<std::size_t> tied;
        for (std::size_t j = 0; j < nv; ++j)
            if (!pending[j].empty() && niche_count[j] == min_count) tied.push_back(j);
        const std::size_t j = tied[rng.uniform_index(tied.size())];

        std::size_t chosen_pos = 0;
        if (niche_count[j] == 0) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t p = 0; p < pending[j].size(); ++p) {
                if (dist[pending[j][p]] < best) {
                    best = dist[pending[j][p]];
                    chosen_pos = p;
                }
            }
        } else {
            chosen_pos = rng.uniform_index(pending[j].size());
        }
        picked.push_back(pending[j][chosen_pos]);
        pending[j].erase(pending[j].begin() + static_cast<std::ptrdiff_t>(chosen_pos));
        ++niche_count[j];
    }

    for (std::size_t i : retained) out.push_back(pop[i]);
    for (std::size_t i : picked) out.push_back(pop[considered[i]]);
    return out;
}

} // namespace ciemo
