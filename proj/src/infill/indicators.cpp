#include "infill/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ciemo {

std::vector<double> minmax_normalize(const std::vector<double>& values) {
    if (values.empty())
        throw Error(ErrorCode::EmptyInput, "minmax_normalize: empty input");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(values.size(), 0.0);
    if (hi > lo) {
        for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / (hi - lo);
    }
    return out;
}

NormalizedObjectives normalize_objectives(const SurrogatePopulation& pstar, const Database& db) {
    if (db.empty())
        throw Error(ErrorCode::EmptyInput, "normalize_objectives: empty database");
    const std::size_t m = db.objectives();
    const ObjectiveVector& fmin = db.ideal();
    const ObjectiveVector& fmax = db.nadir();

    std::vector<double> span(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double s = fmax[j] - fmin[j];
        span[j] = s > 0.0 ? s : 1.0; // constant archive objective: offset only
    }

    NormalizedObjectives out;
    out.database.reserve(db.size());
    for (const auto& s : db.samples()) {
        ObjectiveVector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = (s.f[j] - fmin[j]) / span[j];
        out.database.push_back(std::move(row));
    }
    out.candidates.reserve(pstar.size());
    for (const auto& c : pstar) {
        ObjectiveVector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = (c.predicted[j] - fmin[j]) / span[j];
        out.candidates.push_back(std::move(row));
    }
    return out;
}

double angle(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "angle: length mismatch");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    const double denom = std::max(std::sqrt(na), 1e-12) * std::max(std::sqrt(nb), 1e-12);
    return std::acos(std::clamp(dot / denom, -1.0, 1.0));
}

std::vector<double> min_angle_scores(const std::vector<ObjectiveVector>& pstar_raw,
                                     const std::vector<ObjectiveVector>& db_nd_raw) {
    if (db_nd_raw.empty())
        throw Error(ErrorCode::EmptyInput, "min_angle_scores: empty non-dominated set");
    std::vector<double> theta(pstar_raw.size());
    for (std::size_t i = 0; i < pstar_raw.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& y : db_nd_raw) best = std::min(best, angle(pstar_raw[i], y));
        theta[i] = best;
    }
    return theta;
}

std::vector<double> nearest_neighbor_scores(const std::vector<ObjectiveVector>& pstar_norm,
                                            const std::vector<ObjectiveVector>& db_norm) {
    if (db_norm.empty())
        throw Error(ErrorCode::EmptyInput, "nearest_neighbor_scores: empty archive");
    std::vector<double> dc(pstar_norm.size());
    for (std::size_t i = 0; i < pstar_norm.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& y : db_norm) {
            double s = 0.0;
            for (std::size_t k = 0; k < y.size(); ++k) {
                const double dx = pstar_norm[i][k] - y[k];
                s += dx * dx;
            }
            best = std::min(best, s);
        }
        dc[i] = std::sqrt(best);
    }
    return dc;
}

std::vector<double> ideal_distance_scores(const std::vector<ObjectiveVector>& pstar_norm) {
    std::vector<double> dz(pstar_norm.size());
    for (std::size_t i = 0; i < pstar_norm.size(); ++i) {
        double s = 0.0;
        for (double v : pstar_norm[i]) s += v * v;
        dz[i] = std::sqrt(s);
    }
    return dz;
}

std::vector<double> distribution_indicator(const std::vector<ObjectiveVector>& pstar_raw,
                                           const std::vector<ObjectiveVector>& db_nd_raw) {
    return minmax_normalize(min_angle_scores(pstar_raw, db_nd_raw));
}

std::vector<double> diversity_indicator(const std::vector<ObjectiveVector>& pstar_norm,
                                        const std::vector<ObjectiveVector>& db_norm) {
    return minmax_normalize(nearest_neighbor_scores(pstar_norm, db_norm));
}

std::vector<double> convergence_indicator(const std::vector<ObjectiveVector>& pstar_norm) {
    std::vector<double> i3 = minmax_normalize(ideal_distance_scores(pstar_norm));
    for (double& v : i3) v = v == 0.0 ? 0.0 : -v;
    return i3;
}

} // namespace ciemo
