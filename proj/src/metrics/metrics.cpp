#include "metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/errors.hpp"

namespace ciemo {

double igd_plus(const std::vector<ObjectiveVector>& approx,
                const std::vector<ObjectiveVector>& reference) {
    if (approx.empty() || reference.empty())
        throw Error(ErrorCode::EmptyInput, "igd_plus: empty input set");
    const std::size_t m = reference[0].size();
    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : approx) {
            if (a.size() != m)
                throw Error(ErrorCode::DimensionMismatch, "igd_plus: objective count mismatch");
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double diff = std::max(a[k] - r[k], 0.0);
                s += diff * diff;
            }
            best = std::min(best, s);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

namespace {

// 2D hypervolume by a sorted sweep over the points strictly inside the
// reference box.
double hv2(std::vector<ObjectiveVector> pts, double r1, double r2) {
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](const ObjectiveVector& p) { return p[0] >= r1 || p[1] >= r2; }),
              pts.end());
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double area = 0.0;
    double prev_f2 = r2;
    for (const auto& p : pts) {
        if (p[1] < prev_f2) {
            area += (r1 - p[0]) * (prev_f2 - p[1]);
            prev_f2 = p[1];
        }
    }
    return area;
}

// 3D hypervolume by slicing along the third objective: between consecutive
// f3 levels the dominated area is the 2D hypervolume of everything at or
// below the slice.
double hv3(std::vector<ObjectiveVector> pts, const ObjectiveVector& ref) {
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](const ObjectiveVector& p) {
                                 return p[0] >= ref[0] || p[1] >= ref[1] || p[2] >= ref[2];
                             }),
              pts.end());
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(),
              [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[2] < b[2]; });

    double volume = 0.0;
    std::vector<ObjectiveVector> slice;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        slice.push_back({pts[i][0], pts[i][1]});
        const double z_lo = pts[i][2];
        const double z_hi = (i + 1 < pts.size()) ? pts[i + 1][2] : ref[2];
        if (z_hi > z_lo)
            volume += hv2(slice, ref[0], ref[1]) * (z_hi - z_lo);
    }
    return volume;
}

} // namespace

double hypervolume(const std::vector<ObjectiveVector>& approx, const ObjectiveVector& ref_point) {
    if (approx.empty())
        throw Error(ErrorCode::EmptyInput, "hypervolume: empty input set");
    const std::size_t m = ref_point.size();
    for (const auto& a : approx)
        if (a.size() != m)
            throw Error(ErrorCode::DimensionMismatch, "hypervolume: objective count mismatch");
    if (m == 2) return hv2(approx, ref_point[0], ref_point[1]);
    if (m == 3) return hv3(approx, ref_point);
    throw Error(ErrorCode::InvalidArgument, "hypervolume: exact algorithm supports m in {2, 3}");
}

Verdict wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                          double alpha) {
    const std::size_t n1 = a.size(), n2 = b.size();
    if (n1 < 5 || n2 < 5)
        throw Error(ErrorCode::InvalidArgument, "wilcoxon_rank_sum: need at least 5 samples each");

    struct Tagged {
        double value;
        bool from_a;
    };
    std::vector<Tagged> all;
    all.reserve(n1 + n2);
    for (double v : a) all.push_back({v, true});
    for (double v : b) all.push_back({v, false});
    std::sort(all.begin(), all.end(),
              [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

    // Midranks with tie bookkeeping for the variance correction.
    const std::size_t n = n1 + n2;
    std::vector<double> rank(n);
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && all[j + 1].value == all[i].value) ++j;
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[k] = mid;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }

    double w = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        if (all[k].from_a) w += rank[k];

    const double dn = static_cast<double>(n);
    const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2);
    const double mean_w = dn1 * (dn + 1.0) / 2.0;
    const double var_w = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (var_w <= 0.0) return Verdict::Similar; // everything tied

    double z = w - mean_w;
    z -= (z > 0.0 ? 0.5 : (z < 0.0 ? -0.5 : 0.0)); // continuity correction
    z /= std::sqrt(var_w);

    // Two-sided p-value under the normal approximation.
    const double p = std::erfc(std::abs(z) / std::sqrt(2.0));
    if (p >= alpha) return Verdict::Similar;

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t k = v.size();
        return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
    };
    const double ma = median(a), mb = median(b);
    if (ma < mb) return Verdict::Better;
    if (ma > mb) return Verdict::Worse;
    return Verdict::Similar;
}

std::string verdict_symbol(Verdict v) {
    switch (v) {
    case Verdict::Better: return "+";
    case Verdict::Worse: return "-";
    default: return "~";
    }
}

} // namespace ciemo
