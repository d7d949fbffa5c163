#include "moea/variation.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ciemo {

std::pair<DecisionVector, DecisionVector> sbx_crossover(
    const DecisionVector& p1, const DecisionVector& p2, double eta_c, double p_c,
    const std::vector<double>& lower, const std::vector<double>& upper, RngStream& rng) {
    const std::size_t d = p1.size();
    if (p2.size() != d || lower.size() != d || upper.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "sbx_crossover: length mismatch");

    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    const bool pair_active = rng.uniform() < p_c;

    for (std::size_t k = 0; k < d; ++k) {
        const double mu = rng.uniform();
        const bool flip = rng.uniform() < 0.5;
        const bool exchange = rng.uniform() < 0.5;

        // Inactive variables pass the parental values through unchanged.
        if (!pair_active || !exchange) continue;

        double beta = mu <= 0.5 ? std::pow(2.0 * mu, 1.0 / (eta_c + 1.0))
                                : std::pow(2.0 - 2.0 * mu, -1.0 / (eta_c + 1.0));
        if (flip) beta = -beta;
        const double mean = 0.5 * (p1[k] + p2[k]);
        const double diff = 0.5 * (p1[k] - p2[k]);
        c1[k] = std::clamp(mean + beta * diff, lower[k], upper[k]);
        c2[k] = std::clamp(mean - beta * diff, lower[k], upper[k]);
    }
    return {std::move(c1), std::move(c2)};
}

DecisionVector polynomial_mutation(const DecisionVector& x, double eta_m, double p_m,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, RngStream& rng) {
    const std::size_t d = x.size();
    if (lower.size() != d || upper.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "polynomial_mutation: length mismatch");

    DecisionVector y = x;
    for (std::size_t k = 0; k < d; ++k) {
        if (rng.uniform() >= p_m) continue;
        const double mu = rng.uniform();
        const double span = upper[k] - lower[k];
        if (span <= 0.0) continue;
        const double v = std::clamp(y[k], lower[k], upper[k]);
        double deltaq;
        if (mu <= 0.5) {
            const double delta1 = (v - lower[k]) / span;
            deltaq = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - delta1, eta_m + 1.0),
                              1.0 / (eta_m + 1.0)) -
                     1.0;
        } else {
            const double delta2 = (upper[k] - v) / span;
            deltaq = 1.0 - std::pow(2.0 * (1.0 - mu) +
                                        2.0 * (mu - 0.5) * std::pow(1.0 - delta2, eta_m + 1.0),
                                    1.0 / (eta_m + 1.0));
        }
        y[k] = std::clamp(v + deltaq * span, lower[k], upper[k]);
    }
    return y;
}

} // namespace ciemo
