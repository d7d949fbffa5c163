#include "sampling/lhs.hpp"

#include "core/errors.hpp"

namespace ciemo {

std::vector<DecisionVector> latin_hypercube(std::size_t n, const ProblemSpec& spec, RngStream& rng) {
    if (n == 0)
        throw Error(ErrorCode::EmptyInput, "latin_hypercube: n must be positive");

    std::vector<DecisionVector> points(n, DecisionVector(spec.d));
    for (std::size_t dim = 0; dim < spec.d; ++dim) {
        const auto strata = rng.permutation(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = (static_cast<double>(strata[i]) + rng.uniform()) / static_cast<double>(n);
            points[i][dim] = spec.lower[dim] + u * (spec.upper[dim] - spec.lower[dim]);
        }
    }
    return points;
}

} // namespace ciemo
