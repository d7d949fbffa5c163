#include "moea/reference_vectors.hpp"

#include "core/errors.hpp"

namespace ciemo {

namespace {

void enumerate(std::size_t m, std::size_t H, std::size_t dim, std::size_t left,
               std::vector<std::size_t>& counts, std::vector<std::vector<double>>& out) {
    if (dim == m - 1) {
        counts[dim] = left;
        std::vector<double> v(m);
        for (std::size_t i = 0; i < m; ++i)
            v[i] = static_cast<double>(counts[i]) / static_cast<double>(H);
        out.push_back(std::move(v));
        return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
        counts[dim] = k;
        enumerate(m, H, dim + 1, left - k, counts, out);
    }
}

} // namespace

ReferenceVectorSet das_dennis(std::size_t m, std::size_t H) {
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "das_dennis: m must be at least 2");
    if (H < 1)
        throw Error(ErrorCode::InvalidArgument, "das_dennis: H must be at least 1");
    ReferenceVectorSet set;
    set.H = H;
    std::vector<std::size_t> counts(m, 0);
    enumerate(m, H, 0, H, counts, set.vectors);
    return set;
}

ReferenceVectorSet das_dennis_at_least(std::size_t m, std::size_t n) {
    for (std::size_t H = 1;; ++H) {
        ReferenceVectorSet set = das_dennis(m, H);
        if (set.size() >= n) return set;
    }
}

} // namespace ciemo
