#ifndef CIEMO_MOEA_REFERENCE_VECTORS_HPP
#define CIEMO_MOEA_REFERENCE_VECTORS_HPP

#include <cstddef>
#include <vector>

namespace ciemo {

/// Das-Dennis simplex lattice {k/H : sum k = H}; every vector sums to 1.
struct ReferenceVectorSet {
    std::vector<std::vector<double>> vectors;
    std::size_t H = 0;

    std::size_t size() const noexcept { return vectors.size(); }
};

/// Enumerates all C(H+m-1, m-1) lattice points exactly once.
ReferenceVectorSet das_dennis(std::size_t m, std::size_t H);

/// Smallest-H lattice with at least n vectors.
ReferenceVectorSet das_dennis_at_least(std::size_t m, std::size_t n);

} // namespace ciemo

#endif
