#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "problems/problems.hpp"
#include "sampling/lhs.hpp"
#include "sampling/rng.hpp"

using namespace ciemo;

TEST_CASE("RngStream: identical (seed, label) replays the same sequence") {
    RngStream a(123, "init");
    RngStream b(123, "init");
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("RngStream: distinct labels and seeds give distinct sequences") {
    RngStream a(123, "init");
    RngStream b(123, "moea");
    RngStream c(124, "init");
    int differs_label = 0, differs_seed = 0;
    for (int i = 0; i < 50; ++i) {
        const auto va = a.next_u64();
        if (va != b.next_u64()) ++differs_label;
        if (va != c.next_u64()) ++differs_seed;
    }
    CHECK(differs_label == 50);
    CHECK(differs_seed == 50);
}

TEST_CASE("RngStream: uniform stays in [0,1) and permutation is a bijection") {
    RngStream rng(5, "check");
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    const auto p = rng.permutation(100);
    std::vector<bool> seen(100, false);
    for (auto i : p) {
        CHECK(i < 100);
        CHECK_FALSE(seen[i]);
        seen[i] = true;
    }
}

TEST_CASE("latin_hypercube: one point per stratum in every dimension") {
    const auto spec = make_problem("zdt1", 2, 8);
    RngStream rng(9, "init");
    const std::size_t n = 87;
    const auto pts = latin_hypercube(n, spec, rng);
    REQUIRE(pts.size() == n);

    for (std::size_t dim = 0; dim < spec.d; ++dim) {
        std::vector<int> occupancy(n, 0);
        for (const auto& p : pts) {
            CHECK(p[dim] >= spec.lower[dim]);
            CHECK(p[dim] <= spec.upper[dim]);
            const double u = (p[dim] - spec.lower[dim]) / (spec.upper[dim] - spec.lower[dim]);
            const std::size_t stratum = std::min<std::size_t>(
                static_cast<std::size_t>(u * static_cast<double>(n)), n - 1);
            ++occupancy[stratum];
        }
        for (int c : occupancy) CHECK(c == 1); // histogram oracle: all ones
    }
}

TEST_CASE("latin_hypercube: stratum occupancy all ones across sizes and dimensions") {
    RngStream rng(31, "init");
    for (std::size_t n : {1u, 4u, 13u, 100u}) {
        const auto spec = make_problem("zdt4", 2, 5); // asymmetric bounds
        const auto pts = latin_hypercube(n, spec, rng);
        for (std::size_t dim = 0; dim < spec.d; ++dim) {
            std::vector<int> occupancy(n, 0);
            for (const auto& p : pts) {
                const double u = (p[dim] - spec.lower[dim]) / (spec.upper[dim] - spec.lower[dim]);
                ++occupancy[std::min<std::size_t>(static_cast<std::size_t>(u * n), n - 1)];
            }
            for (int c : occupancy) CHECK(c == 1);
        }
    }
}

TEST_CASE("latin_hypercube: n = 4, d = 1 puts one point in each quarter") {
    ProblemSpec spec{"unit", 1, 2, {0.0}, {1.0}};
    RngStream rng(2, "init");
    const auto pts = latin_hypercube(4, spec, rng);
    std::vector<int> occupancy(4, 0);
    for (const auto& p : pts)
        ++occupancy[std::min<std::size_t>(static_cast<std::size_t>(p[0] * 4.0), 3)];
    CHECK(occupancy == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("latin_hypercube: determinism and empty-input error") {
    const auto spec = make_problem("zdt1", 2, 8);
    RngStream r1(77, "init");
    RngStream r2(77, "init");
    CHECK(latin_hypercube(20, spec, r1) == latin_hypercube(20, spec, r2));

    RngStream r3(77, "init");
    CHECK_THROWS_AS((void)latin_hypercube(0, spec, r3), Error);
}
