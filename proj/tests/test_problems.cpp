#include <doctest.h>

#include <cmath>
#include <set>

#include "core/dominance.hpp"
#include "core/errors.hpp"
#include "problems/problems.hpp"
#include "sampling/rng.hpp"

using namespace ciemo;

TEST_CASE("make_problem: defaults and validation") {
    const auto zdt1 = make_problem("zdt1", 2);
    CHECK(zdt1.d == 8);
    CHECK(zdt1.m == 2);
    CHECK(zdt1.lower == std::vector<double>(8, 0.0));
    CHECK(zdt1.upper == std::vector<double>(8, 1.0));

    const auto dtlz2 = make_problem("dtlz2", 3);
    CHECK(dtlz2.d == 6);

    const auto zdt4 = make_problem("zdt4", 2);
    CHECK(zdt4.lower[0] == 0.0);
    CHECK(zdt4.lower[1] == -5.0);
    CHECK(zdt4.upper[1] == 5.0);

    CHECK_THROWS_AS((void)make_problem("nope", 2), Error);
    CHECK_THROWS_AS((void)make_problem("zdt1", 3), Error);
    CHECK(is_known_problem("dtlz7"));
    CHECK_FALSE(is_known_problem("dtlz8"));
}

TEST_CASE("evaluate: hand-derived fixtures") {
    EvaluationBudget budget(10);

    const auto zdt1 = make_problem("zdt1", 2, 8);
    const auto f = evaluate(zdt1, DecisionVector(8, 0.0), budget);
    CHECK(f[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(budget.used() == 1);

    const auto dtlz2 = make_problem("dtlz2", 2, 8);
    const auto g = evaluate(dtlz2, DecisionVector(8, 0.5), budget);
    CHECK(g[0] == doctest::Approx(std::cos(std::acos(-1.0) / 4.0)).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(std::sin(std::acos(-1.0) / 4.0)).epsilon(1e-12));

    // dtlz1 optimum: position 0.5, distance variables 0.5 give g = 0.
    const auto dtlz1 = make_problem("dtlz1", 2, 8);
    const auto h = evaluate(dtlz1, DecisionVector(8, 0.5), budget);
    CHECK(h[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(h[1] == doctest::Approx(0.25).epsilon(1e-12));

    // zdt6 at x1 = 0: f1 = 1, g = 1, f2 = 0.
    const auto zdt6 = make_problem("zdt6", 2, 8);
    const auto k = evaluate(zdt6, DecisionVector(8, 0.0), budget);
    CHECK(k[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("evaluate: budget and domain guards") {
    const auto spec = make_problem("zdt1", 2, 8);
    EvaluationBudget budget(1);
    (void)evaluate(spec, DecisionVector(8, 0.5), budget);
    CHECK(budget.exhausted());
    CHECK_THROWS_AS((void)evaluate(spec, DecisionVector(8, 0.5), budget), Error);

    EvaluationBudget fresh(5);
    DecisionVector out_of_bounds(8, 0.5);
    out_of_bounds[3] = 1.5;
    CHECK_THROWS_AS((void)evaluate(spec, out_of_bounds, fresh), Error);
    CHECK(fresh.used() == 0); // failed evaluations are not charged
}

TEST_CASE("evaluate: pure function of (spec, x)") {
    const auto spec = make_problem("dtlz7", 2, 8);
    RngStream rng(3, "problems-pure");
    for (int i = 0; i < 20; ++i) {
        DecisionVector x(8);
        for (auto& v : x) v = rng.uniform();
        EvaluationBudget b1(1), b2(1);
        const auto f1 = evaluate(spec, x, b1);
        const auto f2 = evaluate(spec, x, b2);
        CHECK(f1 == f2); // bit-identical
    }
}

TEST_CASE("true_front_reference: hand-derived fixtures") {
    const auto zdt1 = make_problem("zdt1", 2, 8);
    const auto front = true_front_reference(zdt1, 3);
    REQUIRE(front.size() == 3);
    CHECK(front[0][0] == doctest::Approx(0.0));
    CHECK(front[0][1] == doctest::Approx(1.0));
    CHECK(front[1][0] == doctest::Approx(0.5));
    CHECK(front[1][1] == doctest::Approx(1.0 - std::sqrt(0.5)));
    CHECK(front[2][0] == doctest::Approx(1.0));
    CHECK(front[2][1] == doctest::Approx(0.0));

    const auto dtlz1 = make_problem("dtlz1", 2, 8);
    const auto lin = true_front_reference(dtlz1, 3);
    REQUIRE(lin.size() == 3);
    CHECK(lin[0] == ObjectiveVector{0.0, 0.5});
    CHECK(lin[1][0] == doctest::Approx(0.25));
    CHECK(lin[1][1] == doctest::Approx(0.25));
    CHECK(lin[2] == ObjectiveVector{0.5, 0.0});

    const auto dtlz2 = make_problem("dtlz2", 2, 8);
    for (const auto& p : true_front_reference(dtlz2, 200))
        CHECK(p[0] * p[0] + p[1] * p[1] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)true_front_reference(ProblemSpec{"bogus", 8, 2, {}, {}}, 10), Error);
}

TEST_CASE("true_front_reference: deterministic and pairwise non-dominated") {
    for (const char* name : {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "dtlz1", "dtlz2", "dtlz3",
                             "dtlz4", "dtlz5", "dtlz6", "dtlz7"}) {
        const auto spec = make_problem(name, 2, 8);
        const auto a = true_front_reference(spec, 300);
        const auto b = true_front_reference(spec, 300);
        CHECK(a == b);
        const auto nd = nondominated_subset(a);
        CHECK(nd.size() == a.size());
    }
    for (const char* name : {"dtlz1", "dtlz2", "dtlz5", "dtlz7"}) {
        const auto spec = make_problem(name, 3, 6);
        const auto a = true_front_reference(spec, 300);
        CHECK(a.size() >= 300);
        const auto nd = nondominated_subset(a);
        CHECK(nd.size() == a.size());
    }
}

namespace {

// Clusters a two-objective front by gaps in f1 larger than 5x the median gap.
std::size_t count_segments(std::vector<ObjectiveVector> front) {
    std::sort(front.begin(), front.end());
    std::vector<double> gaps;
    for (std::size_t i = 1; i < front.size(); ++i) gaps.push_back(front[i][0] - front[i - 1][0]);
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    std::size_t segments = 1;
    for (double g : gaps)
        if (g > 5.0 * median && g > 1e-6) ++segments;
    return segments;
}

} // namespace

TEST_CASE("true_front_reference: zdt3 covers all 5 disconnected segments") {
    const auto spec = make_problem("zdt3", 2, 8);
    const auto front = true_front_reference(spec, 1000);
    CHECK(count_segments(front) == 5);
}

TEST_CASE("true_front_reference: dtlz7 disconnected segments all populated") {
    const auto spec = make_problem("dtlz7", 2, 8);
    const auto front = true_front_reference(spec, 1000);
    CHECK(count_segments(front) == 2);
}
