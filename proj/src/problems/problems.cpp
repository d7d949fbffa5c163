#include "problems/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moea/reference_vectors.hpp"

namespace ciemo {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_zdt(const std::string& name) {
    return name == "zdt1" || name == "zdt2" || name == "zdt3" || name == "zdt4" || name == "zdt6";
}

bool is_dtlz(const std::string& name) {
    return name.size() == 5 && name.rfind("dtlz", 0) == 0 && name[4] >= '1' && name[4] <= '7';
}

// --- ZDT family (m = 2, x in [0,1]^d except zdt4) ---

ObjectiveVector eval_zdt(const std::string& name, const DecisionVector& x) {
    const std::size_t d = x.size();
    const double f1_plain = x[0];
    if (name == "zdt1" || name == "zdt2" || name == "zdt3") {
        double s = 0.0;
        for (std::size_t i = 1; i < d; ++i) s += x[i];
        const double g = 1.0 + 9.0 * s / static_cast<double>(d - 1);
        const double r = f1_plain / g;
        double h = 0.0;
        if (name == "zdt1") h = 1.0 - std::sqrt(r);
        else if (name == "zdt2") h = 1.0 - r * r;
        else h = 1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1_plain);
        return {f1_plain, g * h};
    }
    if (name == "zdt4") {
        double s = 0.0;
        for (std::size_t i = 1; i < d; ++i)
            s += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
        const double g = 1.0 + 10.0 * static_cast<double>(d - 1) + s;
        return {f1_plain, g * (1.0 - std::sqrt(f1_plain / g))};
    }
    // zdt6
    const double sin_term = std::sin(6.0 * kPi * x[0]);
    const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(sin_term, 6);
    double s = 0.0;
    for (std::size_t i = 1; i < d; ++i) s += x[i];
    const double g = 1.0 + 9.0 * std::pow(s / static_cast<double>(d - 1), 0.25);
    const double r = f1 / g;
    return {f1, g * (1.0 - r * r)};
}

// --- DTLZ family (x in [0,1]^d, k = d - m + 1 distance variables) ---

double dtlz_g1(const DecisionVector& x, std::size_t m) {
    const std::size_t d = x.size();
    double s = 0.0;
    for (std::size_t i = m - 1; i < d; ++i) {
        const double t = x[i] - 0.5;
        s += t * t - std::cos(20.0 * kPi * t);
    }
    return 100.0 * (static_cast<double>(d - m + 1) + s);
}

double dtlz_g2(const DecisionVector& x, std::size_t m) {
    const std::size_t d = x.size();
    double s = 0.0;
    for (std::size_t i = m - 1; i < d; ++i) {
        const double t = x[i] - 0.5;
        s += t * t;
    }
    return s;
}

ObjectiveVector dtlz_linear_shape(const std::vector<double>& pos, std::size_t m, double g) {
    ObjectiveVector f(m);
    for (std::size_t j = 0; j < m; ++j) {
        double v = 0.5 * (1.0 + g);
        for (std::size_t i = 0; i + j + 1 < m; ++i) v *= pos[i];
        if (j > 0) v *= 1.0 - pos[m - j - 1];
        f[j] = v;
    }
    return f;
}

ObjectiveVector dtlz_sphere_shape(const std::vector<double>& theta, std::size_t m, double g) {
    ObjectiveVector f(m);
    for (std::size_t j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (std::size_t i = 0; i + j + 1 < m; ++i) v *= std::cos(theta[i] * kPi / 2.0);
        if (j > 0) v *= std::sin(theta[m - j - 1] * kPi / 2.0);
        f[j] = v;
    }
    return f;
}

ObjectiveVector eval_dtlz(const std::string& name, const DecisionVector& x, std::size_t m) {
    const std::size_t d = x.size();
    const int which = name[4] - '0';
    std::vector<double> pos(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m - 1));

    switch (which) {
    case 1:
        return dtlz_linear_shape(pos, m, dtlz_g1(x, m));
    case 2:
        return dtlz_sphere_shape(pos, m, dtlz_g2(x, m));
    case 3:
        return dtlz_sphere_shape(pos, m, dtlz_g1(x, m));
    case 4: {
        for (double& p : pos) p = std::pow(p, 100.0);
        return dtlz_sphere_shape(pos, m, dtlz_g2(x, m));
    }
    case 5:
    case 6: {
        double g = 0.0;
        if (which == 5) {
            g = dtlz_g2(x, m);
        } else {
            for (std::size_t i = m - 1; i < d; ++i) g += std::pow(x[i], 0.1);
        }
        // theta_1 = x_1, later position angles squeezed toward pi/4 as g -> 0.
        std::vector<double> theta(m - 1);
        theta[0] = pos[0];
        for (std::size_t i = 1; i + 1 < m; ++i)
            theta[i] = (1.0 + 2.0 * g * pos[i]) / (2.0 * (1.0 + g));
        return dtlz_sphere_shape(theta, m, g);
    }
    case 7: {
        double s = 0.0;
        for (std::size_t i = m - 1; i < d; ++i) s += x[i];
        const double g = 1.0 + 9.0 * s / static_cast<double>(d - m + 1);
        ObjectiveVector f(m);
        double h = static_cast<double>(m);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            f[j] = x[j];
            h -= f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[j]));
        }
        f[m - 1] = (1.0 + g) * h;
        return f;
    }
    default:
        throw Error(ErrorCode::UnknownProblem, "unknown DTLZ problem: " + name);
    }
}

// --- Pareto front machinery ---

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

// Minimum attainable f1 of zdt6, located by golden-section search on the
// first hump of exp(-4x) sin^6(6 pi x) over [0, 1/6].
double zdt6_f1_min() {
    auto value = [](double x) {
        const double s = std::sin(6.0 * kPi * x);
        return std::exp(-4.0 * x) * std::pow(s, 6);
    };
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 1.0 / 6.0;
    double c = b - phi * (b - a), e = a + phi * (b - a);
    double fc = value(c), fe = value(e);
    while (b - a > 1e-14) {
        if (fc > fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - phi * (b - a);
            fc = value(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + phi * (b - a);
            fe = value(e);
        }
    }
    return 1.0 - value((a + b) / 2.0);
}

// Keeps the strictly improving (non-dominated) part of a curve sampled with
// ascending f1, then thins it to n evenly spaced points.
std::vector<ObjectiveVector> sweep_nondominated(const std::vector<double>& f1,
                                                const std::vector<double>& f2, std::size_t n) {
    std::vector<std::size_t> keep;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f2[i] < best) {
            best = f2[i];
            keep.push_back(i);
        }
    }
    std::vector<ObjectiveVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = keep[(i * (keep.size() - 1)) / (n - 1)];
        out.push_back({f1[k], f2[k]});
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Efficient positions u of the dtlz7 shape: u maximizing u*(1+sin(3 pi u))
// against everything to its left. Shared by the m = 2 and m = 3 fronts.
std::vector<double> dtlz7_position_samples(std::size_t n) {
    const std::size_t grid = 200001;
    std::vector<double> keep;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(grid - 1);
        const double c = u * (1.0 + std::sin(3.0 * kPi * u));
        if (c > best) {
            best = c;
            keep.push_back(u);
        }
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(keep[(i * (keep.size() - 1)) / (n - 1)]);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double dtlz7_last_objective(const std::vector<double>& pos, std::size_t m) {
    // Distance variables at their optimum give g = 1.
    double h = static_cast<double>(m);
    for (double u : pos) h -= u / 2.0 * (1.0 + std::sin(3.0 * kPi * u));
    return 2.0 * h;
}

std::vector<ObjectiveVector> front_m2(const std::string& name, std::size_t n) {
    if (name == "zdt1" || name == "zdt4") {
        std::vector<ObjectiveVector> out;
        for (double f1 : linspace(0.0, 1.0, n)) out.push_back({f1, 1.0 - std::sqrt(f1)});
        return out;
    }
    if (name == "zdt2") {
        std::vector<ObjectiveVector> out;
        for (double f1 : linspace(0.0, 1.0, n)) out.push_back({f1, 1.0 - f1 * f1});
        return out;
    }
    if (name == "zdt3") {
        const auto f1 = linspace(0.0, 1.0, 400001);
        std::vector<double> f2(f1.size());
        for (std::size_t i = 0; i < f1.size(); ++i)
            f2[i] = 1.0 - std::sqrt(f1[i]) - f1[i] * std::sin(10.0 * kPi * f1[i]);
        return sweep_nondominated(f1, f2, n);
    }
    if (name == "zdt6") {
        const double lo = zdt6_f1_min();
        std::vector<ObjectiveVector> out;
        for (double f1 : linspace(lo, 1.0, n)) out.push_back({f1, 1.0 - f1 * f1});
        return out;
    }
    if (name == "dtlz1") {
        std::vector<ObjectiveVector> out;
        for (double t : linspace(0.0, 1.0, n)) out.push_back({0.5 * t, 0.5 * (1.0 - t)});
        return out;
    }
    if (name == "dtlz7") {
        std::vector<ObjectiveVector> out;
        for (double u : dtlz7_position_samples(n))
            out.push_back({u, dtlz7_last_objective({u}, 2)});
        return out;
    }
    // dtlz2-6 share the unit quarter-circle for m = 2.
    std::vector<ObjectiveVector> out;
    for (double t : linspace(0.0, 1.0, n)) {
        const double a = t * kPi / 2.0;
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

std::vector<ObjectiveVector> front_m3(const std::string& name, std::size_t n) {
    if (name == "dtlz1") {
        auto lattice = das_dennis_at_least(3, n);
        for (auto& w : lattice.vectors)
            for (double& c : w) c *= 0.5;
        return {lattice.vectors.begin(), lattice.vectors.end()};
    }
    if (name == "dtlz2" || name == "dtlz3" || name == "dtlz4") {
        auto lattice = das_dennis_at_least(3, n);
        std::vector<ObjectiveVector> out;
        out.reserve(lattice.vectors.size());
        for (const auto& w : lattice.vectors) {
            double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
            out.push_back({w[0] / norm, w[1] / norm, w[2] / norm});
        }
        return out;
    }
    if (name == "dtlz5" || name == "dtlz6") {
        // Degenerate curve: first two objectives tied at cos(t)/sqrt(2).
        std::vector<ObjectiveVector> out;
        for (double t : linspace(0.0, 1.0, n)) {
            const double a = t * kPi / 2.0;
            out.push_back({std::cos(a) / std::sqrt(2.0), std::cos(a) / std::sqrt(2.0), std::sin(a)});
        }
        return out;
    }
    if (name == "dtlz7") {
        const std::size_t per_axis =
            static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        const auto u = dtlz7_position_samples(per_axis);
        std::vector<ObjectiveVector> out;
        out.reserve(u.size() * u.size());
        for (double u1 : u)
            for (double u2 : u)
                out.push_back({u1, u2, dtlz7_last_objective({u1, u2}, 3)});
        return out;
    }
    throw Error(ErrorCode::UnknownProblem, "no 3-objective front for problem: " + name);
}

} // namespace

bool is_known_problem(const std::string& name) {
    return is_zdt(name) || is_dtlz(name);
}

ProblemSpec make_problem(const std::string& name, std::size_t m, std::size_t d) {
    if (!is_known_problem(name))
        throw Error(ErrorCode::UnknownProblem, "unknown problem: " + name);
    if (is_zdt(name) && m != 2)
        throw Error(ErrorCode::InvalidArgument, name + " is two-objective only");
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "m must be at least 2");

    if (d == 0) d = (m == 2) ? 8 : 6;
    if (d < m)
        throw Error(ErrorCode::InvalidArgument, "d must be at least m");

    ProblemSpec spec;
    spec.name = name;
    spec.d = d;
    spec.m = m;
    spec.lower.assign(d, 0.0);
    spec.upper.assign(d, 1.0);
    if (name == "zdt4") {
        for (std::size_t i = 1; i < d; ++i) {
            spec.lower[i] = -5.0;
            spec.upper[i] = 5.0;
        }
    }
    return spec;
}

ObjectiveVector evaluate_objectives(const ProblemSpec& spec, const DecisionVector& x) {
    if (x.size() != spec.d)
        throw Error(ErrorCode::DimensionMismatch, "evaluate: x has wrong length");
    for (std::size_t i = 0; i < spec.d; ++i) {
        if (!(x[i] >= spec.lower[i] && x[i] <= spec.upper[i]))
            throw Error(ErrorCode::InvalidArgument,
                        "evaluate: x out of bounds in dimension " + std::to_string(i));
    }
    if (is_zdt(spec.name)) return eval_zdt(spec.name, x);
    return eval_dtlz(spec.name, x, spec.m);
}

ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x, EvaluationBudget& budget) {
    if (budget.exhausted())
        throw Error(ErrorCode::BudgetExhausted, "evaluation budget exhausted");
    ObjectiveVector f = evaluate_objectives(spec, x);
    budget.charge();
    return f;
}

std::vector<ObjectiveVector> true_front_reference(const ProblemSpec& spec, std::size_t n) {
    if (!is_known_problem(spec.name))
        throw Error(ErrorCode::UnknownProblem, "unknown problem: " + spec.name);
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "reference set needs n >= 2");
    if (spec.m == 2) return front_m2(spec.name, n);
    if (spec.m == 3) return front_m3(spec.name, n);
    throw Error(ErrorCode::InvalidArgument, "reference fronts support m in {2, 3}");
}

} // namespace ciemo
