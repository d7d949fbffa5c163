#include "surrogate/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ciemo {

namespace {

constexpr double kNuggetStart = 1e-10;
constexpr double kNuggetMax = 1e-4;

struct LikelihoodWork {
    Eigen::MatrixXd pair_sqdist; // n(n-1)/2 x d squared coordinate differences
    Eigen::VectorXd y;           // standardized targets
    std::size_t n = 0;

    Eigen::MatrixXd R;
    Eigen::LLT<Eigen::MatrixXd> llt;
};

struct LikelihoodResult {
    bool ok = false;
    double objective = std::numeric_limits<double>::infinity();
    double mu = 0.0;
    double sigma2 = 0.0;
};

// Concentrated criterion log(sigma2) + log|R|/n for a given theta; smaller is
// better. Fails (ok = false) when R is not numerically positive definite.
LikelihoodResult evaluate_theta(LikelihoodWork& w, const Eigen::VectorXd& theta, double nugget) {
    const std::size_t n = w.n;
    const Eigen::ArrayXd corr = (-(w.pair_sqdist * theta).array()).exp();

    w.R.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w.R(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0 + nugget;
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            const double c = corr[static_cast<Eigen::Index>(k)];
            w.R(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = c;
            w.R(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
        }
    }

    w.llt.compute(w.R);
    if (w.llt.info() != Eigen::Success) return {};

    // Conditioning guard: a collapsing Cholesky pivot signals a nearly
    // singular correlation matrix; such theta are rejected so the search
    // cannot trade interpolation accuracy for a vanishing determinant.
    {
        double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double piv = w.llt.matrixLLT()(static_cast<Eigen::Index>(i),
                                                 static_cast<Eigen::Index>(i));
            dmin = std::min(dmin, piv);
            dmax = std::max(dmax, piv);
        }
        if (!(dmin > 1e-6 * dmax)) return {};
    }

    const auto& L = w.llt.matrixL();
    Eigen::VectorXd lin_one = L.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)));
    Eigen::VectorXd lin_y = L.solve(w.y);

    const double s11 = lin_one.squaredNorm();
    const double s1y = lin_one.dot(lin_y);
    const double mu = s1y / s11;
    const Eigen::VectorXd res = lin_y - mu * lin_one;
    const double sigma2 = res.squaredNorm() / static_cast<double>(n);

    double logdet = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        logdet += std::log(w.llt.matrixLLT()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
    logdet *= 2.0;

    LikelihoodResult out;
    out.ok = true;
    out.objective = std::log(std::max(sigma2, 1e-300)) + logdet / static_cast<double>(n);
    out.mu = mu;
    out.sigma2 = sigma2;
    return out;
}

} // namespace

double correlation(const DecisionVector& xi, const DecisionVector& xj,
                   const std::vector<double>& theta) {
    if (xi.size() != xj.size() || xi.size() != theta.size())
        throw Error(ErrorCode::DimensionMismatch, "correlation: length mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!(theta[k] > 0.0))
            throw Error(ErrorCode::InvalidArgument, "correlation: theta must be positive");
        const double dx = xi[k] - xj[k];
        s += theta[k] * dx * dx;
    }
    return std::exp(-s);
}

GpModel GpModel::fit(const std::vector<DecisionVector>& X, const std::vector<double>& y,
                     const GpFitOptions& opts, RngStream& rng) {
    (void)rng; // the coordinate search is deterministic from its fixed start
    const std::size_t n = X.size();
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "GpModel::fit: need at least 2 training points");
    if (y.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "GpModel::fit: X and y size mismatch");
    const std::size_t d = X[0].size();
    if (opts.x_lower.size() != d || opts.x_upper.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "GpModel::fit: bounds must have length d");

    GpModel model;
    model.x_lower_ = opts.x_lower;
    model.x_upper_ = opts.x_upper;

    model.X_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; ++i) {
        if (X[i].size() != d)
            throw Error(ErrorCode::DimensionMismatch, "GpModel::fit: ragged input rows");
        for (std::size_t k = 0; k < d; ++k) {
            const double span = opts.x_upper[k] - opts.x_lower[k];
            model.X_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                span > 0.0 ? (X[i][k] - opts.x_lower[k]) / span : X[i][k] - opts.x_lower[k];
        }
    }

    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : y) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    if (var < 1e-24) {
        model.y_shift_ = 0.0;
        model.y_scale_ = 1.0;
    } else {
        model.y_shift_ = mean;
        model.y_scale_ = std::sqrt(var);
    }

    LikelihoodWork work;
    work.n = n;
    work.y.resize(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        work.y[static_cast<Eigen::Index>(i)] = (y[i] - model.y_shift_) / model.y_scale_;

    const std::size_t npairs = n * (n - 1) / 2;
    work.pair_sqdist.resize(static_cast<Eigen::Index>(npairs), static_cast<Eigen::Index>(d));
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++row) {
            for (std::size_t k = 0; k < d; ++k) {
                const double dx = model.X_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) -
                                  model.X_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
                work.pair_sqdist(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(k)) = dx * dx;
            }
        }
    }

    const double lo = std::log10(opts.theta_lower);
    const double hi = std::log10(opts.theta_upper);

    Eigen::VectorXd theta(static_cast<Eigen::Index>(d));
    bool fixed = !opts.fixed_theta.empty();
    if (fixed) {
        if (opts.fixed_theta.size() != d)
            throw Error(ErrorCode::DimensionMismatch, "GpModel::fit: fixed_theta must have length d");
        for (std::size_t k = 0; k < d; ++k) {
            if (!(opts.fixed_theta[k] >= opts.theta_lower && opts.fixed_theta[k] <= opts.theta_upper))
                throw Error(ErrorCode::InvalidArgument,
                            "GpModel::fit: fixed_theta outside the search bounds");
            theta[static_cast<Eigen::Index>(k)] = opts.fixed_theta[k];
        }
    }

    for (double nugget = kNuggetStart; nugget <= kNuggetMax * (1.0 + 1e-12); nugget *= 10.0) {
        int evals = 0;
        LikelihoodResult best;

        if (fixed) {
            best = evaluate_theta(work, theta, nugget);
            evals = 1;
        } else {
            // Coordinate pattern search on log10(theta) from theta = 1,
            // shrinking the step after each sweep without improvement.
            Eigen::VectorXd z = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
            auto theta_of = [](const Eigen::VectorXd& logs) {
                return logs.unaryExpr([](double v) { return std::pow(10.0, v); }).eval();
            };
            best = evaluate_theta(work, theta_of(z), nugget);
            evals = 1;
            double step = 1.0;
            while (step >= 1e-2 && evals < opts.max_objective_evals) {
                bool improved = false;
                for (std::size_t k = 0; k < d && evals < opts.max_objective_evals; ++k) {
                    const Eigen::Index ek = static_cast<Eigen::Index>(k);
                    const double base = z[ek];
                    for (double dir : {+1.0, -1.0}) {
                        const double cand = std::clamp(base + dir * step, lo, hi);
                        if (cand == base) continue;
                        z[ek] = cand;
                        const LikelihoodResult r = evaluate_theta(work, theta_of(z), nugget);
                        ++evals;
                        if (r.ok && r.objective < best.objective) {
                            best = r;
                            improved = true;
                            break; // keep the improving move for this coordinate
                        }
                        z[ek] = base;
                        if (evals >= opts.max_objective_evals) break;
                    }
                }
                if (!improved) step *= 0.5;
            }
            theta = theta_of(z);
        }

        if (!best.ok) continue; // escalate nugget

        // Final factorization at the chosen theta.
        const LikelihoodResult final_eval = evaluate_theta(work, theta, nugget);
        if (!final_eval.ok) continue;

        // Iterative refinement against the nugget-free matrix keeps the
        // exact-interpolation property; the safeguard stops refining when
        // the true residual no longer shrinks (genuinely singular R).
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
        auto solve_refined = [&](const Eigen::VectorXd& b) {
            Eigen::VectorXd x = work.llt.solve(b);
            Eigen::VectorXd residual = b - work.R * x + nugget * x;
            for (int it = 0; it < 3; ++it) {
                if (residual.lpNorm<Eigen::Infinity>() < 1e-14 * b.lpNorm<Eigen::Infinity>())
                    break;
                const Eigen::VectorXd x_next = x + work.llt.solve(residual).eval();
                const Eigen::VectorXd r_next = b - work.R * x_next + nugget * x_next;
                if (r_next.norm() >= residual.norm()) break;
                x = x_next;
                residual = r_next;
            }
            return x;
        };
        const Eigen::VectorXd rinv_one = solve_refined(ones);
        const Eigen::VectorXd rinv_y = solve_refined(work.y);
        const double s11 = ones.dot(rinv_one);
        const double mu = ones.dot(rinv_y) / s11;

        model.theta_.assign(theta.data(), theta.data() + theta.size());
        model.mu_std_ = mu;
        model.nugget_ = nugget;
        model.likelihood_evals_ = evals;

        model.L_ = work.llt.matrixL();
        model.rinv1_ = rinv_one;
        model.alpha_ = rinv_y - mu * rinv_one;
        model.one_rinv_one_ = s11;
        model.sigma2_std_ =
            std::max(0.0, (work.y - mu * ones).dot(model.alpha_) / static_cast<double>(n));
        return model;
    }

    throw Error(ErrorCode::IllConditioned,
                "GpModel::fit: correlation matrix not positive definite after nugget escalation");
}

Eigen::VectorXd GpModel::scale_input(const DecisionVector& x) const {
    const std::size_t d = dimension();
    if (x.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "GpModel::predict: x has wrong length");
    Eigen::VectorXd u(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
        const double span = x_upper_[k] - x_lower_[k];
        u[static_cast<Eigen::Index>(k)] = span > 0.0 ? (x[k] - x_lower_[k]) / span : x[k] - x_lower_[k];
    }
    return u;
}

Prediction GpModel::predict(const DecisionVector& x) const {
    const Eigen::VectorXd u = scale_input(x);
    const Eigen::Index n = X_.rows();

    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double s = 0.0;
        for (Eigen::Index k = 0; k < X_.cols(); ++k) {
            const double dx = u[k] - X_(i, k);
            s += theta_[static_cast<std::size_t>(k)] * dx * dx;
        }
        r[i] = std::exp(-s);
    }

    const double mean_std = mu_std_ + r.dot(alpha_);
    const Eigen::VectorXd t = L_.triangularView<Eigen::Lower>().solve(r);
    const double u1 = 1.0 - rinv1_.dot(r);
    double var_std = sigma2_std_ * (1.0 - t.squaredNorm() + u1 * u1 / one_rinv_one_);

    Prediction p;
    p.mean = y_shift_ + y_scale_ * mean_std;
    p.variance = std::max(0.0, y_scale_ * y_scale_ * var_std);
    return p;
}

void GpModel::predict_batch(const std::vector<DecisionVector>& xs,
                            std::vector<Prediction>& out) const {
    const Eigen::Index n = X_.rows();
    const Eigen::Index q = static_cast<Eigen::Index>(xs.size());
    out.resize(xs.size());
    if (q == 0) return;

    Eigen::MatrixXd U(q, X_.cols());
    for (Eigen::Index j = 0; j < q; ++j)
        U.row(j) = scale_input(xs[static_cast<std::size_t>(j)]).transpose();

    // Cross-correlation matrix n x q, assembled column-block-wise.
    Eigen::MatrixXd K(n, q);
    Eigen::VectorXd acc(n);
    for (Eigen::Index j = 0; j < q; ++j) {
        acc.setZero();
        for (Eigen::Index k = 0; k < X_.cols(); ++k) {
            acc += theta_[static_cast<std::size_t>(k)] *
                   (X_.col(k).array() - U(j, k)).square().matrix();
        }
        K.col(j) = (-acc.array()).exp();
    }

    const Eigen::VectorXd mean_std = (K.transpose() * alpha_).array() + mu_std_;
    const Eigen::MatrixXd T = L_.triangularView<Eigen::Lower>().solve(K);
    const Eigen::VectorXd u1 = 1.0 - (K.transpose() * rinv1_).array();

    for (Eigen::Index j = 0; j < q; ++j) {
        const double var_std =
            sigma2_std_ * (1.0 - T.col(j).squaredNorm() + u1[j] * u1[j] / one_rinv_one_);
        out[static_cast<std::size_t>(j)].mean = y_shift_ + y_scale_ * mean_std[j];
        out[static_cast<std::size_t>(j)].variance = std::max(0.0, y_scale_ * y_scale_ * var_std);
    }
}

} // namespace ciemo
