#ifndef CIEMO_SURROGATE_GP_HPP
#define CIEMO_SURROGATE_GP_HPP

#include <Eigen/Dense>
#include <vector>

#include "core/types.hpp"
#include "sampling/rng.hpp"

namespace ciemo {

/// Posterior mean and (non-negative) predictive variance at one point.
struct Prediction {
    double mean = 0.0;
    double variance = 0.0;
};

/// Anything that predicts objective values from decision vectors. Fitted
/// models are immutable, so implementations must be safe to share across
/// concurrent readers.
class Surrogate {
public:
    virtual ~Surrogate() = default;
    virtual Prediction predict(const DecisionVector& x) const = 0;
    virtual void predict_batch(const std::vector<DecisionVector>& xs,
                               std::vector<Prediction>& out) const {
        out.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = predict(xs[i]);
    }
};

/// Gaussian correlation exp(-sum_k theta_k (xi_k - xj_k)^2), in (0, 1].
double correlation(const DecisionVector& xi, const DecisionVector& xj,
                   const std::vector<double>& theta);

struct GpFitOptions {
    std::vector<double> x_lower; ///< input box, used to scale inputs to [0,1]^d
    std::vector<double> x_upper;
    double theta_lower = 1e-5; ///< per-dimension search bounds (scaled space)
    double theta_upper = 1e2;
    int max_objective_evals = 200; ///< cap on concentrated-likelihood evaluations
    std::vector<double> fixed_theta; ///< non-empty: skip the hyperparameter search
};

/// Kriging regressor with constant trend: hyperparameters from maximizing the
/// concentrated likelihood (equivalently minimizing sigma2 * |R|^(1/n)),
/// exact interpolation up to the stabilizing nugget.
///
/// Inputs are scaled to the unit box and outputs standardized internally;
/// predictions and the mu/sigma2 accessors are reported on the original scale.
class GpModel final : public Surrogate {
public:
    static GpModel fit(const std::vector<DecisionVector>& X, const std::vector<double>& y,
                       const GpFitOptions& opts, RngStream& rng);

    Prediction predict(const DecisionVector& x) const override;
    void predict_batch(const std::vector<DecisionVector>& xs,
                       std::vector<Prediction>& out) const override;

    const std::vector<double>& theta() const noexcept { return theta_; }
    double mu_hat() const noexcept { return y_shift_ + y_scale_ * mu_std_; }
    double sigma2_hat() const noexcept { return y_scale_ * y_scale_ * sigma2_std_; }
    double nugget() const noexcept { return nugget_; }
    std::size_t train_size() const noexcept { return static_cast<std::size_t>(X_.rows()); }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(X_.cols()); }
    int likelihood_evals() const noexcept { return likelihood_evals_; }

private:
    GpModel() = default;

    Eigen::VectorXd scale_input(const DecisionVector& x) const;

    // Scaled training inputs (rows) and standardization constants.
    Eigen::MatrixXd X_;
    std::vector<double> x_lower_, x_upper_;
    double y_shift_ = 0.0, y_scale_ = 1.0;

    std::vector<double> theta_;
    double mu_std_ = 0.0;
    double sigma2_std_ = 0.0;
    double nugget_ = 0.0;
    int likelihood_evals_ = 0;

    // Cholesky factor of R and cached solves for prediction.
    Eigen::MatrixXd L_;
    Eigen::VectorXd alpha_;  // R^-1 (y - 1 mu)
    Eigen::VectorXd rinv1_;  // R^-1 1
    double one_rinv_one_ = 0.0;
};

} // namespace ciemo

#endif
