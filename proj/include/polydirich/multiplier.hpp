#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

namespace polydirich {

struct NormEstimate {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

/// Finite section of multiply-by-h between weighted coordinate systems:
/// multiply, project back onto the same degree box, expressed in unit-norm
/// monomial coordinates of source (alpha) and target (beta). Dense storage up
/// to 4096 rows per side, matrix-free convolution beyond.
class FiniteSectionOperator {
  public:
    FiniteSectionOperator(const TruncatedSeries& h, WeightVector alpha, WeightVector beta,
                          long deg_z, long deg_w, std::optional<bool> force_dense = std::nullopt);

    long deg_z() const { return deg_z_; }
    long deg_w() const { return deg_w_; }
    long dim() const { return (deg_z_ + 1) * (deg_w_ + 1); }
    const WeightVector& alpha() const { return alpha_; }
    const WeightVector& beta() const { return beta_; }
    bool dense() const { return matrix_.has_value(); }
    const Eigen::MatrixXcd& matrix() const;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& v) const;

  private:
    Eigen::VectorXcd apply_conv(const Eigen::VectorXcd& v, bool adjoint) const;
    WeightVector alpha_;
    WeightVector beta_;
    long deg_z_;
    long deg_w_;
    TruncatedSeries h_;
    std::vector<double> sqrt_w_alpha_;  // per grid cell
    std::vector<double> sqrt_w_beta_;
    std::optional<Eigen::MatrixXcd> matrix_;
};

FiniteSectionOperator finite_section(const TruncatedSeries& h, const WeightVector& alpha,
                                     const WeightVector& beta, long deg_z, long deg_w);

/// Largest singular value via power iteration on the Gram operator,
/// deterministic all-ones start. residual is the last change between
/// successive estimates.
NormEstimate operator_norm(const FiniteSectionOperator& op, double tol = 1e-12,
                           int max_iter = 10000);

/// Componentwise affine interpolation; lambda must lie in [0,1].
WeightVector interpolate_weights(const WeightVector& a1, const WeightVector& a2, double lambda);

struct WeightPair {
    WeightVector alpha;
    WeightVector beta;
};

/// slack = |T|_1^{1-lambda} |T|_2^lambda - |T|_interp for the three finite
/// sections at a shared degree box. Throws if any norm estimate fails to
/// converge.
double interpolation_inequality_check(const TruncatedSeries& h, const WeightPair& pair1,
                                      const WeightPair& pair2, double lambda, long deg_z,
                                      long deg_w, double tol = 1e-13);

struct PointwiseBoundReport {
    double max_violation = 0.0;  // max over points of lhs/rhs - 1, clamped at 0
    int violations = 0;
    int points = 0;
};

/// Checks |h(z,w)| * |lambda_alpha| / |lambda_beta| <= norm_est * (1+tol)
/// at each sample point; violations are recorded, not thrown.
PointwiseBoundReport pointwise_bound_check(const TruncatedSeries& h, const WeightVector& alpha,
                                           const WeightVector& beta, double norm_est,
                                           const std::vector<std::pair<Complex, Complex>>& points,
                                           double tol = 1e-6);

struct EnvelopeProfile {
    std::vector<std::pair<double, double>> per_radius;  // (r, sup over angles at (r,r))
    double sup_ratio = 0.0;
    double inf_ratio = 0.0;
};

/// sup and inf over the sample grid of |h(z,w)| (1-|z|^2)^{(a1-b1)/2}
/// (1-|w|^2)^{(a2-b2)/2}; bounded sup as r -> 1 realizes the multiplier
/// criterion for (0,0) > alpha >= beta.
EnvelopeProfile boundary_envelope(const TruncatedSeries& h, const WeightVector& alpha,
                                  const WeightVector& beta, const std::vector<double>& radii,
                                  const std::vector<double>& angles);

/// (k+1)^{b1} (l+1)^{b2} sum_{m<=k, n<=l} [(m+1)^{a1}(n+1)^{a2}
/// (k-m+1)^{b1}(l-n+1)^{b2}]^{-1}; factors across the axes. Requires
/// alpha > (1,1) and beta <= alpha.
double convolution_weight_bound(long k, long l, const WeightVector& alpha, const WeightVector& beta);
double convolution_weight_bound_1d(long k, double a, double b);

/// Max of |h| over the torus grid at the given radius.
double hinf_norm_estimate(const TruncatedSeries& h, double radius, int angular_count);

}  // namespace polydirich
