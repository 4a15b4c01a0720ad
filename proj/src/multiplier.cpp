#include "polydirich/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "polydirich/detail/torus.hpp"
#include "polydirich/dirichlet.hpp"

namespace polydirich {

namespace {
constexpr long kDenseLimit = 4096;  // rows per side

std::vector<double> sqrt_weights(const WeightVector& a, long deg_z, long deg_w) {
    std::vector<double> out(static_cast<std::size_t>((deg_z + 1) * (deg_w + 1)));
    std::size_t i = 0;
    for (long k = 0; k <= deg_z; ++k)
        for (long l = 0; l <= deg_w; ++l) out[i++] = std::sqrt(weight_at(k, l, a));
    return out;
}
}  // namespace

FiniteSectionOperator::FiniteSectionOperator(const TruncatedSeries& h, WeightVector alpha,
                                             WeightVector beta, long deg_z, long deg_w,
                                             std::optional<bool> force_dense)
    : alpha_(alpha), beta_(beta), deg_z_(deg_z), deg_w_(deg_w), h_(h),
      sqrt_w_alpha_(sqrt_weights(alpha, deg_z, deg_w)),
      sqrt_w_beta_(sqrt_weights(beta, deg_z, deg_w)) {
    if (deg_z < 0 || deg_w < 0) throw std::invalid_argument("degrees must be nonnegative");
    const bool dense = force_dense.value_or(dim() <= kDenseLimit);
    if (!dense) return;
    const long n = dim();
    const long L = deg_w_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (long mc = 0; mc <= deg_z_; ++mc)
        for (long nc = 0; nc <= deg_w_; ++nc) {
            const long col = mc * (L + 1) + nc;
            for (long k = mc; k <= deg_z_; ++k)
                for (long l = nc; l <= deg_w_; ++l) {
                    const long row = k * (L + 1) + l;
                    const Complex c = h_.at(k - mc, l - nc);
                    if (c != Complex{})
                        m(row, col) = c * sqrt_w_beta_[static_cast<std::size_t>(row)] /
                                      sqrt_w_alpha_[static_cast<std::size_t>(col)];
                }
        }
    matrix_ = std::move(m);
}

const Eigen::MatrixXcd& FiniteSectionOperator::matrix() const {
    if (!matrix_) throw std::logic_error("operator stored matrix-free");
    return *matrix_;
}

Eigen::VectorXcd FiniteSectionOperator::apply_conv(const Eigen::VectorXcd& v, bool adjoint) const {
    const long L = deg_w_;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim());
    if (!adjoint) {
        // out_{k,l} = sqrt_wb(k,l) * sum h_{k-m,l-n} v_{m,n} / sqrt_wa(m,n)
        for (long m = 0; m <= deg_z_; ++m)
            for (long n = 0; n <= deg_w_; ++n) {
                const long col = m * (L + 1) + n;
                const Complex c = v(col) / sqrt_w_alpha_[static_cast<std::size_t>(col)];
                if (c == Complex{}) continue;
                const long kmax = std::min(deg_z_, m + h_.deg_z());
                const long lmax = std::min(deg_w_, n + h_.deg_w());
                for (long k = m; k <= kmax; ++k)
                    for (long l = n; l <= lmax; ++l) {
                        const long row = k * (L + 1) + l;
                        out(row) += h_.at(k - m, l - n) * c *
                                    sqrt_w_beta_[static_cast<std::size_t>(row)];
                    }
            }
    } else {
        for (long m = 0; m <= deg_z_; ++m)
            for (long n = 0; n <= deg_w_; ++n) {
                const long col = m * (L + 1) + n;
                Complex acc{};
                const long kmax = std::min(deg_z_, m + h_.deg_z());
                const long lmax = std::min(deg_w_, n + h_.deg_w());
                for (long k = m; k <= kmax; ++k)
                    for (long l = n; l <= lmax; ++l) {
                        const long row = k * (L + 1) + l;
                        acc += std::conj(h_.at(k - m, l - n)) *
                               sqrt_w_beta_[static_cast<std::size_t>(row)] * v(row);
                    }
                out(col) = acc / sqrt_w_alpha_[static_cast<std::size_t>(col)];
            }
    }
    return out;
}

Eigen::VectorXcd FiniteSectionOperator::apply(const Eigen::VectorXcd& v) const {
    if (matrix_) return (*matrix_) * v;
    return apply_conv(v, false);
}

Eigen::VectorXcd FiniteSectionOperator::apply_adjoint(const Eigen::VectorXcd& v) const {
    if (matrix_) return matrix_->adjoint() * v;
    return apply_conv(v, true);
}

FiniteSectionOperator finite_section(const TruncatedSeries& h, const WeightVector& alpha,
                                     const WeightVector& beta, long deg_z, long deg_w) {
    return FiniteSectionOperator(h, alpha, beta, deg_z, deg_w);
}

NormEstimate operator_norm(const FiniteSectionOperator& op, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(op.dim());
    v /= v.norm();
    NormEstimate est;
    double prev = -1.0;
    for (int it = 1; it <= max_iter; ++it) {
        const Eigen::VectorXcd u = op.apply(v);
        const double sigma = u.norm();
        est.value = sigma;
        est.iterations = it;
        est.residual = std::abs(sigma - prev);
        if (sigma == 0.0) {
            est.converged = true;
            return est;
        }
        if (prev >= 0.0 && est.residual < tol * std::max(1.0, sigma)) {
            est.converged = true;
            return est;
        }
        prev = sigma;
        Eigen::VectorXcd g = op.apply_adjoint(u);
        const double gn = g.norm();
        if (gn == 0.0) {
            est.converged = true;
            return est;
        }
        v = g / gn;
    }
    est.converged = false;
    return est;
}

WeightVector interpolate_weights(const WeightVector& a1, const WeightVector& a2, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("interpolation parameter must lie in [0,1]");
    return {(1.0 - lambda) * a1.alpha1 + lambda * a2.alpha1,
            (1.0 - lambda) * a1.alpha2 + lambda * a2.alpha2};
}

double interpolation_inequality_check(const TruncatedSeries& h, const WeightPair& pair1,
                                      const WeightPair& pair2, double lambda, long deg_z,
                                      long deg_w, double tol) {
    const WeightVector alpha = interpolate_weights(pair1.alpha, pair2.alpha, lambda);
    const WeightVector beta = interpolate_weights(pair1.beta, pair2.beta, lambda);
    const auto section_norm = [&](const WeightVector& a, const WeightVector& b) {
        const NormEstimate e = operator_norm(finite_section(h, a, b, deg_z, deg_w), tol);
        if (!e.converged)
            throw std::runtime_error("operator norm estimate did not converge");
        return e.value;
    };
    const double n1 = section_norm(pair1.alpha, pair1.beta);
    const double n2 = section_norm(pair2.alpha, pair2.beta);
    const double nm = section_norm(alpha, beta);
    return std::pow(n1, 1.0 - lambda) * std::pow(n2, lambda) - nm;
}

PointwiseBoundReport pointwise_bound_check(const TruncatedSeries& h, const WeightVector& alpha,
                                           const WeightVector& beta, double norm_est,
                                           const std::vector<std::pair<Complex, Complex>>& points,
                                           double tol) {
    constexpr long kFunctionalDeg = 8192;
    PointwiseBoundReport report;
    for (const auto& [z, w] : points) {
        const double la = eval_functional_norm_1d(alpha.alpha1, z, kFunctionalDeg).value *
                          eval_functional_norm_1d(alpha.alpha2, w, kFunctionalDeg).value;
        const double lb = eval_functional_norm_1d(beta.alpha1, z, kFunctionalDeg).value *
                          eval_functional_norm_1d(beta.alpha2, w, kFunctionalDeg).value;
        const double lhs = std::abs(h.evaluate(z, w)) * la / lb;
        ++report.points;
        const double excess = lhs / (norm_est * (1.0 + tol)) - 1.0;
        if (excess > 0.0) {
            ++report.violations;
            report.max_violation = std::max(report.max_violation, excess);
        }
    }
    return report;
}

EnvelopeProfile boundary_envelope(const TruncatedSeries& h, const WeightVector& alpha,
                                  const WeightVector& beta, const std::vector<double>& radii,
                                  const std::vector<double>& angles) {
    EnvelopeProfile profile;
    profile.inf_ratio = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        if (r < 0.0 || r >= 1.0) throw std::domain_error("radii must lie in [0,1)");
        const double factor = std::pow(1.0 - r * r, 0.5 * (alpha.alpha1 - beta.alpha1)) *
                              std::pow(1.0 - r * r, 0.5 * (alpha.alpha2 - beta.alpha2));
        double sup_r = 0.0;
        for (double t1 : angles)
            for (double t2 : angles) {
                const Complex z = std::polar(r, t1);
                const Complex w = std::polar(r, t2);
                const double v = std::abs(h.evaluate(z, w)) * factor;
                sup_r = std::max(sup_r, v);
                profile.inf_ratio = std::min(profile.inf_ratio, v);
            }
        profile.per_radius.emplace_back(r, sup_r);
        profile.sup_ratio = std::max(profile.sup_ratio, sup_r);
    }
    return profile;
}

double convolution_weight_bound_1d(long k, double a, double b) {
    double acc = 0.0;
    for (long m = 0; m <= k; ++m)
        acc += weight_at_1d(m, -a) * weight_at_1d(k - m, -b);
    return weight_at_1d(k, b) * acc;
}

double convolution_weight_bound(long k, long l, const WeightVector& alpha,
                                const WeightVector& beta) {
    if (!(alpha.alpha1 > 1.0 && alpha.alpha2 > 1.0))
        throw std::invalid_argument("convolution weight bound requires alpha strictly above (1,1)");
    if (!(beta.alpha1 <= alpha.alpha1 && beta.alpha2 <= alpha.alpha2))
        throw std::invalid_argument("convolution weight bound requires beta <= alpha");
    return convolution_weight_bound_1d(k, alpha.alpha1, beta.alpha1) *
           convolution_weight_bound_1d(l, alpha.alpha2, beta.alpha2);
}

double hinf_norm_estimate(const TruncatedSeries& h, double radius, int angular_count) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("radius must lie in (0,1)");
    if (angular_count < 1) throw std::invalid_argument("angular count must be positive");
    detail::TorusGrid grid(angular_count, angular_count);
    grid.evaluate(h, radius, radius);
    return grid.max_abs();
}

}  // namespace polydirich
