#include "polydirich/integral.hpp"

#include <fftw3.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "polydirich/detail/torus.hpp"

namespace polydirich {

namespace detail {

namespace {
std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe
}

TorusGrid::TorusGrid(int angular_z, int angular_w)
    : P_(angular_z), Q_(angular_w),
      in_(static_cast<std::size_t>(angular_z) * angular_w),
      out_(static_cast<std::size_t>(angular_z) * angular_w) {
    if (P_ < 1 || Q_ < 1) throw std::invalid_argument("angular counts must be positive");
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    plan_ = fftw_plan_dft_2d(P_, Q_, reinterpret_cast<fftw_complex*>(in_.data()),
                             reinterpret_cast<fftw_complex*>(out_.data()), FFTW_BACKWARD,
                             FFTW_ESTIMATE);
}

TorusGrid::~TorusGrid() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void TorusGrid::evaluate(const TruncatedSeries& f, double r1, double r2) {
    std::fill(in_.begin(), in_.end(), Complex{});
    double rk = 1.0;
    for (long k = 0; k <= f.deg_z(); ++k) {
        const long p = k % P_;
        double rl = 1.0;
        for (long l = 0; l <= f.deg_w(); ++l) {
            in_[static_cast<std::size_t>(p * Q_ + l % Q_)] += f.at(k, l) * (rk * rl);
            rl *= r2;
        }
        rk *= r1;
    }
    fftw_execute(static_cast<fftw_plan>(plan_));
}

double TorusGrid::mean_abs2() const {
    double acc = 0.0;
    for (const auto& v : out_) acc += std::norm(v);
    return acc / static_cast<double>(out_.size());
}

double TorusGrid::max_abs() const {
    double m = 0.0;
    for (const auto& v : out_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace detail

double beta_radial_weight(long k, double a1) {
    if (!(a1 < 0.0)) throw std::invalid_argument("beta_radial_weight requires a1 < 0");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    // Integer -a1: B(k+1, m) = (m-1)! / ((k+1)...(k+m)), exact without the
    // cancellation the log-Gamma route suffers at large k.
    const double m = std::round(-a1);
    if (m == -a1 && m <= 64.0) {
        double v = 0.5 * std::tgamma(m);
        for (long j = 1; j <= static_cast<long>(m); ++j) v /= static_cast<double>(k + j);
        return v;
    }
    return 0.5 * std::exp(std::lgamma(k + 1.0) + std::lgamma(-a1) - std::lgamma(k + 1.0 - a1));
}

double hardy_asymptotic_ratio(long k, double a1) {
    return beta_radial_weight(k, a1) / weight_at_1d(k, a1);
}

namespace {

double axis_factor(long k, double a) {
    return a < 0.0 ? 2.0 * beta_radial_weight(k, a) : 1.0;
}

}  // namespace

double integral_norm_exact(const TruncatedSeries& f, const WeightVector& alpha) {
    if (alpha.alpha1 > 0.0 || alpha.alpha2 > 0.0)
        throw std::invalid_argument("integral norm requires nonpositive weight components");
    double acc = 0.0;
    for (long k = 0; k <= f.deg_z(); ++k) {
        const double fk = axis_factor(k, alpha.alpha1);
        for (long l = 0; l <= f.deg_w(); ++l)
            acc += std::norm(f.at(k, l)) * fk * axis_factor(l, alpha.alpha2);
    }
    return std::sqrt(acc);
}

double integral_norm_exact_1d(const UnivariateSeries& f, double a) {
    if (a > 0.0) throw std::invalid_argument("integral norm requires a nonpositive weight");
    double acc = 0.0;
    for (long k = 0; k <= f.deg(); ++k) acc += std::norm(f.at(k)) * axis_factor(k, a);
    return std::sqrt(acc);
}

void gauss_jacobi_01(double c, int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (!(c > -1.0)) throw std::invalid_argument("Jacobi exponent must exceed -1");
    if (n < 1) throw std::invalid_argument("rule size must be positive");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    J(0, 0) = -c / (c + 2.0);
    for (int i = 1; i < n; ++i) {
        const double s = 2.0 * i + c;
        J(i, i) = -c * c / (s * (s + 2.0));
        const double b = 4.0 * i * i * (i + c) * (i + c) / (s * s * (s * s - 1.0));
        J(i, i - 1) = J(i - 1, i) = std::sqrt(b);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::exp((c + 1.0) * std::log(2.0)) / (c + 1.0);
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    const double scale = std::exp(-(c + 1.0) * std::log(2.0));  // [-1,1] -> [0,1]
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + es.eigenvalues()(i));
        const double v0 = es.eigenvectors()(0, i);
        weights[static_cast<std::size_t>(i)] = scale * mu0 * v0 * v0;
    }
}

QuadratureRule make_quadrature_rule(const WeightVector& alpha, long deg_z, long deg_w,
                                    int n_radial) {
    if (!(alpha.alpha1 < 0.0 && alpha.alpha2 < 0.0))
        throw std::invalid_argument("quadrature rule requires negative weight components");
    QuadratureRule rule;
    rule.angular_z = static_cast<int>(2 * deg_z + 1);
    rule.angular_w = static_cast<int>(2 * deg_w + 1);
    const auto build = [&](double a, long deg, std::vector<double>& r, std::vector<double>& w) {
        const int n = n_radial > 0 ? n_radial : static_cast<int>(deg / 2 + 1);
        std::vector<double> u, wu;
        gauss_jacobi_01(-1.0 - a, n, u, wu);
        r.resize(u.size());
        w.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            r[i] = std::sqrt(u[i]);
            w[i] = 0.5 * wu[i];  // du = 2 r dr
        }
    };
    build(alpha.alpha1, deg_z, rule.radial_nodes_z, rule.radial_weights_z);
    build(alpha.alpha2, deg_w, rule.radial_nodes_w, rule.radial_weights_w);
    return rule;
}

double integral_norm_quadrature(const TruncatedSeries& f, const WeightVector& alpha,
                                const QuadratureRule& rule) {
    if (alpha.alpha1 > 0.0 || alpha.alpha2 > 0.0)
        throw std::invalid_argument("integral norm requires nonpositive weight components");
    if (rule.angular_z < 2 * f.deg_z() + 1 || rule.angular_w < 2 * f.deg_w() + 1)
        throw std::invalid_argument("angular resolution below 2*deg+1");
    detail::TorusGrid grid(rule.angular_z, rule.angular_w);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.radial_nodes_z.size(); ++i) {
        for (std::size_t j = 0; j < rule.radial_nodes_w.size(); ++j) {
            grid.evaluate(f, rule.radial_nodes_z[i], rule.radial_nodes_w[j]);
            acc += rule.radial_weights_z[i] * rule.radial_weights_w[j] * grid.mean_abs2();
        }
    }
    return std::sqrt(4.0 * acc);
}

double hardy_norm_sup(const TruncatedSeries& f, const std::vector<double>& r_grid) {
    double best = 0.0;
    for (double r : r_grid) {
        if (r < 0.0 || r >= 1.0) throw std::domain_error("radii must lie in [0,1)");
        const double r2 = r * r;
        std::vector<double> pow_r2(static_cast<std::size_t>(f.deg_z() + f.deg_w()) + 1);
        pow_r2[0] = 1.0;
        for (std::size_t i = 1; i < pow_r2.size(); ++i) pow_r2[i] = pow_r2[i - 1] * r2;
        double mean = 0.0;
        for (long k = 0; k <= f.deg_z(); ++k)
            for (long l = 0; l <= f.deg_w(); ++l)
                mean += std::norm(f.at(k, l)) * pow_r2[static_cast<std::size_t>(k + l)];
        best = std::max(best, mean);
    }
    return std::sqrt(best);
}

double hardy_norm_limit(const TruncatedSeries& f) {
    double acc = 0.0;
    for (const auto& c : f.coeffs()) acc += std::norm(c);
    return std::sqrt(acc);
}

std::pair<double, double> equivalence_constants(const WeightVector& alpha, long deg_z, long deg_w) {
    if (!(alpha.alpha1 < 0.0 && alpha.alpha2 < 0.0))
        throw std::invalid_argument("equivalence constants require negative weight components");
    const auto axis_extremes = [](double a, long deg) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (long k = 0; k <= deg; ++k) {
            const double r = 2.0 * hardy_asymptotic_ratio(k, a);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [lo1, hi1] = axis_extremes(alpha.alpha1, deg_z);
    const auto [lo2, hi2] = axis_extremes(alpha.alpha2, deg_w);
    return {lo1 * lo2, hi1 * hi2};
}

}  // namespace polydirich
