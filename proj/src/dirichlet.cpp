#include "polydirich/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polydirich {

namespace {

void check_in_disc(Complex p) {
    if (std::abs(p) >= 1.0) throw std::domain_error("point must lie in the open unit disc");
}

// Upper bound on sum_{k>N} m^k (k+1)^{-a} for 0 <= m < 1. For a < 0 the
// summand grows polynomially before the geometric factor wins; terms up to
// the turnover index of (k+1)^{-a} m^{k/2} are added explicitly, after which
// the remainder is dominated by a geometric series in sqrt(m).
double tail_1d(double a, double m, long N) {
    if (m == 0.0) return 0.0;
    double extra = 0.0;
    long M = N;
    if (a < 0.0) {
        const long turnover = static_cast<long>(std::ceil(2.0 * (-a) / (-std::log(m))));
        while (M < turnover) {
            ++M;
            extra += std::exp(M * std::log(m)) * weight_at_1d(M, -a);
        }
    }
    const double ratio = (a >= 0.0) ? m : std::sqrt(m);
    const double geo = weight_at_1d(M + 1, -a) * std::exp((M + 1) * std::log(m)) / (1.0 - ratio);
    return extra + geo;
}

}  // namespace

double norm(const TruncatedSeries& f, const WeightVector& alpha) {
    double acc = 0.0;
    for (long k = 0; k <= f.deg_z(); ++k) {
        const double wk = weight_at_1d(k, alpha.alpha1);
        for (long l = 0; l <= f.deg_w(); ++l)
            acc += std::norm(f.at(k, l)) * wk * weight_at_1d(l, alpha.alpha2);
    }
    return std::sqrt(acc);
}

double norm_1d(const UnivariateSeries& f, double a) {
    double acc = 0.0;
    for (long k = 0; k <= f.deg(); ++k) acc += std::norm(f.at(k)) * weight_at_1d(k, a);
    return std::sqrt(acc);
}

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const WeightVector& alpha) {
    const long K = std::min(f.deg_z(), g.deg_z());
    const long L = std::min(f.deg_w(), g.deg_w());
    Complex acc{};
    for (long k = 0; k <= K; ++k) {
        const double wk = weight_at_1d(k, alpha.alpha1);
        for (long l = 0; l <= L; ++l)
            acc += f.at(k, l) * std::conj(g.at(k, l)) * (wk * weight_at_1d(l, alpha.alpha2));
    }
    return acc;
}

Complex inner_product_1d(const UnivariateSeries& f, const UnivariateSeries& g, double a) {
    const long K = std::min(f.deg(), g.deg());
    Complex acc{};
    for (long k = 0; k <= K; ++k) acc += f.at(k) * std::conj(g.at(k)) * weight_at_1d(k, a);
    return acc;
}

FunctionalNormResult eval_functional_norm(const WeightVector& alpha, Complex z, Complex w,
                                          long deg_z, long deg_w) {
    check_in_disc(z);
    check_in_disc(w);
    const double x = std::norm(z);
    const double y = std::norm(w);
    std::vector<double> vk(static_cast<std::size_t>(deg_z) + 1);
    std::vector<double> ul(static_cast<std::size_t>(deg_w) + 1);
    double xk = 1.0, s1 = 0.0;
    for (long k = 0; k <= deg_z; ++k) {
        vk[static_cast<std::size_t>(k)] = xk * weight_at_1d(k, -alpha.alpha1);
        s1 += vk[static_cast<std::size_t>(k)];
        xk *= x;
    }
    double yl = 1.0, s2 = 0.0;
    for (long l = 0; l <= deg_w; ++l) {
        ul[static_cast<std::size_t>(l)] = yl * weight_at_1d(l, -alpha.alpha2);
        s2 += ul[static_cast<std::size_t>(l)];
        yl *= y;
    }
    double s = 0.0;
    for (long k = 0; k <= deg_z; ++k)
        for (long l = 0; l <= deg_w; ++l)
            s += vk[static_cast<std::size_t>(k)] * ul[static_cast<std::size_t>(l)];
    const double t1 = tail_1d(alpha.alpha1, x, deg_z);
    const double t2 = tail_1d(alpha.alpha2, y, deg_w);
    const double tail_sq = t1 * (s2 + t2) + s1 * t2;
    const double value = std::sqrt(s);
    return {value, std::sqrt(s + tail_sq) - value, deg_z, deg_w};
}

FunctionalNormResult eval_functional_norm_1d(double a, Complex z, long deg) {
    check_in_disc(z);
    const double x = std::norm(z);
    double s = 0.0, xk = 1.0;
    for (long k = 0; k <= deg; ++k) {
        s += xk * weight_at_1d(k, -a);
        xk *= x;
    }
    const double value = std::sqrt(s);
    return {value, std::sqrt(s + tail_1d(a, x, deg)) - value, deg, 0};
}

TruncatedSeries kernel_series(const WeightVector& alpha, Complex z0, Complex w0,
                              long deg_z, long deg_w) {
    check_in_disc(z0);
    check_in_disc(w0);
    TruncatedSeries out(deg_z, deg_w);
    Complex zk{1.0, 0.0};
    for (long k = 0; k <= deg_z; ++k) {
        const Complex row = zk * weight_at_1d(k, -alpha.alpha1);
        Complex wl{1.0, 0.0};
        for (long l = 0; l <= deg_w; ++l) {
            out(k, l) = row * wl * weight_at_1d(l, -alpha.alpha2);
            wl *= std::conj(w0);
        }
        zk *= std::conj(z0);
    }
    return out;
}

double hinf_sup_bound(const WeightVector& alpha, long deg_z, long deg_w) {
    if (!(alpha.alpha1 > 1.0 && alpha.alpha2 > 1.0))
        throw std::invalid_argument("hinf_sup_bound requires alpha strictly greater than (1,1)");
    double s1 = 0.0, s2 = 0.0;
    for (long k = 0; k <= deg_z; ++k) s1 += weight_at_1d(k, -alpha.alpha1);
    for (long l = 0; l <= deg_w; ++l) s2 += weight_at_1d(l, -alpha.alpha2);
    // integral comparison: sum_{k>K} (k+1)^{-a} <= (K+1)^{1-a}/(a-1)
    const double t1 = weight_at_1d(deg_z, 1.0 - alpha.alpha1) / (alpha.alpha1 - 1.0);
    const double t2 = weight_at_1d(deg_w, 1.0 - alpha.alpha2) / (alpha.alpha2 - 1.0);
    return std::sqrt(s1 * s2 + t1 * (s2 + t2) + s1 * t2);
}

}  // namespace polydirich
