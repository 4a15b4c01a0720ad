#include "polydirich/series.hpp"

#include <cmath>
#include <stdexcept>

namespace polydirich {

namespace {

void check_finite(const std::vector<Complex>& c) {
    for (const auto& v : c) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("series coefficient is not finite");
    }
}

void check_in_disc(Complex p, const char* what) {
    if (std::abs(p) >= 1.0) throw std::domain_error(std::string(what) + " must lie in the open unit disc");
}

// Sum of t_i for i in [0, n), where pairs (i, n-1-i) are combined first and
// pairs are visited in ascending i. Reversing the term sequence leaves the
// result bit-identical.
template <typename Term>
Complex symmetric_sum(long n, Term term) {
    Complex acc{};
    for (long i = 0, j = n - 1; i <= j; ++i, --j) {
        if (i == j)
            acc += term(i);
        else
            acc += term(i) + term(j);
    }
    return acc;
}

}  // namespace

UnivariateSeries::UnivariateSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("univariate series needs at least one coefficient");
    check_finite(coeffs_);
}

UnivariateSeries UnivariateSeries::zero(long deg) {
    if (deg < 0) throw std::invalid_argument("degree must be nonnegative");
    return UnivariateSeries(std::vector<Complex>(static_cast<std::size_t>(deg) + 1));
}

Complex UnivariateSeries::evaluate(Complex z) const {
    check_in_disc(z, "evaluation point");
    Complex acc{};
    Complex zk{1.0, 0.0};
    for (const auto& b : coeffs_) {
        acc += b * zk;
        zk *= z;
    }
    return acc;
}

TruncatedSeries::TruncatedSeries(long deg_z, long deg_w)
    : deg_z_(deg_z), deg_w_(deg_w),
      coeffs_(static_cast<std::size_t>((deg_z + 1) * (deg_w + 1))) {
    if (deg_z < 0 || deg_w < 0) throw std::invalid_argument("degrees must be nonnegative");
}

TruncatedSeries::TruncatedSeries(long deg_z, long deg_w, std::vector<Complex> coeffs)
    : deg_z_(deg_z), deg_w_(deg_w), coeffs_(std::move(coeffs)) {
    validate();
}

void TruncatedSeries::validate() const {
    if (deg_z_ < 0 || deg_w_ < 0) throw std::invalid_argument("degrees must be nonnegative");
    if (static_cast<long>(coeffs_.size()) != (deg_z_ + 1) * (deg_w_ + 1))
        throw std::invalid_argument("coefficient grid has wrong shape");
    check_finite(coeffs_);
}

Complex TruncatedSeries::evaluate(Complex z, Complex w) const {
    check_in_disc(z, "evaluation point");
    check_in_disc(w, "evaluation point");
    std::vector<Complex> wl(static_cast<std::size_t>(deg_w_) + 1);
    wl[0] = Complex{1.0, 0.0};
    for (long l = 1; l <= deg_w_; ++l) wl[static_cast<std::size_t>(l)] = wl[static_cast<std::size_t>(l - 1)] * w;
    Complex acc{};
    Complex zk{1.0, 0.0};
    std::size_t idx = 0;
    for (long k = 0; k <= deg_z_; ++k) {
        for (long l = 0; l <= deg_w_; ++l) acc += coeffs_[idx++] * zk * wl[static_cast<std::size_t>(l)];
        zk *= z;
    }
    return acc;
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(f.deg_z() + g.deg_z(), f.deg_w() + g.deg_w());
    for (long k = 0; k <= out.deg_z(); ++k) {
        for (long l = 0; l <= out.deg_w(); ++l) {
            const long n = (k + 1) * (l + 1);
            out(k, l) = symmetric_sum(n, [&](long i) {
                const long m = i / (l + 1);
                const long q = i % (l + 1);
                return f.at(m, q) * g.at(k - m, l - q);
            });
        }
    }
    return out;
}

UnivariateSeries cauchy_product(const UnivariateSeries& f, const UnivariateSeries& g) {
    UnivariateSeries out = UnivariateSeries::zero(f.deg() + g.deg());
    for (long k = 0; k <= out.deg(); ++k) {
        out[k] = symmetric_sum(k + 1, [&](long m) { return f.at(m) * g.at(k - m); });
    }
    return out;
}

UnivariateSeries slice_w(const TruncatedSeries& f, Complex w0) {
    check_in_disc(w0, "slice point");
    UnivariateSeries out = UnivariateSeries::zero(f.deg_z());
    for (long k = 0; k <= f.deg_z(); ++k) {
        Complex acc{};
        Complex wl{1.0, 0.0};
        for (long l = 0; l <= f.deg_w(); ++l) {
            acc += f.at(k, l) * wl;
            wl *= w0;
        }
        out[k] = acc;
    }
    return out;
}

UnivariateSeries slice_z(const TruncatedSeries& f, Complex z0) {
    check_in_disc(z0, "slice point");
    UnivariateSeries out = UnivariateSeries::zero(f.deg_w());
    for (long l = 0; l <= f.deg_w(); ++l) {
        Complex acc{};
        Complex zk{1.0, 0.0};
        for (long k = 0; k <= f.deg_z(); ++k) {
            acc += f.at(k, l) * zk;
            zk *= z0;
        }
        out[l] = acc;
    }
    return out;
}

TruncatedSeries tensor_product(const UnivariateSeries& f1, const UnivariateSeries& f2) {
    TruncatedSeries out(f1.deg(), f2.deg());
    for (long k = 0; k <= f1.deg(); ++k)
        for (long l = 0; l <= f2.deg(); ++l) out(k, l) = f1.at(k) * f2.at(l);
    return out;
}

TruncatedSeries lift_z(const UnivariateSeries& f) {
    TruncatedSeries out(f.deg(), 0);
    for (long k = 0; k <= f.deg(); ++k) out(k, 0) = f.at(k);
    return out;
}

}  // namespace polydirich
