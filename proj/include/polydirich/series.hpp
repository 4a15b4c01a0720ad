#pragma once

#include <complex>
#include <vector>

namespace polydirich {

using Complex = std::complex<double>;

/// Degree-K complex coefficient vector b_0..b_K for a univariate Taylor
/// polynomial on the unit disc.
class UnivariateSeries {
  public:
    UnivariateSeries() : coeffs_(1) {}
    explicit UnivariateSeries(std::vector<Complex> coeffs);
    static UnivariateSeries zero(long deg);

    long deg() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient b_k; out-of-range indices read as zero.
    Complex at(long k) const {
        return (k >= 0 && k < static_cast<long>(coeffs_.size())) ? coeffs_[k] : Complex{};
    }
    Complex& operator[](long k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Sum b_k z^k in ascending k. Requires |z| < 1.
    Complex evaluate(Complex z) const;

  private:
    std::vector<Complex> coeffs_;
};

/// Dense (K+1)x(L+1) complex coefficient grid for a bivariate Taylor
/// polynomial; entry (k,l) is the coefficient of z^k w^l. Row-major storage.
class TruncatedSeries {
  public:
    TruncatedSeries() : deg_z_(0), deg_w_(0), coeffs_(1) {}
    TruncatedSeries(long deg_z, long deg_w);
    TruncatedSeries(long deg_z, long deg_w, std::vector<Complex> coeffs);

    long deg_z() const { return deg_z_; }
    long deg_w() const { return deg_w_; }
    /// Coefficient a_{k,l}; out-of-range indices read as zero.
    Complex at(long k, long l) const {
        if (k < 0 || l < 0 || k > deg_z_ || l > deg_w_) return Complex{};
        return coeffs_[static_cast<std::size_t>(k * (deg_w_ + 1) + l)];
    }
    Complex& operator()(long k, long l) {
        return coeffs_[static_cast<std::size_t>(k * (deg_w_ + 1) + l)];
    }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Sum a_{k,l} z^k w^l, accumulated row-major in ascending (k,l).
    /// Requires |z| < 1 and |w| < 1.
    Complex evaluate(Complex z, Complex w) const;

  private:
    void validate() const;
    long deg_z_;
    long deg_w_;
    std::vector<Complex> coeffs_;
};

/// Truncated product; result degrees add. Terms of each convolution sum are
/// accumulated in centrally symmetric pairs so that the product commutes
/// bit-for-bit.
TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g);
UnivariateSeries cauchy_product(const UnivariateSeries& f, const UnivariateSeries& g);

/// Freeze the second coordinate: b_k = sum_l a_{k,l} w0^l. Requires |w0| < 1.
UnivariateSeries slice_w(const TruncatedSeries& f, Complex w0);
/// Freeze the first coordinate: b_l = sum_k a_{k,l} z0^k. Requires |z0| < 1.
UnivariateSeries slice_z(const TruncatedSeries& f, Complex z0);

/// Coefficient grid b1_k * b2_l.
TruncatedSeries tensor_product(const UnivariateSeries& f1, const UnivariateSeries& f2);

/// Lift a univariate series in z to a bivariate one constant in w.
TruncatedSeries lift_z(const UnivariateSeries& f);

}  // namespace polydirich
