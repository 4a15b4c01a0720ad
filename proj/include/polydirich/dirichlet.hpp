#pragma once

#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

namespace polydirich {

/// Truncated point-evaluation functional norm together with a rigorous bound
/// on what the omitted tail can add to it.
struct FunctionalNormResult {
    double value;       // sqrt of the truncated weighted sum
    double tail_bound;  // value of the full sum is within [value, value + tail_bound]
    long deg_z;
    long deg_w;
};

/// sqrt(sum |a_{k,l}|^2 (k+1)^{a1} (l+1)^{a2}) over the stored grid.
double norm(const TruncatedSeries& f, const WeightVector& alpha);
double norm_1d(const UnivariateSeries& f, double a);

/// sum a_{k,l} conj(b_{k,l}) (k+1)^{a1} (l+1)^{a2}; coefficients outside
/// either grid count as zero.
Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const WeightVector& alpha);
Complex inner_product_1d(const UnivariateSeries& f, const UnivariateSeries& g, double a);

/// Norm of point evaluation at (z,w) on the weighted space, truncated at the
/// given degrees. Requires |z| < 1 and |w| < 1.
FunctionalNormResult eval_functional_norm(const WeightVector& alpha, Complex z, Complex w,
                                          long deg_z, long deg_w);
FunctionalNormResult eval_functional_norm_1d(double a, Complex z, long deg);

/// Coefficient grid conj(z0)^k conj(w0)^l (k+1)^{-a1} (l+1)^{-a2}.
TruncatedSeries kernel_series(const WeightVector& alpha, Complex z0, Complex w0,
                              long deg_z, long deg_w);

/// Uniform constant with |f(z,w)| <= bound * norm(f, alpha) on the bidisc.
/// Requires alpha strictly greater than (1,1) componentwise; the returned
/// value includes an integral-comparison bound on the truncated tail.
double hinf_sup_bound(const WeightVector& alpha, long deg_z, long deg_w);

}  // namespace polydirich
