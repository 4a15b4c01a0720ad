#pragma once

#include <utility>
#include <vector>

#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

namespace polydirich {

/// Radial moment w_k = int_0^1 (1-r^2)^{-1-a1} r^{2k+1} dr = (1/2) B(k+1, -a1),
/// via log-Gamma. Requires a1 < 0.
double beta_radial_weight(long k, double a1);

/// beta_radial_weight(k, a1) / (k+1)^{a1}; tends to Gamma(-a1)/2 as k grows.
double hardy_asymptotic_ratio(long k, double a1);

/// Termwise integral realization of the norm for alpha with nonpositive
/// components. Negative components use the exact Beta radial moments (scaled
/// so the weight pair (-1,-1) reproduces the coefficient norm exactly); a
/// zero component uses the Hardy sup realization, which for truncated series
/// is the unweighted coefficient sum in that axis.
double integral_norm_exact(const TruncatedSeries& f, const WeightVector& alpha);
double integral_norm_exact_1d(const UnivariateSeries& f, double a);

/// Tensor-product rule discretizing the fourfold integral: Gauss-Jacobi
/// radial nodes per axis (singular boundary weight folded into the rule) and
/// equispaced angular sampling.
struct QuadratureRule {
    std::vector<double> radial_nodes_z;    // radii in (0,1)
    std::vector<double> radial_weights_z;  // sum W_i p(r_i^2) = int (1-r^2)^{-1-a1} p(r^2) r dr
    std::vector<double> radial_nodes_w;
    std::vector<double> radial_weights_w;
    int angular_z = 0;
    int angular_w = 0;
};

/// Rule exact for series up to the given degrees (angular count 2*deg+1,
/// radial count at least ceil((deg+1)/2)). Requires negative components.
QuadratureRule make_quadrature_rule(const WeightVector& alpha, long deg_z, long deg_w,
                                    int n_radial = 0);

/// Discretized fourfold integral; angular resolution below 2*deg+1 is a
/// configuration error.
double integral_norm_quadrature(const TruncatedSeries& f, const WeightVector& alpha,
                                const QuadratureRule& rule);

/// Hardy-space norm sqrt(sup_r angular mean of |f|^2): max over the radius
/// grid, each mean evaluated termwise by Parseval.
double hardy_norm_sup(const TruncatedSeries& f, const std::vector<double>& r_grid);

/// The r -> 1 limit of the angular mean: the unweighted coefficient sum.
double hardy_norm_limit(const TruncatedSeries& f);

/// (c_low, c_high): extremes over the grid of the termwise ratio between the
/// integral weights and the power weights; brackets the integral-to-l2 norm
/// ratio for any series supported on the grid. Requires negative components.
std::pair<double, double> equivalence_constants(const WeightVector& alpha, long deg_z, long deg_w);

/// n-point Gauss rule for int_0^1 (1-u)^c f(u) du, c > -1 (Golub-Welsch on
/// the Jacobi recurrence). Exposed for direct testing.
void gauss_jacobi_01(double c, int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace polydirich
