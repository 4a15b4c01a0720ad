#include "polydirich/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "polydirich/dirichlet.hpp"
#include "polydirich/families.hpp"
#include "polydirich/integral.hpp"
#include "polydirich/multiplier.hpp"
#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

namespace polydirich {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(DivergenceClass c) {
    switch (c) {
        case DivergenceClass::convergent: return "convergent";
        case DivergenceClass::log_divergent: return "log_divergent";
        case DivergenceClass::power_divergent: return "power_divergent";
        case DivergenceClass::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct LinFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rel_residual = 0.0;
};

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0, scale = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
        scale += std::abs(y[i]);
    }
    fit.rel_residual = std::sqrt(ss / n) / std::max(1.0, scale / n);
    return fit;
}

}  // namespace

DivergenceVerdict divergence_trend(const std::vector<std::pair<double, double>>& partial_sums,
                                   double residual_bound, double cauchy_tol) {
    if (partial_sums.size() < 4)
        throw std::invalid_argument("divergence_trend requires at least 4 samples");
    for (std::size_t i = 1; i < partial_sums.size(); ++i)
        if (!(partial_sums[i].first > partial_sums[i - 1].first))
            throw std::invalid_argument("divergence_trend requires increasing sample sizes");

    DivergenceVerdict verdict;
    const std::size_t n = partial_sums.size();
    const double s_last = partial_sums[n - 1].second;
    const double inc_last = std::abs(s_last - partial_sums[n - 2].second);
    const double inc_first = std::abs(partial_sums[1].second - partial_sums[0].second);
    if (inc_last <= cauchy_tol * std::max(1.0, std::abs(s_last)) &&
        inc_last <= inc_first + 1e-15) {
        verdict.classification = DivergenceClass::convergent;
        verdict.fit_constant = s_last;
        verdict.fit_residual = inc_last;
        return verdict;
    }

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = partial_sums[i].second;

    std::vector<double> x_log(n);
    for (std::size_t i = 0; i < n; ++i) x_log[i] = std::log(partial_sums[i].first);
    const LinFit log_fit = linear_fit(x_log, y);

    LinFit best_pow;
    best_pow.rel_residual = std::numeric_limits<double>::infinity();
    double best_p = 0.0;
    for (double p = 0.25; p <= 2.0 + 1e-9; p += 0.25) {
        std::vector<double> xp(n);
        for (std::size_t i = 0; i < n; ++i) xp[i] = std::pow(partial_sums[i].first, p);
        const LinFit fit = linear_fit(xp, y);
        if (fit.slope > 0.0 && fit.rel_residual < best_pow.rel_residual) {
            best_pow = fit;
            best_p = p;
        }
    }

    if (log_fit.rel_residual <= best_pow.rel_residual && log_fit.slope > 0.0) {
        verdict.fit_constant = log_fit.slope;
        verdict.fit_residual = log_fit.rel_residual;
        verdict.classification = log_fit.rel_residual < residual_bound
                                     ? DivergenceClass::log_divergent
                                     : DivergenceClass::inconclusive;
    } else if (best_pow.rel_residual < std::numeric_limits<double>::infinity()) {
        verdict.fit_constant = best_pow.slope;
        verdict.fit_residual = best_pow.rel_residual;
        verdict.exponent = best_p;
        verdict.classification = best_pow.rel_residual < residual_bound
                                     ? DivergenceClass::power_divergent
                                     : DivergenceClass::inconclusive;
    }
    return verdict;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kTrendLoExp = 8;

struct CheckContext {
    const HarnessConfig& cfg;
    CheckReport& r;
    std::mt19937_64 rng;
    bool ok = true;
    bool skipped = false;

    double param(const std::string& key, double def) {
        auto it = r.params.find(key);
        if (it != r.params.end()) return it->second;
        r.params[key] = def;
        return def;
    }
    void metric(const std::string& key, double v) { r.metrics[key] = v; }
    void tolerance(const std::string& key, double v) { r.tolerances[key] = v; }
    void require(bool cond) { ok = ok && cond; }
    void skip(const std::string& note) {
        skipped = true;
        r.note = note;
    }
    bool trend_resolution_ok() const { return cfg.deg >= 256 && cfg.max_dyadic_exp >= 11; }

    Complex rand_disc() {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double radius = std::sqrt(u(rng));
        const double angle = 2.0 * std::numbers::pi * u(rng);
        return std::polar(radius, angle);
    }
    TruncatedSeries rand_series(long deg_z, long deg_w) {
        TruncatedSeries f(deg_z, deg_w);
        for (long k = 0; k <= deg_z; ++k)
            for (long l = 0; l <= deg_w; ++l)
                f(k, l) = rand_disc() / ((k + 1.0) * (l + 1.0));
        return f;
    }
    UnivariateSeries rand_series_1d(long deg) {
        UnivariateSeries f = UnivariateSeries::zero(deg);
        for (long k = 0; k <= deg; ++k) f[k] = rand_disc() / (k + 1.0);
        return f;
    }
};

std::vector<std::pair<double, double>> dyadic_partial_sums(const std::function<double(long)>& term,
                                                           int lo_exp, int hi_exp) {
    std::vector<std::pair<double, double>> out;
    double s = 0.0;
    long n = 0;
    for (int e = lo_exp; e <= hi_exp; ++e) {
        const long limit = 1L << e;
        for (; n <= limit; ++n) s += term(n);
        out.emplace_back(static_cast<double>(limit), s);
    }
    return out;
}

void record_trend(CheckContext& c, const std::string& prefix, const DivergenceVerdict& v) {
    c.metric(prefix + "_class", static_cast<double>(v.classification));
    c.metric(prefix + "_fit_constant", v.fit_constant);
    c.metric(prefix + "_fit_residual", v.fit_residual);
    if (v.exponent != 0.0) c.metric(prefix + "_exponent", v.exponent);
}

// --- containment checks -----------------------------------------------------

void check_proper_containment(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.0), c.param("a2", 0.0)};
    const WeightVector beta{c.param("b1", -1.0), c.param("b2", -1.0)};
    if (compare(alpha, beta) != Order::strictly_greater) {
        c.require(false);
        c.r.note = "weight order violated: containment direction needs alpha strictly above beta";
        return;
    }
    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    // Family coefficients put |a_k|^2 (k+1)^{a1} = 1/(k+1) per axis, so the
    // alpha-norm square is the product of two harmonic sums. The z-axis
    // factor carries the divergence.
    const auto harmonic = dyadic_partial_sums([](long k) { return 1.0 / (k + 1.0); },
                                              kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict div = divergence_trend(harmonic);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    c.tolerance("fit_constant_rel", 0.10);
    c.require(std::abs(div.fit_constant - 1.0) <= 0.10);

    const double e1 = beta.alpha1 - alpha.alpha1 - 1.0;
    const double e2 = beta.alpha2 - alpha.alpha2 - 1.0;
    double part1 = 0.0, part2 = 0.0;
    std::vector<std::pair<double, double>> beta_sums;
    long n = 0;
    for (int e = kTrendLoExp; e <= c.cfg.max_dyadic_exp; ++e) {
        const long limit = 1L << e;
        for (; n <= limit; ++n) {
            part1 += weight_at_1d(n, e1);
            part2 += weight_at_1d(n, e2);
        }
        beta_sums.emplace_back(static_cast<double>(limit), part1 * part2);
    }
    const DivergenceVerdict conv = divergence_trend(beta_sums);
    record_trend(c, "convergent", conv);
    c.require(conv.classification == DivergenceClass::convergent);
}

void check_remark_containment(CheckContext& c) {
    const double a1 = c.param("a1", 0.0);
    const double b1 = c.param("b1", -1.0);
    const double a2 = c.param("a2", 0.0);
    const double b2 = c.param("b2", 0.0);
    if (!(a1 > b1 && a2 == b2)) {
        c.require(false);
        c.r.note = "requires a1 > b1 with the second components equal";
        return;
    }
    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    const auto div_sums = dyadic_partial_sums([](long k) { return 1.0 / (k + 1.0); },
                                              kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict div = divergence_trend(div_sums);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    c.require(std::abs(div.fit_constant - 1.0) <= 0.10);

    const double e1 = b1 - a1 - 1.0;
    const auto conv_sums = dyadic_partial_sums([&](long k) { return weight_at_1d(k, e1); },
                                               kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict conv = divergence_trend(conv_sums);
    record_trend(c, "convergent", conv);
    c.require(conv.classification == DivergenceClass::convergent);
}

void check_d_in_hinf(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 2.0), c.param("a2", 2.0)};
    const long deg = static_cast<long>(c.param("deg", 64));
    const double bound = hinf_sup_bound(alpha, deg, deg);
    c.metric("sup_bound", bound);
    double max_ratio = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const TruncatedSeries f = c.rand_series(deg, deg);
        const double nf = norm(f, alpha);
        for (int p = 0; p < 10; ++p) {
            const Complex z = c.rand_disc() * 0.95;
            const Complex w = c.rand_disc() * 0.95;
            max_ratio = std::max(max_ratio, std::abs(f.evaluate(z, w)) / (bound * nf));
        }
    }
    c.metric("max_ratio", max_ratio);
    c.require(max_ratio <= 1.0);
}

void check_integral_equivalence(CheckContext& c) {
    const WeightVector alpha{c.param("a1", -1.5), c.param("a2", -0.5)};
    const long deg = static_cast<long>(c.param("deg", 48));
    const auto [c_lo, c_hi] = equivalence_constants(alpha, deg, deg);
    c.metric("c_lo", c_lo);
    c.metric("c_hi", c_hi);
    const QuadratureRule rule = make_quadrature_rule(alpha, deg, deg);
    double max_quad_err = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const TruncatedSeries f = c.rand_series(deg, deg);
        const double n2 = norm(f, alpha);
        const double exact = integral_norm_exact(f, alpha);
        const double ratio_sq = (exact * exact) / (n2 * n2);
        c.require(ratio_sq >= c_lo * (1.0 - 1e-12) && ratio_sq <= c_hi * (1.0 + 1e-12));
        const double quad = integral_norm_quadrature(f, alpha, rule);
        max_quad_err = std::max(max_quad_err, std::abs(quad - exact) / std::max(1.0, exact));
    }
    c.metric("max_quadrature_error", max_quad_err);
    c.tolerance("quadrature", 1e-8);
    c.require(max_quad_err < 1e-8);
}

// --- multiplier characterizations -------------------------------------------

std::vector<double> section_norms(CheckContext& c, const std::function<TruncatedSeries(long)>& h_at,
                                  const WeightVector& alpha, const WeightVector& beta,
                                  const std::vector<long>& degrees) {
    std::vector<double> out;
    for (long d : degrees) {
        const NormEstimate est = operator_norm(finite_section(h_at(d), alpha, beta, d, d), 1e-8, 5000);
        c.require(est.converged);
        out.push_back(est.value);
    }
    return out;
}

void check_multipliers_below_zero_iff(CheckContext& c) {
    const WeightVector alpha{c.param("a1", -1.0), c.param("a2", -1.0)};
    const WeightVector beta = alpha;
    const std::vector<long> degrees{4, 8, 16, 24};

    TruncatedSeries h(1, 1);
    h(0, 0) = 1.0;
    h(0, 1) = -1.0;
    h(1, 0) = -1.0;
    h(1, 1) = 1.0;
    const auto bounded = section_norms(c, [&](long) { return h; }, alpha, beta, degrees);
    for (std::size_t i = 1; i < bounded.size(); ++i)
        c.require(bounded[i] >= bounded[i - 1] - 1e-9);
    const double plateau = (bounded.back() - bounded[bounded.size() - 2]) / bounded.back();
    c.metric("bounded_norm", bounded.back());
    c.metric("bounded_plateau_gap", plateau);
    c.require(plateau <= 0.05);

    const auto growing = section_norms(
        c,
        [&](long d) {
            return generate(Family::all_ones, {}, d, d);
        },
        alpha, beta, degrees);
    const double growth = growing.back() / growing[1];
    c.metric("unbounded_growth_ratio", growth);
    c.require(growth >= 1.3);
}

void check_m_equals_hinf(CheckContext& c) {
    const WeightVector alpha{c.param("a1", -1.0), c.param("a2", -1.0)};
    const std::vector<long> degrees{8, 16, 24};

    TruncatedSeries h(1, 1);
    h(0, 0) = 1.0;
    h(0, 1) = -1.0;
    h(1, 0) = -1.0;
    h(1, 1) = 1.0;
    const double sup_h = hinf_norm_estimate(h, 0.999, 256) / (1.0 - 1e-9);
    const auto bounded = section_norms(c, [&](long) { return h; }, alpha, alpha, degrees);
    c.metric("bounded_norm", bounded.back());
    c.metric("sup_h", sup_h);
    c.require(bounded.back() <= 4.0 * (1.0 + 1e-9));

    const auto growing = section_norms(
        c,
        [&](long d) {
            return generate(Family::rational, {}, d, d);
        },
        alpha, alpha, degrees);
    const double growth = growing.back() / growing.front();
    c.metric("unbounded_growth_ratio", growth);
    c.require(growth >= 1.3);
}

void check_m_equals_dbeta(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 2.0), c.param("a2", 2.0)};
    const WeightVector beta{c.param("b1", 1.5), c.param("b2", 1.5)};
    const long deg = static_cast<long>(c.param("deg", 24));
    const long prod_deg = 2 * deg;
    double c1 = 0.0, c2 = 0.0;
    for (long k = 0; k <= prod_deg; ++k) {
        c1 = std::max(c1, convolution_weight_bound_1d(k, alpha.alpha1, beta.alpha1));
        c2 = std::max(c2, convolution_weight_bound_1d(k, alpha.alpha2, beta.alpha2));
    }
    c.metric("C1", c1);
    c.metric("C2", c2);
    double max_ratio = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const TruncatedSeries f = c.rand_series(deg, deg);
        const TruncatedSeries g = c.rand_series(deg, deg);
        const TruncatedSeries fg = cauchy_product(f, g);
        const double lhs = norm(fg, beta);
        const double rhs = std::sqrt(c1 * c2) * norm(f, alpha) * norm(g, beta);
        max_ratio = std::max(max_ratio, lhs / rhs);
    }
    c.metric("max_ratio", max_ratio);
    c.require(max_ratio <= 1.0 + 1e-9);
}

void check_m_monotone(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 2.0), c.param("a2", 2.0)};
    const WeightVector beta{c.param("b1", 1.0), c.param("b2", 1.0)};
    const double lambda = c.param("lambda", 0.6);
    const WeightVector gamma{(beta.alpha1 - lambda * alpha.alpha1) / (1.0 - lambda),
                             (beta.alpha2 - lambda * alpha.alpha2) / (1.0 - lambda)};
    c.metric("gamma1", gamma.alpha1);
    c.metric("gamma2", gamma.alpha2);
    c.require(compare(gamma, WeightVector{0.0, 0.0}) == Order::strictly_less);
    const WeightVector mid = interpolate_weights(gamma, alpha, lambda);
    c.require(std::abs(mid.alpha1 - beta.alpha1) < 1e-12 &&
              std::abs(mid.alpha2 - beta.alpha2) < 1e-12);

    const TruncatedSeries h = c.rand_series(3, 3);
    const double slack = interpolation_inequality_check(h, {gamma, gamma}, {alpha, alpha}, lambda,
                                                        12, 12, 1e-10);
    c.metric("slack", slack);
    c.tolerance("slack", -1e-9);
    c.require(slack >= -1e-9);
}

void check_zero_multiplier(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.0), c.param("a2", 0.0)};
    const WeightVector beta{c.param("b1", 1.0), c.param("b2", 1.0)};
    const long deg_1d = static_cast<long>(c.param("deg_1d", 8192));
    const long deg_2d = static_cast<long>(c.param("deg_2d", 4096));
    const double radii[] = {0.9, 0.99, 0.999};

    const auto ratio_1d = [&](double r, long deg) {
        const double num = eval_functional_norm_1d(beta.alpha1, r, deg).value *
                           eval_functional_norm_1d(beta.alpha2, r, deg).value;
        const double den = eval_functional_norm_1d(alpha.alpha1, r, deg).value *
                           eval_functional_norm_1d(alpha.alpha2, r, deg).value;
        return num / den;
    };

    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0, max_resid = 0.0;
    int idx = 0;
    for (double r : radii) {
        const double ratio = ratio_1d(r, deg_1d);
        c.metric("ratio_" + std::to_string(idx++), ratio);
        c.require(ratio < prev);
        prev = ratio;
        last = ratio;
        const double full = eval_functional_norm(beta, r, r, deg_2d, deg_2d).value /
                            eval_functional_norm(alpha, r, r, deg_2d, deg_2d).value;
        max_resid = std::max(max_resid, std::abs(full - ratio_1d(r, deg_2d)));
    }
    c.metric("factorization_residual", max_resid);
    c.tolerance("factorization_residual", 1e-9);
    c.require(last < 0.05);
    c.require(max_resid < 1e-9);

    TruncatedSeries one(0, 0);
    one(0, 0) = 1.0;
    const NormEstimate est = operator_norm(finite_section(one, alpha, beta, 8, 8), 1e-10, 5000);
    c.require(est.converged);
    const PointwiseBoundReport rep = pointwise_bound_check(
        one, alpha, beta, est.value, {{Complex{0.99, 0.0}, Complex{0.99, 0.0}},
                                      {Complex{0.999, 0.0}, Complex{0.999, 0.0}}});
    c.metric("pointwise_violations", rep.violations);
    c.require(rep.violations >= 1);
}

// --- slice theorems ---------------------------------------------------------

double slice_split_constant(const TruncatedSeries& f, const WeightVector& alpha, double abs_w0) {
    double acc = 0.0;
    for (long l = 0; l <= f.deg_w(); ++l) {
        const double wl = std::pow(abs_w0, static_cast<double>(l));
        if (!(wl > weight_at_1d(l, alpha.alpha2))) continue;
        for (long k = 0; k <= f.deg_z(); ++k)
            acc += std::norm(f.at(k, l)) * wl * weight_at_1d(k, alpha.alpha1);
    }
    return acc;
}

void check_slices_membership(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.5), c.param("a2", -0.5)};
    const long deg = static_cast<long>(c.param("deg", 64));
    const int trials = static_cast<int>(c.param("trials", 50));
    const double radii[] = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95};
    const double angles[] = {0.0, 2.1, 4.4};
    double max_ratio = 0.0;
    for (int t = 0; t < trials; ++t) {
        const TruncatedSeries f = c.rand_series(deg, deg);
        const double nf2 = norm(f, alpha) * norm(f, alpha);
        for (double rad : radii)
            for (double ang : angles) {
                const Complex w0 = std::polar(rad, ang);
                const UnivariateSeries fw = slice_w(f, w0);
                const double lhs = std::pow(norm_1d(fw, alpha.alpha1), 2);
                const double cw = slice_split_constant(f, alpha, rad);
                const double rhs = (cw + nf2) / (1.0 - rad);
                max_ratio = std::max(max_ratio, lhs / rhs);
            }
    }
    c.metric("max_lhs_over_rhs", max_ratio);
    c.require(max_ratio <= 1.0 + 1e-9);
}

void check_non_factoring(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.0), c.param("a2", 0.0)};
    const double slice_bound = c.param("slice_bound", 4000.0);
    const long deg = std::min<long>(c.cfg.deg, 512);
    const TruncatedSeries f = generate(Family::non_factoring, {alpha}, deg, deg);
    double max_slice = 0.0;
    for (double w0 = 0.0; w0 <= 0.901; w0 += 0.1)
        max_slice =
            std::max(max_slice, std::pow(norm_1d(slice_w(f, w0), alpha.alpha1), 2));
    c.metric("max_slice_norm_sq", max_slice);
    c.require(max_slice <= slice_bound);
    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    // Diagonal of the weighted coefficient sum: |a_{n,n}|^2 (n+1)^{a1+a2}
    // collapses to 1/(2(n+1)) for every weight vector.
    const auto diag = dyadic_partial_sums(
        [&](long n) {
            const double a2 = weight_at_1d(n, 1.0 - alpha.alpha1) *
                              weight_at_1d(n, 1.0 - alpha.alpha2) /
                              (2.0 * std::pow(n + 1.0, 3.0));
            return a2 * weight_at_1d(n, alpha.alpha1 + alpha.alpha2);
        },
        kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict div = divergence_trend(diag);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    c.tolerance("fit_constant_rel", 0.10);
    c.require(std::abs(div.fit_constant - 0.5) <= 0.05);

    const auto companion = dyadic_partial_sums([](long n) { return std::pow(n + 1.0, -2.0); },
                                               kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict conv = divergence_trend(companion);
    record_trend(c, "convergent", conv);
    c.require(conv.classification == DivergenceClass::convergent);
}

void check_unbounded_slice_norms(CheckContext& c) {
    const WeightVector alpha{c.param("a1", -2.0), c.param("a2", -2.0)};
    const long deg_z = std::min<long>(c.cfg.deg, 512);
    const long deg_w = 4096;
    const TruncatedSeries f = generate(Family::all_ones, {}, deg_z, deg_w);
    double c_ref = 0.0;
    for (long k = 0; k <= deg_z; ++k) c_ref += weight_at_1d(k, alpha.alpha1);
    double first = 0.0, last = 0.0, scaled_last = 0.0;
    for (int j = 1; j <= 8; ++j) {
        const double w = 1.0 - std::pow(2.0, -j);
        const double n2 = std::pow(norm_1d(slice_w(f, w), alpha.alpha1), 2);
        if (j == 1) first = n2;
        last = n2;
        scaled_last = n2 * (1.0 - w) * (1.0 - w);
    }
    c.metric("c_estimate", scaled_last);
    c.metric("c_reference", c_ref);
    c.metric("growth_ratio", last / first);
    c.require(std::abs(scaled_last / c_ref - 1.0) < 1e-3);
    c.require(last / first > 1000.0);
}

void check_bounded_slices_insufficient(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.0), c.param("a2", 2.0)};
    if (!(alpha.alpha2 > 1.0)) {
        c.require(false);
        c.r.note = "requires a2 > 1";
        return;
    }
    const long deg_z = 128, deg_w = 1024;
    const TruncatedSeries f = generate(Family::lacunary_bounded, {alpha}, deg_z, deg_w);
    const double g_sup = 1.0 / (1.0 - std::pow(2.0, -alpha.alpha2 / 2.0));
    double zeta_part = 0.0;
    for (long k = 0; k <= deg_z; ++k) zeta_part += std::pow(k + 1.0, -2.0);
    const double bound = g_sup * g_sup * zeta_part;
    double max_slice = 0.0;
    for (double rad : {0.0, 0.3, 0.6, 0.9, 0.95, 0.99})
        for (int a = 0; a < 8; ++a) {
            const Complex w0 = std::polar(rad, 2.0 * std::numbers::pi * a / 8.0);
            max_slice = std::max(max_slice, std::pow(norm_1d(slice_w(f, w0), alpha.alpha1), 2));
        }
    c.metric("max_slice_norm_sq", max_slice);
    c.metric("slice_bound", bound);
    c.require(max_slice <= bound * (1.0 + 1e-9));
    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    // w-axis factor of the norm: lacunary terms contribute (1+2^{-j})^{a2}
    // each, one per dyadic block, so partial sums grow like log2 N.
    const auto sums = dyadic_partial_sums(
        [&](long l) {
            if (l < 1 || (l & (l - 1)) != 0) return 0.0;
            const double j = std::log2(static_cast<double>(l));
            return std::pow(2.0, -j * alpha.alpha2) * weight_at_1d(l, alpha.alpha2);
        },
        kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict div = divergence_trend(sums);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    const double target = 1.0 / std::numbers::ln2;
    c.require(std::abs(div.fit_constant - target) <= 0.25 * target);
}

void check_bounded_slices_sufficient(CheckContext& c) {
    const WeightVector alpha{c.param("a1", -1.0), c.param("a2", -1.0)};
    const long deg = static_cast<long>(c.param("deg", 48));
    const TruncatedSeries f = c.rand_series(deg, deg);
    const double full = std::pow(integral_norm_exact(f, alpha), 2);
    double m_grid = 0.0;
    for (double rad : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999})
        for (int a = 0; a < 128; ++a) {
            const Complex w0 = std::polar(rad, 2.0 * std::numbers::pi * a / 128.0);
            const double s = std::pow(integral_norm_exact_1d(slice_w(f, w0), alpha.alpha1), 2);
            m_grid = std::max(m_grid, s);
        }
    // The w-measure 2(1-|w|^2)^{-1-a2} r dr dtheta / pi has total mass
    // 1/(-a2); the full square norm is its average of the slice squares.
    const double mass = 1.0 / (-alpha.alpha2);
    c.metric("full_norm_sq", full);
    c.metric("slice_sup_sq", m_grid);
    c.metric("l2_consistency", std::abs(full / std::pow(norm(f, alpha), 2) - 1.0));
    c.require(full <= m_grid * mass * (1.0 + 1e-3));
    c.require(std::abs(full / std::pow(norm(f, alpha), 2) - 1.0) < 1e-12);
}

void check_product_membership(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 1.0), c.param("a2", -1.0)};
    const long deg = static_cast<long>(c.param("deg", 32));
    double max_resid = 0.0;
    for (int t = 0; t < 10; ++t) {
        const UnivariateSeries f1 = c.rand_series_1d(deg);
        const UnivariateSeries f2 = c.rand_series_1d(deg);
        const double lhs = norm(tensor_product(f1, f2), alpha);
        const double rhs = norm_1d(f1, alpha.alpha1) * norm_1d(f2, alpha.alpha2);
        max_resid = std::max(max_resid, std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
    c.metric("factorization_residual", max_resid);
    c.tolerance("factorization_residual", 1e-12);
    c.require(max_resid <= 1e-12);
}

void check_multiplier_slices(CheckContext& c) {
    const WeightVector alpha{c.param("a1", 0.0), c.param("a2", 0.0)};
    const WeightVector beta{c.param("b1", 0.0), c.param("b2", 0.0)};
    const long deg = static_cast<long>(c.param("deg", 24));
    TruncatedSeries h(3, 3);
    for (long k = 0; k <= 3; ++k)
        for (long l = 0; l <= 3; ++l) h(k, l) = c.rand_disc() / ((k + 1.0) * (l + 1.0));

    const long box_w = 8;  // >= deg_w(h), so slicing commutes with the section
    const NormEstimate n2 = operator_norm(finite_section(h, alpha, beta, deg, box_w), 1e-10, 5000);
    c.require(n2.converged);
    c.metric("norm_2d", n2.value);

    double max_ratio = 0.0;
    for (double rad : {0.0, 0.3, 0.6, 0.9})
        for (double ang : {0.0, 2.5}) {
            const Complex w0 = std::polar(rad, ang);
            double m = 0.0;
            for (long l = 1; l <= box_w; ++l) {
                const double wl = std::pow(rad, static_cast<double>(l));
                if (wl > weight_at_1d(l, beta.alpha2))
                    m = std::max(m, wl / weight_at_1d(l, beta.alpha2));
            }
            const double kappa = std::sqrt((1.0 + m) / (1.0 - rad));
            const TruncatedSeries h1 = lift_z(slice_w(h, w0));
            const NormEstimate n1 = operator_norm(
                finite_section(h1, {alpha.alpha1, 0.0}, {beta.alpha1, 0.0}, deg, 0), 1e-10, 5000);
            c.require(n1.converged);
            max_ratio = std::max(max_ratio, n1.value / (kappa * n2.value));
        }
    c.metric("max_slice_ratio", max_ratio);
    c.require(max_ratio <= 1.0 + 1e-9);
}

void check_multiplier_slices_converse_fails(CheckContext& c) {
    const WeightVector gamma{c.param("a1", 2.0), c.param("a2", 2.0)};
    if (compare(gamma, WeightVector{1.0, 1.0}) != Order::strictly_greater) {
        c.require(false);
        c.r.note = "requires gamma strictly above (1,1)";
        return;
    }
    const long deg = std::min<long>(c.cfg.deg, 512);
    const TruncatedSeries f = generate(Family::non_factoring, {gamma}, deg, deg);
    double max_slice = 0.0;
    for (double w0 : {0.0, 0.3, 0.6, 0.9})
        max_slice = std::max(max_slice, std::pow(norm_1d(slice_w(f, w0), gamma.alpha1), 2));
    c.metric("max_slice_norm_sq", max_slice);
    c.require(max_slice <= c.param("slice_bound", 500.0));
    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    const auto diag = dyadic_partial_sums(
        [&](long n) {
            const double a2 = weight_at_1d(n, 1.0 - gamma.alpha1) *
                              weight_at_1d(n, 1.0 - gamma.alpha2) /
                              (2.0 * std::pow(n + 1.0, 3.0));
            return a2 * weight_at_1d(n, gamma.alpha1 + gamma.alpha2);
        },
        kTrendLoExp, c.cfg.max_dyadic_exp);
    const DivergenceVerdict div = divergence_trend(diag);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    c.require(std::abs(div.fit_constant - 0.5) <= 0.05);
}

void check_rational_example(CheckContext& c) {
    const long deg = static_cast<long>(c.param("deg", 256));
    const TruncatedSeries f = generate(Family::rational, {}, deg, deg);

    // Slice coefficients converge to -(2-w0)^{-(k+1)}.
    const double w0 = 0.5;
    const UnivariateSeries s = slice_w(f, w0);
    double max_diff = 0.0;
    for (long k = 0; k <= 40; ++k)
        max_diff = std::max(max_diff,
                            std::abs(s.at(k) + std::pow(2.0 - w0, -(k + 1.0))));
    c.metric("slice_coeff_error", max_diff);
    c.require(max_diff < 1e-12);

    // Slice norms are finite for every first weight component.
    for (double a1 : {0.0, 2.0, 5.0}) {
        double closed = 0.0;
        for (long k = 0; k <= deg; ++k)
            closed += weight_at_1d(k, a1) * std::pow(2.0 - w0, -2.0 * (k + 1.0));
        const double direct = std::pow(norm_1d(s, a1), 2);
        c.require(std::abs(direct - closed) <= 1e-9 * std::max(1.0, closed));
    }

    // Unboundedness scan: growth of the max modulus between radii.
    const double h_09 = hinf_norm_estimate(f, 0.9, 64);
    const double h_099 = hinf_norm_estimate(f, 0.99, 64);
    c.metric("hinf_growth_ratio", h_099 / h_09);
    c.require(h_099 / h_09 > 5.0);

    if (!c.trend_resolution_ok()) {
        c.skip("skipped-low-resolution");
        return;
    }
    // Cauchy-Schwarz lower bound on the antidiagonal coefficient mass:
    // (sum_p binom(n,p) 2^{-(n+1)})^2 / (n+1), computed from the scaled
    // binomial rows themselves.
    std::vector<std::pair<double, double>> sums;
    {
        std::vector<double> row{0.5};  // binom(0,p) 2^{-1}
        double acc = 0.0;
        long n = 0;
        for (int e = kTrendLoExp; e <= c.cfg.max_dyadic_exp; ++e) {
            const long limit = 1L << e;
            for (; n <= limit; ++n) {
                double row_sum = 0.0;
                for (double v : row) row_sum += v;
                acc += row_sum * row_sum / (n + 1.0);
                std::vector<double> next(row.size() + 1, 0.0);
                for (std::size_t p = 0; p < row.size(); ++p) {
                    next[p] += 0.5 * row[p];
                    next[p + 1] += 0.5 * row[p];
                }
                row = std::move(next);
            }
            sums.emplace_back(static_cast<double>(limit), acc);
        }
    }
    const DivergenceVerdict div = divergence_trend(sums);
    record_trend(c, "divergent", div);
    c.require(div.classification == DivergenceClass::log_divergent);
    c.tolerance("fit_constant_rel", 0.10);
    c.require(std::abs(div.fit_constant - 0.25) <= 0.025);
}

using CheckFn = void (*)(CheckContext&);

const std::vector<std::pair<std::string, CheckFn>>& catalog_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"proper_containment", check_proper_containment},
        {"remark_containment", check_remark_containment},
        {"d_in_hinf", check_d_in_hinf},
        {"integral_equivalence", check_integral_equivalence},
        {"multipliers_below_zero_iff", check_multipliers_below_zero_iff},
        {"M_equals_Hinf", check_m_equals_hinf},
        {"M_equals_Dbeta", check_m_equals_dbeta},
        {"M_monotone", check_m_monotone},
        {"zero_multiplier", check_zero_multiplier},
        {"slices_membership", check_slices_membership},
        {"non_factoring", check_non_factoring},
        {"unbounded_slice_norms", check_unbounded_slice_norms},
        {"bounded_slices_insufficient", check_bounded_slices_insufficient},
        {"bounded_slices_sufficient", check_bounded_slices_sufficient},
        {"product_membership", check_product_membership},
        {"multiplier_slices", check_multiplier_slices},
        {"multiplier_slices_converse_fails", check_multiplier_slices_converse_fails},
        {"rational_example", check_rational_example},
    };
    return table;
}

}  // namespace

std::vector<std::string> check_catalog() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : catalog_table()) ids.push_back(id);
    return ids;
}

CheckReport run_check(const std::string& check_id, const HarnessConfig& config,
                      const std::map<std::string, double>& params) {
    const auto& table = catalog_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& e) { return e.first == check_id; });
    if (it == table.end()) throw std::invalid_argument("unknown check: " + check_id);

    CheckReport report;
    report.check_id = check_id;
    report.params = params;
    CheckContext ctx{config, report,
                     std::mt19937_64(config.seed ^ std::hash<std::string>{}(check_id))};
    const auto t0 = Clock::now();
    try {
        it->second(ctx);
        report.verdict = ctx.skipped ? Verdict::inconclusive
                                     : (ctx.ok ? Verdict::pass : Verdict::fail);
    } catch (const std::exception& e) {
        report.verdict = Verdict::fail;
        report.note = e.what();
    }
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return report;
}

SuiteReport full_suite(const HarnessConfig& config) {
    const auto ids = check_catalog();
    SuiteReport suite;
    suite.checks.resize(ids.size());
    std::atomic<std::size_t> next{0};
    int n_threads = config.threads > 0 ? config.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, static_cast<int>(ids.size()));
    const auto t0 = Clock::now();
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ids.size();)
            suite.checks[i] = run_check(ids[i], config);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& r : suite.checks) {
        if (r.verdict == Verdict::pass) ++suite.passed;
        else if (r.verdict == Verdict::fail) ++suite.failed;
        else ++suite.inconclusive;
    }
    suite.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return suite;
}

namespace {

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["verdict"] = to_string(r.verdict);
    j["params"] = r.params;
    j["metrics"] = r.metrics;
    j["tolerances"] = r.tolerances;
    j["runtime_ms"] = r.runtime_ms;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace

std::string to_json(const CheckReport& report) { return report_to_json(report).dump(2); }

std::string to_json(const SuiteReport& report, bool with_timestamp) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : report.checks) j["checks"].push_back(report_to_json(r));
    j["summary"] = {{"total", report.checks.size()},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"inconclusive", report.inconclusive},
                    {"runtime_ms", report.runtime_ms}};
    if (with_timestamp) {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
        j["timestamp"] = buf;
    }
    return j.dump(2);
}

}  // namespace polydirich
