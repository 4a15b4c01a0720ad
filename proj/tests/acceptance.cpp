// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "polydirich/dirichlet.hpp"
#include "polydirich/families.hpp"
#include "polydirich/harness.hpp"
#include "polydirich/integral.hpp"
#include "polydirich/multiplier.hpp"
#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

using namespace polydirich;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
                detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++g_failures;
}

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

TruncatedSeries random_series(std::mt19937_64& rng, long deg_z, long deg_w) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncatedSeries f(deg_z, deg_w);
    for (long k = 0; k <= deg_z; ++k)
        for (long l = 0; l <= deg_w; ++l)
            f(k, l) = Complex{u(rng), u(rng)} / ((k + 1.0) * (l + 1.0));
    return f;
}

Complex random_point(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

void criterion_1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    const std::vector<WeightVector> alphas{{0.0, 0.0}, {-1.0, -1.0}, {1.0, 2.0}};
    const long deg = 64;

    std::vector<std::pair<Complex, Complex>> points;
    for (int p = 0; p < 20; ++p)
        points.emplace_back(random_point(rng, 0.6), random_point(rng, 0.6));

    // Kernels depend only on (alpha, point); cache them across the 100 trials.
    std::vector<std::vector<TruncatedSeries>> kernels;
    for (const auto& alpha : alphas) {
        std::vector<TruncatedSeries> row;
        for (const auto& [z, w] : points) row.push_back(kernel_series(alpha, z, w, deg, deg));
        kernels.push_back(std::move(row));
    }

    double max_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<long> d(8, deg);
        const TruncatedSeries f = random_series(rng, d(rng), d(rng));
        for (std::size_t a = 0; a < alphas.size(); ++a)
            for (std::size_t p = 0; p < points.size(); ++p) {
                const Complex ip = inner_product(f, kernels[a][p], alphas[a]);
                const Complex ev = f.evaluate(points[p].first, points[p].second);
                max_err = std::max(max_err, std::abs(ip - ev));
            }
    }
    const double secs = elapsed_s(t0);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "(max error %.3e, %.2fs)", max_err, secs);
    report(1, "kernel reproduces point evaluation across weight regimes",
           max_err < 1e-11 && secs < 10.0, detail);
}

void criterion_2() {
    std::mt19937_64 rng(202);
    const long deg = 256;
    double max_excess = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Complex z0 = random_point(rng, 0.7), w0 = random_point(rng, 0.7);
        const Complex z = random_point(rng, 0.7), w = random_point(rng, 0.7);
        const TruncatedSeries ker = kernel_series({0.0, 0.0}, z0, w0, deg, deg);
        const Complex got = ker.evaluate(z, w);
        const Complex want = 1.0 / ((1.0 - std::conj(z0) * z) * (1.0 - std::conj(w0) * w));
        const double q1 = std::abs(std::conj(z0) * z), q2 = std::abs(std::conj(w0) * w);
        const double tail = std::pow(q1, deg + 1.0) / ((1.0 - q1) * (1.0 - q2)) +
                            std::pow(q2, deg + 1.0) / ((1.0 - q1) * (1.0 - q2));
        max_excess = std::max(max_excess, std::abs(got - want) - (tail + 1e-12));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "(max excess over tail bound %.3e)", max_excess);
    report(2, "unweighted kernel matches the product of geometric kernels", max_excess <= 0.0,
           detail);
}

void criterion_3() {
    std::mt19937_64 rng(303);
    bool ok = true;
    double max_bergman_dev = 0.0;
    for (int t = 0; t < 10; ++t) {
        const TruncatedSeries f = random_series(rng, 24, 30);
        const double r = integral_norm_exact(f, {-1.0, -1.0}) / norm(f, {-1.0, -1.0});
        max_bergman_dev = std::max(max_bergman_dev, std::abs(r - 1.0));
    }
    ok = ok && max_bergman_dev < 1e-12;

    double max_quad_err = 0.0;
    for (double a1 : {-3.0, -1.5, -0.55, -0.1})
        for (double a2 : {-3.0, -0.8, -0.1}) {
            const WeightVector alpha{a1, a2};
            const long deg = 40;
            const TruncatedSeries f = random_series(rng, deg, deg);
            const QuadratureRule rule = make_quadrature_rule(alpha, deg, deg);
            const double quad = integral_norm_quadrature(f, alpha, rule);
            const double exact = integral_norm_exact(f, alpha);
            max_quad_err = std::max(max_quad_err, std::abs(quad - exact) / std::max(1.0, exact));
        }
    {
        const WeightVector alpha{-1.2, -2.4};
        const long deg = 64;
        const TruncatedSeries f = random_series(rng, deg, deg);
        const double quad = integral_norm_quadrature(f, alpha, make_quadrature_rule(alpha, deg, deg));
        const double exact = integral_norm_exact(f, alpha);
        max_quad_err = std::max(max_quad_err, std::abs(quad - exact) / std::max(1.0, exact));
    }
    ok = ok && max_quad_err < 1e-8;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "(bergman dev %.3e, quad err %.3e)", max_bergman_dev,
                  max_quad_err);
    report(3, "integral norms agree with coefficient norms and quadrature", ok, detail);
}

void criterion_4() {
    bool ok = true;
    const double r3 = hardy_asymptotic_ratio(1000, -0.5);
    const double r5 = hardy_asymptotic_ratio(100000, -0.5);
    ok = ok && std::abs(r3 - r5) / r5 < 1e-3;

    for (long k : {0L, 1L, 10L, 1000L, 100000L})
        ok = ok && std::abs(hardy_asymptotic_ratio(k, -1.0) - 0.5) < 1e-14;

    // At -2 the Beta identity gives (k+1)/(2(k+2)), with limit 1/2.
    for (long k : {0L, 1L, 10L, 1000L})
        ok = ok &&
             std::abs(hardy_asymptotic_ratio(k, -2.0) - (k + 1.0) / (2.0 * (k + 2.0))) < 1e-14;
    ok = ok && std::abs(hardy_asymptotic_ratio(1000000, -2.0) - 0.5) < 1e-5;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "(ratio(1e3,-0.5)=%.6f vs %.6f)", r3, r5);
    report(4, "radial moment ratios stabilize and match the Beta identities", ok, detail);
}

void criterion_5() {
    TruncatedSeries shift(1, 0);
    shift(1, 0) = 1.0;
    bool ok = true;
    double worst = 0.0;
    for (long d : {2L, 4L, 8L, 16L, 32L}) {
        const NormEstimate iso = operator_norm(finite_section(shift, {0, 0}, {0, 0}, d, 0));
        const NormEstimate wt = operator_norm(finite_section(shift, {1, 0}, {1, 0}, d, 0));
        ok = ok && iso.converged && wt.converged;
        worst = std::max({worst, std::abs(iso.value - 1.0),
                          std::abs(wt.value - std::numbers::sqrt2)});
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "(max deviation %.3e)", worst);
    report(5, "shift sections have norms 1 and sqrt(2)", ok && worst <= 1e-10, detail);
}

void criterion_6() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> wdist(-2.0, 2.0), ldist(0.05, 0.95);
    double min_slack = 0.0, max_endpoint = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries h(2, 2);
        for (long k = 0; k <= 2; ++k)
            for (long l = 0; l <= 2; ++l)
                h(k, l) = 0.5 * Complex{wdist(rng), wdist(rng)} / 2.0;
        const WeightPair p1{{wdist(rng), wdist(rng)}, {wdist(rng), wdist(rng)}};
        const WeightPair p2{{wdist(rng), wdist(rng)}, {wdist(rng), wdist(rng)}};
        try {
            const double slack = interpolation_inequality_check(h, p1, p2, ldist(rng), 6, 6, 1e-12);
            min_slack = std::min(min_slack, slack);
            for (double lambda : {0.0, 1.0}) {
                const double end = interpolation_inequality_check(h, p1, p2, lambda, 6, 6, 1e-12);
                max_endpoint = std::max(max_endpoint, std::abs(end));
            }
        } catch (const std::exception&) {
            ok = false;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "(min slack %.3e, endpoint %.3e)", min_slack,
                  max_endpoint);
    report(6, "interpolated section norms are log-convex",
           ok && min_slack >= -1e-9 && max_endpoint < 1e-12, detail);
}

void criterion_7() {
    const auto t0 = Clock::now();
    HarnessConfig cfg;
    bool ok = true;
    std::string notes;

    const CheckReport pc = run_check("proper_containment", cfg);
    ok = ok && pc.verdict == Verdict::pass;
    ok = ok && pc.metrics.at("divergent_class") ==
                   static_cast<double>(DivergenceClass::log_divergent);
    ok = ok && std::abs(pc.metrics.at("divergent_fit_constant") - 1.0) <= 0.10;
    ok = ok && pc.metrics.at("convergent_class") ==
                   static_cast<double>(DivergenceClass::convergent);

    const CheckReport nf = run_check("non_factoring", cfg);
    ok = ok && nf.verdict == Verdict::pass;
    ok = ok && std::abs(nf.metrics.at("divergent_fit_constant") - 0.5) <= 0.05;
    ok = ok && nf.metrics.at("convergent_class") ==
                   static_cast<double>(DivergenceClass::convergent);

    const CheckReport ra = run_check("rational_example", cfg);
    ok = ok && ra.verdict == Verdict::pass;
    ok = ok && std::abs(ra.metrics.at("divergent_fit_constant") - 0.25) <= 0.025;

    const double secs = elapsed_s(t0);
    char detail[160];
    std::snprintf(detail, sizeof(detail), "(fit constants %.4f, %.4f, %.4f, %.2fs)",
                  pc.metrics.at("divergent_fit_constant"),
                  nf.metrics.at("divergent_fit_constant"),
                  ra.metrics.at("divergent_fit_constant"), secs);
    report(7, "divergence trends classify the witness families", ok && secs < 60.0, detail);
}

void criterion_8() {
    HarnessConfig cfg;
    const CheckReport sm = run_check("slices_membership", cfg);
    const CheckReport nf = run_check("non_factoring", cfg);
    const bool ok = sm.verdict == Verdict::pass && sm.metrics.at("max_lhs_over_rhs") <= 1.0 + 1e-9 &&
                    nf.verdict == Verdict::pass &&
                    nf.metrics.at("divergent_class") ==
                        static_cast<double>(DivergenceClass::log_divergent);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "(slice ratio %.6f)", sm.metrics.at("max_lhs_over_rhs"));
    report(8, "slice membership holds while the converse witness diverges", ok, detail);
}

void criterion_9() {
    HarnessConfig cfg;
    const CheckReport r = run_check("zero_multiplier", cfg);
    bool ok = r.verdict == Verdict::pass;
    const double r0 = r.metrics.at("ratio_0"), r1 = r.metrics.at("ratio_1"),
                 r2 = r.metrics.at("ratio_2");
    ok = ok && r0 > r1 && r1 > r2 && r2 < 0.05;
    ok = ok && r.metrics.at("factorization_residual") < 1e-9;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "(ratios %.4f > %.4f > %.4f, residual %.2e)", r0, r1,
                  r2, r.metrics.at("factorization_residual"));
    report(9, "functional norm ratio collapses toward the boundary", ok, detail);
}

void criterion_10() {
    HarnessConfig cfg;
    const SuiteReport suite = full_suite(cfg);
    const bool ok = suite.failed == 0 && suite.inconclusive == 0 &&
                    suite.passed == static_cast<int>(suite.checks.size()) &&
                    suite.runtime_ms < 300000;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "(%d passed, %d failed, %d inconclusive, %ld ms)",
                  suite.passed, suite.failed, suite.inconclusive, suite.runtime_ms);
    if (!ok)
        for (const auto& c : suite.checks)
            if (c.verdict != Verdict::pass)
                std::printf("  %s: %s %s\n", c.check_id.c_str(), to_string(c.verdict).c_str(),
                            c.note.c_str());
    report(10, "full suite passes with no inconclusive checks", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
