#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "polydirich/dirichlet.hpp"
#include "polydirich/families.hpp"
#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

using namespace polydirich;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, long deg_z, long deg_w) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncatedSeries f(deg_z, deg_w);
    for (long k = 0; k <= deg_z; ++k)
        for (long l = 0; l <= deg_w; ++l)
            f(k, l) = Complex{u(rng), u(rng)} / ((k + 1.0) * (l + 1.0));
    return f;
}

}  // namespace

TEST_CASE("weight_at examples") {
    CHECK(weight_at(0, 0, {7.0, -3.0}) == 1.0);
    CHECK(std::abs(weight_at(3, 1, {1.0, 2.0}) - 16.0) < 1e-12);
    CHECK(std::abs(weight_at(999, 0, {-2.0, 0.0}) - 1e-6) < 1e-18);
    CHECK(std::abs(weight_at_1d(4, 0.5) - std::sqrt(5.0)) < 1e-14);
}

TEST_CASE("compare classifies the partial order") {
    CHECK(compare({1.0, 1.0}, {0.0, 0.0}) == Order::strictly_greater);
    CHECK(compare({1.0, 0.0}, {0.0, 1.0}) == Order::incomparable);
    CHECK(compare({1.0, 0.0}, {0.0, 0.0}) == Order::greater_equal);
    CHECK(compare({0.0, 0.0}, {0.0, 0.0}) == Order::equal);
    CHECK(compare({-1.0, -2.0}, {0.0, 0.0}) == Order::strictly_less);
    CHECK(compare({-1.0, 0.0}, {0.0, 0.0}) == Order::less_equal);
}

TEST_CASE("norm basics") {
    TruncatedSeries one(0, 0);
    one(0, 0) = 1.0;
    CHECK(norm(one, {3.0, -2.0}) == 1.0);

    TruncatedSeries m(3, 1);
    m(3, 1) = 1.0;
    CHECK(std::abs(norm(m, {1.0, 2.0}) - 4.0) < 1e-12);
}

TEST_CASE("rational family norm dominates the harmonic lower bound") {
    const long deg = 64;
    const TruncatedSeries f = generate(Family::rational, {}, deg, deg);
    const double n2 = std::pow(norm(f, {0.0, 0.0}), 2);
    double lower = 0.0;
    for (long k = 0; k <= deg; ++k) lower += 1.0 / (4.0 * (k + 1.0));
    CHECK(n2 >= lower);
}

TEST_CASE("inner_product orthogonality and norm consistency") {
    TruncatedSeries a(2, 2), b(2, 2);
    a(1, 0) = 1.0;
    b(0, 1) = 1.0;
    CHECK(std::abs(inner_product(a, b, {0.5, -0.5})) == 0.0);

    std::mt19937_64 rng(7);
    const TruncatedSeries f = random_series(rng, 6, 5);
    const WeightVector alpha{0.7, -1.2};
    const Complex ip = inner_product(f, f, alpha);
    CHECK(std::abs(ip.imag()) < 1e-14);
    CHECK(std::abs(ip.real() - norm(f, alpha) * norm(f, alpha)) < 1e-12);
}

TEST_CASE("eval_functional_norm anchors") {
    const auto r1 = eval_functional_norm({0.0, 0.0}, 0.5, 0.0, 200, 200);
    CHECK(std::abs(r1.value - std::sqrt(4.0 / 3.0)) < 1e-12);

    const auto r2 = eval_functional_norm({3.0, -2.0}, 0.0, 0.0, 10, 10);
    CHECK(r2.value == 1.0);
    CHECK(r2.tail_bound == 0.0);

    const auto r3 = eval_functional_norm({-1.0, -1.0}, 0.5, 0.0, 400, 400);
    CHECK(std::abs(r3.value - 4.0 / 3.0) < 1e-12);

    CHECK_THROWS_AS(eval_functional_norm({0.0, 0.0}, 1.0, 0.0, 4, 4), std::domain_error);
}

TEST_CASE("eval_functional_norm_1d and the 2d factorization") {
    CHECK(std::abs(eval_functional_norm_1d(0.0, 0.5, 200).value - std::sqrt(4.0 / 3.0)) < 1e-12);
    CHECK(eval_functional_norm_1d(-3.0, 0.0, 10).value == 1.0);

    const WeightVector alpha{-1.0, 0.5};
    const Complex z{0.4, 0.0}, w{0.3, 0.0};
    const double two_d = eval_functional_norm(alpha, z, w, 300, 300).value;
    const double prod = eval_functional_norm_1d(alpha.alpha1, z, 300).value *
                        eval_functional_norm_1d(alpha.alpha2, w, 300).value;
    CHECK(std::abs(two_d - prod) < 1e-10);
}

TEST_CASE("functional norm truncation brackets are nested") {
    const WeightVector alpha{-0.5, 0.5};
    const Complex z{0.8, 0.1}, w{-0.6, 0.3};
    const auto coarse = eval_functional_norm(alpha, z, w, 64, 64);
    const auto fine = eval_functional_norm(alpha, z, w, 256, 256);
    CHECK(coarse.value <= fine.value + 1e-15);
    CHECK(fine.value <= coarse.value + coarse.tail_bound + 1e-12);
    CHECK(fine.tail_bound <= coarse.tail_bound);
}

TEST_CASE("kernel_series values and norm identity") {
    const TruncatedSeries k0 = kernel_series({1.5, -2.5}, 0.0, 0.0, 5, 5);
    CHECK(k0.at(0, 0) == Complex{1.0, 0.0});
    for (long k = 0; k <= 5; ++k)
        for (long l = 0; l <= 5; ++l)
            if (k + l > 0) CHECK(std::abs(k0.at(k, l)) == 0.0);

    const Complex z0{0.5, 0.2}, w0{-0.3, 0.4};
    const WeightVector alpha{0.0, 0.0};
    const TruncatedSeries ker = kernel_series(alpha, z0, w0, 256, 256);
    const Complex z{0.4, -0.1}, w{0.2, 0.3};
    const Complex expected = 1.0 / ((1.0 - std::conj(z0) * z) * (1.0 - std::conj(w0) * w));
    CHECK(std::abs(ker.evaluate(z, w) - expected) < 1e-12);

    const WeightVector beta{0.8, -0.7};
    const TruncatedSeries kb = kernel_series(beta, z0, w0, 200, 200);
    const double n2 = std::pow(norm(kb, beta), 2);
    const double f2 = std::pow(eval_functional_norm(beta, z0, w0, 200, 200).value, 2);
    CHECK(std::abs(n2 - f2) < 1e-10);
}

TEST_CASE("reproducing identity is exact on truncations") {
    std::mt19937_64 rng(42);
    for (const WeightVector alpha : {WeightVector{0.0, 0.0}, {-1.0, -1.0}, {1.0, 2.0}}) {
        const TruncatedSeries f = random_series(rng, 12, 9);
        for (int t = 0; t < 5; ++t) {
            std::uniform_real_distribution<double> u(-0.6, 0.6);
            const Complex z{u(rng), u(rng) * 0.5};
            const Complex w{u(rng), u(rng) * 0.5};
            const TruncatedSeries ker = kernel_series(alpha, z, w, 12, 9);
            const Complex ip = inner_product(f, ker, alpha);
            const Complex ev = f.evaluate(z, w);
            CHECK(std::abs(ip - ev) <= 1e-12 * std::max(1.0, std::abs(ev)));
        }
    }
}

TEST_CASE("norms are monotone in the weight order") {
    std::mt19937_64 rng(9);
    const TruncatedSeries f = random_series(rng, 10, 10);
    CHECK(norm(f, {1.0, 0.5}) >= norm(f, {0.0, 0.0}));
    CHECK(norm(f, {0.0, 0.0}) >= norm(f, {-2.0, -1.0}));
}

TEST_CASE("hinf_sup_bound") {
    const double bound = hinf_sup_bound({2.0, 2.0}, 4096, 4096);
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(bound >= zeta2 - 1e-9);
    CHECK(bound <= zeta2 + 1e-3);

    CHECK(std::abs(hinf_sup_bound({40.0, 40.0}, 64, 64) - 1.0) < 1e-9);
    CHECK_THROWS_AS(hinf_sup_bound({1.0, 1.0}, 16, 16), std::invalid_argument);

    std::mt19937_64 rng(3);
    const WeightVector alpha{2.0, 2.0};
    for (int t = 0; t < 20; ++t) {
        const TruncatedSeries f = random_series(rng, 24, 24);
        const double nf = norm(f, alpha);
        std::uniform_real_distribution<double> u(-0.95, 0.95);
        const Complex z{u(rng) * 0.7, u(rng) * 0.7};
        const Complex w{u(rng) * 0.7, u(rng) * 0.7};
        CHECK(std::abs(f.evaluate(z, w)) <= hinf_sup_bound(alpha, 24, 24) * nf * (1.0 + 1e-9));
    }
}
