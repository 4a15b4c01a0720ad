#include "polydirich/families.hpp"

#include <cmath>
#include <stdexcept>

namespace polydirich {

namespace {

WeightVector require_alpha(const FamilyParams& params, const char* family) {
    if (!params.alpha)
        throw std::invalid_argument(std::string("family ") + family + " requires a weight vector");
    return *params.alpha;
}

// binom(n,p) / 2^{n+1} via log-gamma, stable for large n.
double scaled_binomial(long n, long p) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(p + 1.0) - std::lgamma(n - p + 1.0) -
                    (n + 1.0) * std::log(2.0));
}

}  // namespace

UnivariateSeries lacunary_series(double a2, long deg) {
    UnivariateSeries g = UnivariateSeries::zero(deg);
    for (long j = 0;; ++j) {
        const long l = 1L << j;
        if (l > deg) break;
        g[l] = std::exp(-0.5 * a2 * j * std::log(2.0));
    }
    return g;
}

TruncatedSeries generate(Family family, const FamilyParams& params, long deg_z, long deg_w) {
    if (deg_z < 0 || deg_w < 0) throw std::invalid_argument("degrees must be nonnegative");
    TruncatedSeries f(deg_z, deg_w);
    switch (family) {
        case Family::proper_containment: {
            const WeightVector a = require_alpha(params, "proper_containment");
            for (long k = 0; k <= deg_z; ++k)
                for (long l = 0; l <= deg_w; ++l)
                    f(k, l) = weight_at_1d(k, (-a.alpha1 - 1.0) / 2.0) *
                              weight_at_1d(l, (-a.alpha2 - 1.0) / 2.0);
            return f;
        }
        case Family::univariate_remark: {
            const WeightVector a = require_alpha(params, "univariate_remark");
            for (long k = 0; k <= deg_z; ++k) f(k, 0) = weight_at_1d(k, (-a.alpha1 - 1.0) / 2.0);
            return f;
        }
        case Family::non_factoring: {
            const WeightVector a = require_alpha(params, "non_factoring");
            for (long k = 0; k <= deg_z; ++k) {
                const double pk = std::pow(k + 1.0, 3.0);
                for (long l = 0; l <= deg_w; ++l) {
                    const double num = weight_at_1d(k, 1.0 - a.alpha1) * weight_at_1d(l, 1.0 - a.alpha2);
                    f(k, l) = std::sqrt(num / (pk + std::pow(l + 1.0, 3.0)));
                }
            }
            return f;
        }
        case Family::all_ones: {
            for (long k = 0; k <= deg_z; ++k)
                for (long l = 0; l <= deg_w; ++l) f(k, l) = 1.0;
            return f;
        }
        case Family::rational: {
            for (long p = 0; p <= deg_z; ++p)
                for (long q = 0; q <= deg_w; ++q) f(p, q) = -scaled_binomial(p + q, p);
            return f;
        }
        case Family::lacunary_bounded: {
            const WeightVector a = require_alpha(params, "lacunary_bounded");
            const UnivariateSeries g = lacunary_series(a.alpha2, deg_w);
            for (long k = 0; k <= deg_z; ++k) {
                const double scale = weight_at_1d(k, -(a.alpha1 + 2.0) / 2.0);
                for (long l = 0; l <= deg_w; ++l) f(k, l) = g.at(l) * scale;
            }
            return f;
        }
        case Family::tensor: {
            for (long k = 0; k <= deg_z; ++k)
                for (long l = 0; l <= deg_w; ++l) f(k, l) = 1.0 / ((k + 1.0) * (l + 1.0));
            return f;
        }
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_string(const std::string& name) {
    if (name == "proper_containment") return Family::proper_containment;
    if (name == "univariate_remark") return Family::univariate_remark;
    if (name == "non_factoring") return Family::non_factoring;
    if (name == "all_ones") return Family::all_ones;
    if (name == "rational") return Family::rational;
    if (name == "lacunary_bounded") return Family::lacunary_bounded;
    if (name == "tensor") return Family::tensor;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_to_string(Family family) {
    switch (family) {
        case Family::proper_containment: return "proper_containment";
        case Family::univariate_remark: return "univariate_remark";
        case Family::non_factoring: return "non_factoring";
        case Family::all_ones: return "all_ones";
        case Family::rational: return "rational";
        case Family::lacunary_bounded: return "lacunary_bounded";
        case Family::tensor: return "tensor";
    }
    return "?";
}

}  // namespace polydirich
