#pragma once

namespace polydirich {

/// Exponent pair (alpha1, alpha2) parameterizing the weighted l2 structure
/// on the bidisc: weight (k+1)^alpha1 (l+1)^alpha2.
struct WeightVector {
    double alpha1;
    double alpha2;
};

/// Componentwise partial order on weight vectors.
enum class Order {
    strictly_greater,
    greater_equal,
    strictly_less,
    less_equal,
    equal,
    incomparable,
};

Order compare(const WeightVector& a, const WeightVector& b);

/// (k+1)^alpha1 (l+1)^alpha2, evaluated in log space so large |alpha| and
/// indices up to ~1e5 stay in range.
double weight_at(long k, long l, const WeightVector& alpha);

/// Univariate weight (k+1)^a.
double weight_at_1d(long k, double a);

}  // namespace polydirich
