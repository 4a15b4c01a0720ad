#include "polydirich/weights.hpp"

#include <cmath>

namespace polydirich {

Order compare(const WeightVector& a, const WeightVector& b) {
    const bool ge = a.alpha1 >= b.alpha1 && a.alpha2 >= b.alpha2;
    const bool le = a.alpha1 <= b.alpha1 && a.alpha2 <= b.alpha2;
    if (ge && le) return Order::equal;
    if (a.alpha1 > b.alpha1 && a.alpha2 > b.alpha2) return Order::strictly_greater;
    if (a.alpha1 < b.alpha1 && a.alpha2 < b.alpha2) return Order::strictly_less;
    if (ge) return Order::greater_equal;
    if (le) return Order::less_equal;
    return Order::incomparable;
}

double weight_at_1d(long k, double a) {
    return std::exp(a * std::log(static_cast<double>(k + 1)));
}

double weight_at(long k, long l, const WeightVector& alpha) {
    return std::exp(alpha.alpha1 * std::log(static_cast<double>(k + 1)) +
                    alpha.alpha2 * std::log(static_cast<double>(l + 1)));
}

}  // namespace polydirich
