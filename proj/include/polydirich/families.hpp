#pragma once

#include <optional>
#include <string>

#include "polydirich/series.hpp"
#include "polydirich/weights.hpp"

namespace polydirich {

/// Closed-form coefficient families used by the theorem checks.
enum class Family {
    proper_containment,  // a_{k,l} = (k+1)^{(-a1-1)/2} (l+1)^{(-a2-1)/2}
    univariate_remark,   // a_{k,0} = (k+1)^{(-a1-1)/2}, constant in w
    non_factoring,       // a_{k,l} = sqrt((k+1)^{1-a1}(l+1)^{1-a2} / ((k+1)^3+(l+1)^3))
    all_ones,            // a_{k,l} = 1
    rational,            // 1/(z+w-2): a_{p,q} = -binom(p+q,p)/2^{p+q+1}
    lacunary_bounded,    // a_{k,l} = c_l (k+1)^{-(a1+2)/2}, c lacunary with decay 2^{-j a2/2}
    tensor,              // a_{k,l} = (k+1)^{-1} (l+1)^{-1}
};

struct FamilyParams {
    std::optional<WeightVector> alpha;
};

/// Populate a coefficient grid from the family's closed form. Families that
/// need a weight vector throw std::invalid_argument when it is missing.
TruncatedSeries generate(Family family, const FamilyParams& params, long deg_z, long deg_w);

/// The bounded-but-not-in-D_{a2} lacunary witness g(w) = sum_j 2^{-j a2/2} w^{2^j}.
UnivariateSeries lacunary_series(double a2, long deg);

Family family_from_string(const std::string& name);
std::string family_to_string(Family family);

}  // namespace polydirich
