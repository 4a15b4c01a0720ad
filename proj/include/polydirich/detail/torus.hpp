#pragma once

#include <vector>

#include "polydirich/series.hpp"

namespace polydirich::detail {

/// Evaluates a truncated series on an equispaced P x Q angular grid at fixed
/// radii, via a 2-D FFT of the radially scaled coefficient grid. Coefficient
/// indices wrap modulo the grid size, which leaves the grid-point values
/// exact even when the angular resolution is below the degree.
class TorusGrid {
  public:
    TorusGrid(int angular_z, int angular_w);
    ~TorusGrid();
    TorusGrid(const TorusGrid&) = delete;
    TorusGrid& operator=(const TorusGrid&) = delete;

    void evaluate(const TruncatedSeries& f, double r1, double r2);

    double mean_abs2() const;
    double max_abs() const;
    const std::vector<Complex>& values() const { return out_; }

  private:
    int P_;
    int Q_;
    std::vector<Complex> in_;
    std::vector<Complex> out_;
    void* plan_;
};

}  // namespace polydirich::detail
