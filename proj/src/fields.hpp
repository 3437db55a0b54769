#pragma once

#include <vector>

#include "models.hpp"

// Parallel evaluation of rho and j on a Cartesian window. Output ordering is
// deterministic regardless of the thread count.

namespace nabscat::fields {

struct GridSpec {
  double x_min = -10.0, x_max = 10.0;
  double y_min = -10.0, y_max = 10.0;
  int nx = 201, ny = 201;
  double r_min = 1e-3;  // minimum-radius guard; samples inside are NaN

  void validate() const;  // throws std::invalid_argument
  double x_at(int ix) const { return x_min + (x_max - x_min) * ix / (nx - 1); }
  double y_at(int iy) const { return y_min + (y_max - y_min) * iy / (ny - 1); }
};

struct FieldGrid {
  GridSpec grid;
  // row-major, index = iy * nx + ix
  std::vector<double> rho;
  std::vector<double> jx;
  std::vector<double> jy;
};

FieldGrid render_fields(const models::StateEvaluator& state, const GridSpec& grid,
                        int threads = 1);

}  // namespace nabscat::fields
