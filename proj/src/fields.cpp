#include "fields.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "observables.hpp"

namespace nabscat::fields {

void GridSpec::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max) || nx < 2 || ny < 2 || !(r_min > 0.0)) {
    throw std::invalid_argument("GridSpec: invariant violated");
  }
}

FieldGrid render_fields(const models::StateEvaluator& state, const GridSpec& grid,
                        int threads) {
  grid.validate();
  if (threads < 1) threads = 1;
  FieldGrid out;
  out.grid = grid;
  const size_t total = static_cast<size_t>(grid.nx) * static_cast<size_t>(grid.ny);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.rho.assign(total, nan);
  out.jx.assign(total, nan);
  out.jy.assign(total, nan);

  auto render_row = [&](int iy) {
    const double y = grid.y_at(iy);
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.x_at(ix);
      const double r = std::hypot(x, y);
      if (r < grid.r_min) continue;  // NaN sentinel stays
      const double phi = std::atan2(y, x);
      const size_t idx = static_cast<size_t>(iy) * static_cast<size_t>(grid.nx) +
                         static_cast<size_t>(ix);
      const auto sample = observables::sample_fields(state, r, phi);
      out.rho[idx] = sample.rho;
      out.jx[idx] = sample.j.jx;
      out.jy[idx] = sample.j.jy;
    }
  };

  if (threads == 1) {
    for (int iy = 0; iy < grid.ny; ++iy) render_row(iy);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const int iy = next.fetch_add(1);
          if (iy >= grid.ny) return;
          render_row(iy);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace nabscat::fields
