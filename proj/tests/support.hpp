#pragma once

// Shared helpers for the test suites.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "unifft/grid.hpp"

namespace unifft::testing {

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

/// Physical field f(x, y[, z]) with x along the last axis, y the one before,
/// z along axis 0, sampled at j * L / n.
inline RealField sample(const GridSpec& grid, const std::function<double(double, double, double)>& f) {
  RealField u = make_real_field(grid);
  const auto& d = grid.dims();
  const auto& len = grid.lengths();
  const bool three = d.size() == 3;
  const std::size_t nz = three ? d[0] : 1;
  const std::size_t ny = d[d.size() - 2], nx = d.back();
  const double dz = three ? len[0] / static_cast<double>(d[0]) : 0.0;
  const double dy = len[len.size() - 2] / static_cast<double>(ny);
  const double dx = len.back() / static_cast<double>(nx);
  std::size_t i = 0;
  for (std::size_t kz = 0; kz < nz; ++kz) {
    for (std::size_t jy = 0; jy < ny; ++jy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        u.data[i++] = f(static_cast<double>(ix) * dx, static_cast<double>(jy) * dy, static_cast<double>(kz) * dz);
      }
    }
  }
  return u;
}

/// Random grid with 2 or 3 axes, each extent drawn from [2, max_extent].
inline GridSpec random_grid(std::mt19937_64& rng, std::size_t ndim, std::size_t max_extent) {
  std::uniform_int_distribution<std::size_t> extent(2, max_extent);
  std::uniform_real_distribution<double> length(0.5, 10.0);
  Shape dims;
  std::vector<double> lengths;
  for (std::size_t a = 0; a < ndim; ++a) {
    dims.push_back(extent(rng));
    lengths.push_back(length(rng));
  }
  return GridSpec(dims, lengths);
}

}  // namespace unifft::testing
