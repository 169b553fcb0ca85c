#pragma once

#include <cstdint>

#include "unifft/grid.hpp"

namespace unifft {

/// Fills a field with values uniform in [-1, 1) drawn from std::mt19937_64.
/// Each value is -1 + 2 * (draw >> 11) * 2^-53, so the stream is portable.
RealField init_random(const GridSpec& grid, std::uint64_t seed);

double compute_mean(const RealField& field);

/// 0.5 * mean(u^2).
double compute_energy_X(const RealField& field);

/// 0.5 * sum of w_k |u_k|^2 over the half spectrum, w_k = 2 for modes whose
/// conjugate partner is not stored.
double compute_energy_K(const SpectralField& field);

/// Hermitian weight of last-axis index `index` for a last axis of `n` points.
inline double hermitian_weight(std::size_t index, std::size_t n) {
  if (index == 0) return 1.0;
  if (n % 2 == 0 && index == n / 2) return 1.0;
  return 2.0;
}

}  // namespace unifft
