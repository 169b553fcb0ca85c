#include "unifft/stats.hpp"

#include <random>

namespace unifft {

RealField init_random(const GridSpec& grid, std::uint64_t seed) {
  RealField field = make_real_field(grid);
  std::mt19937_64 engine(seed);
  constexpr double scale = 0x1.0p-53;
  for (double& v : field.data) {
    v = -1.0 + 2.0 * static_cast<double>(engine() >> 11) * scale;
  }
  return field;
}

double compute_mean(const RealField& field) {
  if (field.data.empty()) return 0.0;
  double sum = 0.0;
  for (double v : field.data) sum += v;
  return sum / static_cast<double>(field.data.size());
}

double compute_energy_X(const RealField& field) {
  if (field.data.empty()) return 0.0;
  double sum = 0.0;
  for (double v : field.data) sum += v * v;
  return 0.5 * sum / static_cast<double>(field.data.size());
}

double compute_energy_K(const SpectralField& field) {
  const std::size_t n_last = field.grid.dims().back();
  const std::size_t stored = field.shape.empty() ? 0 : field.shape.back();
  double sum = 0.0;
  for (std::size_t i = 0; i < field.data.size(); ++i) {
    sum += hermitian_weight(i % stored, n_last) * std::norm(field.data[i]);
  }
  return 0.5 * sum;
}

}  // namespace unifft
