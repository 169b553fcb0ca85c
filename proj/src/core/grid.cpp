#include "unifft/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "unifft/errors.hpp"

namespace unifft {

Shape half_spectrum_shape(const Shape& dims) {
  Shape out = dims;
  if (!out.empty()) out.back() = out.back() / 2 + 1;
  return out;
}

GridSpec::GridSpec(Shape dims, std::vector<double> lengths)
    : dims_(std::move(dims)), lengths_(std::move(lengths)) {
  if (dims_.size() != 2 && dims_.size() != 3) {
    throw InvalidGrid("grid must have 2 or 3 axes, got " + std::to_string(dims_.size()));
  }
  if (lengths_.size() != dims_.size()) {
    throw InvalidGrid("expected " + std::to_string(dims_.size()) + " lengths, got " +
                      std::to_string(lengths_.size()));
  }
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a] < 2) {
      throw InvalidGrid("axis " + std::to_string(a) + " has " + std::to_string(dims_[a]) +
                        " points, need at least 2");
    }
    if (!std::isfinite(lengths_[a]) || lengths_[a] <= 0.0) {
      throw InvalidGrid("axis " + std::to_string(a) + " length must be positive");
    }
  }
}

GridSpec GridSpec::periodic(Shape dims) {
  std::vector<double> lengths(dims.size(), 2.0 * std::numbers::pi);
  return GridSpec(std::move(dims), std::move(lengths));
}

RealField make_real_field(const GridSpec& grid) {
  return RealField{grid, grid.dims(), std::vector<double>(grid.size(), 0.0)};
}

SpectralField make_spectral_field(const GridSpec& grid) {
  Shape shape = grid.spectral_dims();
  const std::size_t count = element_count(shape);
  return SpectralField{grid, std::move(shape), std::vector<Complex>(count)};
}

}  // namespace unifft
