#include "unifft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "unifft/errors.hpp"

namespace unifft {

namespace {

// roots[j] = exp(-2 pi i j / n), evaluated directly from the angle.
std::vector<Complex> roots_of_unity(std::size_t n) {
  std::vector<Complex> roots(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    roots[j] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

}  // namespace

SpectralField naive_dft_r2c(const GridSpec& grid, const RealField& input) {
  if (input.shape != grid.dims() || input.data.size() != grid.size()) {
    throw ShapeError("naive_dft_r2c: input does not match grid");
  }
  // Treat 2D as 3D with a leading axis of one point.
  Shape dims = grid.dims();
  if (dims.size() == 2) dims.insert(dims.begin(), 1);
  const std::size_t n0 = dims[0], n1 = dims[1], n2 = dims[2];
  const std::size_t h2 = n2 / 2 + 1;
  const auto w0 = roots_of_unity(n0);
  const auto w1 = roots_of_unity(n1);
  const auto w2 = roots_of_unity(n2);

  SpectralField out = make_spectral_field(grid);
  const double inv_n = 1.0 / static_cast<double>(grid.size());
  for (std::size_t k0 = 0; k0 < n0; ++k0) {
    for (std::size_t k1 = 0; k1 < n1; ++k1) {
      for (std::size_t k2 = 0; k2 < h2; ++k2) {
        Complex acc{0.0, 0.0};
        for (std::size_t x0 = 0; x0 < n0; ++x0) {
          const Complex p0 = w0[(k0 * x0) % n0];
          for (std::size_t x1 = 0; x1 < n1; ++x1) {
            const Complex p01 = p0 * w1[(k1 * x1) % n1];
            const double* row = &input.data[(x0 * n1 + x1) * n2];
            for (std::size_t x2 = 0; x2 < n2; ++x2) {
              acc += row[x2] * (p01 * w2[(k2 * x2) % n2]);
            }
          }
        }
        out.data[(k0 * n1 + k1) * h2 + k2] = acc * inv_n;
      }
    }
  }
  return out;
}

}  // namespace unifft
