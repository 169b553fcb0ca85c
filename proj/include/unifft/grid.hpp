#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

namespace unifft {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;

inline std::size_t element_count(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         [](std::size_t a, std::size_t b) { return a * b; });
}

/// Shape of the Hermitian half-spectrum of a real array: last axis n/2+1.
Shape half_spectrum_shape(const Shape& dims);

/**
 * Global physical grid: 2 or 3 axes, at least 2 points each, and the
 * periodic domain length along every axis.
 */
class GridSpec {
 public:
  GridSpec(Shape dims, std::vector<double> lengths);

  /// Grid with every length equal to 2*pi.
  static GridSpec periodic(Shape dims);

  const Shape& dims() const noexcept { return dims_; }
  const std::vector<double>& lengths() const noexcept { return lengths_; }
  std::size_t ndim() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return element_count(dims_); }
  Shape spectral_dims() const { return half_spectrum_shape(dims_); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  Shape dims_;
  std::vector<double> lengths_;
};

/// Row-major array tied to a grid. Sequential fields span the whole grid;
/// distributed blocks carry their local shape.
template <typename T>
struct Field {
  GridSpec grid;
  Shape shape;
  std::vector<T> data;
};

using RealField = Field<double>;
using SpectralField = Field<Complex>;

RealField make_real_field(const GridSpec& grid);
SpectralField make_spectral_field(const GridSpec& grid);

}  // namespace unifft
