#include "unifft/detail/lines.hpp"

namespace unifft::detail {

void r2c_rows(LineTransform& line, std::size_t rows, std::span<const double> in,
              std::span<Complex> out) {
  const std::size_t n = line.length();
  const std::size_t h = n / 2 + 1;
  for (std::size_t r = 0; r < rows; ++r) {
    line.r2c(in.subspan(r * n, n), out.subspan(r * h, h));
  }
}

void c2r_rows(LineTransform& line, std::size_t rows, std::span<const Complex> in,
              std::span<double> out) {
  const std::size_t n = line.length();
  const std::size_t h = n / 2 + 1;
  for (std::size_t r = 0; r < rows; ++r) {
    line.c2r(in.subspan(r * h, h), out.subspan(r * n, n));
  }
}

void c2c_axis(LineTransform& line, std::span<Complex> data, const Shape& shape,
              std::size_t axis, Direction dir, std::span<Complex> scratch) {
  const std::size_t n = shape[axis];
  if (n == 0 || data.empty()) return;
  std::size_t inner = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  std::size_t outer = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];

  auto gathered = scratch.subspan(0, n);
  auto transformed = scratch.subspan(n, n);
  for (std::size_t o = 0; o < outer; ++o) {
    Complex* base = data.data() + o * n * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      for (std::size_t j = 0; j < n; ++j) gathered[j] = base[j * inner + i];
      line.c2c(gathered, transformed, dir);
      for (std::size_t j = 0; j < n; ++j) base[j * inner + i] = transformed[j];
    }
  }
}

void scale(std::span<Complex> data, double factor) {
  for (Complex& v : data) v *= factor;
}

}  // namespace unifft::detail
