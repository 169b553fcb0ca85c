#pragma once

// Multi-dimensional transforms assembled from line transforms. Shared by the
// sequential and distributed plans.

#include <span>

#include "unifft/backend.hpp"
#include "unifft/grid.hpp"

namespace unifft::detail {

/// r2c along the last axis of every row. `in` holds rows*n reals, `out`
/// rows*(n/2+1) coefficients.
void r2c_rows(LineTransform& line, std::size_t rows, std::span<const double> in,
              std::span<Complex> out);

void c2r_rows(LineTransform& line, std::size_t rows, std::span<const Complex> in,
              std::span<double> out);

/// In-place c2c along `axis` of a row-major block. `scratch` must hold at
/// least 2 * shape[axis] values.
void c2c_axis(LineTransform& line, std::span<Complex> data, const Shape& shape,
              std::size_t axis, Direction dir, std::span<Complex> scratch);

void scale(std::span<Complex> data, double factor);

}  // namespace unifft::detail
