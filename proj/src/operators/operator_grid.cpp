#include <numbers>

#include "unifft/errors.hpp"
#include "unifft/operators.hpp"
#include "unifft/stats.hpp"

namespace unifft {

namespace {

double signed_index(std::size_t m, std::size_t n, bool halved) {
  if (halved || m <= n / 2) return static_cast<double>(m);
  return static_cast<double>(m) - static_cast<double>(n);
}

// values[i] = f(global index along `axis`) for every element of the block.
template <typename Fn>
std::vector<double> along_axis(const Shape& shape, const Shape& offset, std::size_t axis, Fn&& f) {
  std::vector<double> out(element_count(shape));
  std::size_t inner = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  const std::size_t n = shape[axis];
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t local = (i / inner) % n;
    out[i] = f(offset[axis] + local);
  }
  return out;
}

OperatorGrid build(const GridSpec& grid, Shape shape_X, Shape offset_X, Shape shape_K, Shape offset_K) {
  OperatorGrid og{grid, std::move(shape_X), std::move(offset_X), std::move(shape_K), std::move(offset_K),
                  {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const std::size_t nd = grid.ndim();
  const std::size_t last = nd - 1;

  auto wavenumbers = [&](std::size_t axis) {
    const double dk = 2.0 * std::numbers::pi / grid.lengths()[axis];
    const std::size_t n = grid.dims()[axis];
    const bool halved = axis == last;
    return along_axis(og.shape_K_loc, og.offset_K_loc, axis,
                      [=](std::size_t m) { return dk * signed_index(m, n, halved); });
  };
  auto coordinates = [&](std::size_t axis) {
    const double dx = grid.lengths()[axis] / static_cast<double>(grid.dims()[axis]);
    return along_axis(og.shape_X_loc, og.offset_X_loc, axis,
                      [=](std::size_t j) { return static_cast<double>(j) * dx; });
  };

  og.KX = wavenumbers(last);
  og.KY = wavenumbers(last - 1);
  og.XX = coordinates(last);
  og.YY = coordinates(last - 1);
  if (nd == 3) {
    og.KZ = wavenumbers(0);
    og.ZZ = coordinates(0);
  }

  const std::size_t count = og.KX.size();
  og.K2.resize(count);
  og.inv_k_square_nozero.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    double k2 = og.KX[i] * og.KX[i] + og.KY[i] * og.KY[i];
    if (nd == 3) k2 += og.KZ[i] * og.KZ[i];
    og.K2[i] = k2;
    og.inv_k_square_nozero[i] = k2 == 0.0 ? 0.0 : 1.0 / k2;
  }
  const std::size_t n_last = grid.dims()[last];
  og.hermitian_weights = along_axis(og.shape_K_loc, og.offset_K_loc, last,
                                    [=](std::size_t m) { return hermitian_weight(m, n_last); });
  return og;
}

}  // namespace

const std::vector<double>& OperatorGrid::wavenumbers(std::size_t component) const {
  switch (component) {
    case 0: return KX;
    case 1: return KY;
    case 2:
      if (ndim() == 3) return KZ;
      break;
  }
  throw ShapeError("no wavenumber array for component " + std::to_string(component));
}

OperatorGrid build_operator_grid(const FftPlan& plan) {
  const std::size_t nd = plan.grid().ndim();
  return build(plan.grid(), plan.shape_X(), Shape(nd, 0), plan.shape_K(), Shape(nd, 0));
}

OperatorGrid build_operator_grid(const DistPlan& plan) {
  const DecompositionInfo& d = plan.decomposition();
  return build(plan.grid(), d.shapeX_loc, d.offsetX_loc, d.shapeK_loc, d.offsetK_loc);
}

}  // namespace unifft
