#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unifft/backend.hpp"
#include "unifft/grid.hpp"

namespace unifft {

/**
 * Sequential real-to-complex transform for one backend and one grid.
 *
 * Forward: u_k = (1/N) sum_x u(x) exp(-i k.x), stored as the half spectrum.
 * Backward: unnormalized Hermitian synthesis, so backward(forward(u)) == u.
 *
 * The configuration is fixed at creation. The plan owns scratch buffers, so
 * transforms never allocate, and one plan must not run on two threads at once.
 */
class FftPlan {
 public:
  FftPlan(const Backend& backend, GridSpec grid);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;

  const std::string& backend_id() const noexcept { return backend_id_; }
  const GridSpec& grid() const noexcept { return grid_; }
  const Shape& shape_X() const noexcept { return shape_X_; }
  const Shape& shape_K() const noexcept { return shape_K_; }
  static constexpr std::string_view normalization() { return "forward-normalized"; }

  /// Unchecked transforms on raw row-major buffers of the plan's shapes.
  void forward(std::span<const double> in, std::span<Complex> out);
  void backward(std::span<const Complex> in, std::span<double> out);

 private:
  std::string backend_id_;
  GridSpec grid_;
  Shape shape_X_;
  Shape shape_K_;
  std::vector<std::unique_ptr<LineTransform>> lines_;  // one per axis
  std::vector<Complex> work_;
  std::vector<Complex> line_scratch_;
};

/// Throws BackendUnavailable or InvalidGrid.
FftPlan create_plan(std::string_view backend_id, const GridSpec& grid);

/// Throws ShapeError when the fields do not match the plan.
void fft_into(FftPlan& plan, const RealField& input, SpectralField& output);
SpectralField fft_alloc(FftPlan& plan, const RealField& input);
void ifft_into(FftPlan& plan, const SpectralField& input, RealField& output);
RealField ifft_alloc(FftPlan& plan, const SpectralField& input);

}  // namespace unifft
