#include "unifft/plan.hpp"

#include <algorithm>

#include "unifft/detail/lines.hpp"
#include "unifft/errors.hpp"

namespace unifft {

FftPlan::FftPlan(const Backend& backend, GridSpec grid)
    : backend_id_(backend.id()),
      grid_(std::move(grid)),
      shape_X_(grid_.dims()),
      shape_K_(grid_.spectral_dims()) {
  std::size_t longest = 0;
  for (std::size_t n : shape_X_) {
    lines_.push_back(backend.make_line(n));
    longest = std::max(longest, n);
  }
  work_.resize(element_count(shape_K_));
  line_scratch_.resize(2 * longest);
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

void FftPlan::forward(std::span<const double> in, std::span<Complex> out) {
  const std::size_t last = shape_X_.size() - 1;
  const std::size_t rows = element_count(shape_X_) / shape_X_[last];
  detail::r2c_rows(*lines_[last], rows, in, out);
  for (std::size_t axis = last; axis-- > 0;) {
    detail::c2c_axis(*lines_[axis], out, shape_K_, axis, Direction::forward, line_scratch_);
  }
  detail::scale(out, 1.0 / static_cast<double>(grid_.size()));
}

void FftPlan::backward(std::span<const Complex> in, std::span<double> out) {
  const std::size_t last = shape_X_.size() - 1;
  std::copy(in.begin(), in.end(), work_.begin());
  for (std::size_t axis = 0; axis < last; ++axis) {
    detail::c2c_axis(*lines_[axis], work_, shape_K_, axis, Direction::backward, line_scratch_);
  }
  const std::size_t rows = element_count(shape_X_) / shape_X_[last];
  detail::c2r_rows(*lines_[last], rows, work_, out);
}

FftPlan create_plan(std::string_view backend_id, const GridSpec& grid) {
  return FftPlan(find_backend(backend_id), grid);
}

namespace {

template <typename T>
void check_field(const Field<T>& field, const Shape& expected, const char* what) {
  if (field.shape != expected || field.data.size() != element_count(expected)) {
    throw ShapeError(std::string(what) + " does not match the plan's shape");
  }
}

}  // namespace

void fft_into(FftPlan& plan, const RealField& input, SpectralField& output) {
  check_field(input, plan.shape_X(), "fft input");
  check_field(output, plan.shape_K(), "fft output");
  plan.forward(input.data, output.data);
}

SpectralField fft_alloc(FftPlan& plan, const RealField& input) {
  SpectralField output = make_spectral_field(plan.grid());
  fft_into(plan, input, output);
  return output;
}

void ifft_into(FftPlan& plan, const SpectralField& input, RealField& output) {
  check_field(input, plan.shape_K(), "ifft input");
  check_field(output, plan.shape_X(), "ifft output");
  plan.backward(input.data, output.data);
}

RealField ifft_alloc(FftPlan& plan, const SpectralField& input) {
  RealField output = make_real_field(plan.grid());
  ifft_into(plan, input, output);
  return output;
}

}  // namespace unifft
