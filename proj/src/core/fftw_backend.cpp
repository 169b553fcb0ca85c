// Line transforms backed by FFTW3. Plans are created with FFTW_UNALIGNED so
// the new-array execute functions accept any caller buffer. The FFTW planner
// is not thread-safe; planning and destruction are serialized.

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "backends.hpp"

namespace unifft::backends {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

class FftwLine final : public LineTransform {
 public:
  explicit FftwLine(std::size_t n) : n_(n), real_buf_(n), cplx_a_(n), cplx_b_(n) {
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    r2c_ = fftw_plan_dft_r2c_1d(len, real_buf_.data(), as_fftw(cplx_a_.data()), flags);
    c2r_ = fftw_plan_dft_c2r_1d(len, as_fftw(cplx_a_.data()), real_buf_.data(), flags);
    fwd_ = fftw_plan_dft_1d(len, as_fftw(cplx_a_.data()), as_fftw(cplx_b_.data()), FFTW_FORWARD, flags);
    bwd_ = fftw_plan_dft_1d(len, as_fftw(cplx_a_.data()), as_fftw(cplx_b_.data()), FFTW_BACKWARD, flags);
  }

  ~FftwLine() override {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(r2c_);
    fftw_destroy_plan(c2r_);
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }

  FftwLine(const FftwLine&) = delete;
  FftwLine& operator=(const FftwLine&) = delete;

  std::size_t length() const noexcept override { return n_; }

  void r2c(std::span<const double> in, std::span<Complex> out) override {
    std::copy_n(in.begin(), n_, real_buf_.begin());
    fftw_execute_dft_r2c(r2c_, real_buf_.data(), as_fftw(out.data()));
  }

  void c2r(std::span<const Complex> in, std::span<double> out) override {
    const std::size_t h = n_ / 2;
    // c2r overwrites its input.
    std::copy_n(in.begin(), h + 1, cplx_a_.begin());
    cplx_a_[0].imag(0.0);
    if (n_ % 2 == 0) cplx_a_[h].imag(0.0);
    fftw_execute_dft_c2r(c2r_, as_fftw(cplx_a_.data()), out.data());
  }

  void c2c(std::span<const Complex> in, std::span<Complex> out, Direction dir) override {
    std::copy_n(in.begin(), n_, cplx_a_.begin());
    fftw_execute_dft(dir == Direction::forward ? fwd_ : bwd_, as_fftw(cplx_a_.data()),
                     as_fftw(out.data()));
  }

 private:
  std::size_t n_;
  std::vector<double> real_buf_;
  std::vector<Complex> cplx_a_;
  std::vector<Complex> cplx_b_;
  fftw_plan r2c_{};
  fftw_plan c2r_{};
  fftw_plan fwd_{};
  fftw_plan bwd_{};
};

class FftwBackend final : public Backend {
 public:
  std::string_view id() const noexcept override { return "fftw"; }
  std::unique_ptr<LineTransform> make_line(std::size_t n) const override {
    return std::make_unique<FftwLine>(n);
  }
};

}  // namespace

const Backend& fftw() {
  static const FftwBackend instance;
  return instance;
}

}  // namespace unifft::backends
