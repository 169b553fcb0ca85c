// Direct O(n^2) line transforms. Deterministic: every coefficient is a fixed
// sequence of multiply-adds against a precomputed root table.

#include <cmath>
#include <numbers>

#include "backends.hpp"

namespace unifft::backends {

namespace {

class NaiveLine final : public LineTransform {
 public:
  explicit NaiveLine(std::size_t n) : n_(n), roots_(n) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      roots_[j] = {std::cos(angle), std::sin(angle)};
    }
  }

  std::size_t length() const noexcept override { return n_; }

  void r2c(std::span<const double> in, std::span<Complex> out) override {
    for (std::size_t k = 0; k <= n_ / 2; ++k) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < n_; ++j) acc += in[j] * roots_[(j * k) % n_];
      out[k] = acc;
    }
  }

  void c2r(std::span<const Complex> in, std::span<double> out) override {
    const std::size_t paired = (n_ - 1) / 2;  // modes with an implicit conjugate
    const bool has_nyquist = n_ % 2 == 0;
    for (std::size_t j = 0; j < n_; ++j) {
      double acc = in[0].real();
      if (has_nyquist) acc += (j % 2 == 0 ? 1.0 : -1.0) * in[n_ / 2].real();
      for (std::size_t k = 1; k <= paired; ++k) {
        acc += 2.0 * (in[k] * std::conj(roots_[(j * k) % n_])).real();
      }
      out[j] = acc;
    }
  }

  void c2c(std::span<const Complex> in, std::span<Complex> out, Direction dir) override {
    const bool inverse = dir == Direction::backward;
    for (std::size_t k = 0; k < n_; ++k) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < n_; ++j) {
        const Complex w = roots_[(j * k) % n_];
        acc += in[j] * (inverse ? std::conj(w) : w);
      }
      out[k] = acc;
    }
  }

 private:
  std::size_t n_;
  std::vector<Complex> roots_;
};

class NaiveBackend final : public Backend {
 public:
  std::string_view id() const noexcept override { return "naive"; }
  std::unique_ptr<LineTransform> make_line(std::size_t n) const override {
    return std::make_unique<NaiveLine>(n);
  }
};

}  // namespace

const Backend& naive() {
  static const NaiveBackend instance;
  return instance;
}

}  // namespace unifft::backends
