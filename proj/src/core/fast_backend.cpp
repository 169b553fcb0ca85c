// Mixed-radix Cooley-Tukey line transforms. Lengths with a prime factor
// above kMaxDirectRadix go through Bluestein's chirp-z convolution on a
// power-of-two length. Real transforms of even length pack pairs of samples
// into one complex transform of half the length.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "backends.hpp"

namespace unifft::backends {

namespace {

constexpr std::size_t kMaxDirectRadix = 61;

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> factors;
  while (n % 4 == 0) {
    factors.push_back(4);
    n /= 4;
  }
  while (n % 2 == 0) {
    factors.push_back(2);
    n /= 2;
  }
  for (std::size_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

Complex unit_root(double numerator, double denominator) {
  const double angle = -2.0 * std::numbers::pi * numerator / denominator;
  return {std::cos(angle), std::sin(angle)};
}

class ComplexFft {
 public:
  explicit ComplexFft(std::size_t n) : n_(n), factors_(factorize(n)), roots_(n) {
    for (std::size_t j = 0; j < n; ++j) roots_[j] = unit_root(static_cast<double>(j), static_cast<double>(n));
    const std::size_t largest = factors_.empty() ? 1 : *std::max_element(factors_.begin(), factors_.end());
    if (largest > kMaxDirectRadix) {
      init_bluestein();
    } else {
      radix_scratch_.resize(largest);
    }
  }

  /// Unnormalized, out-of-place.
  void run(const Complex* in, Complex* out, Direction dir) {
    const bool inverse = dir == Direction::backward;
    if (conv_) {
      bluestein(in, out, inverse);
    } else {
      recurse(in, 1, out, n_, 0, inverse);
    }
  }

 private:
  Complex root(std::size_t j, bool inverse) const {
    return inverse ? std::conj(roots_[j]) : roots_[j];
  }

  // Decimation in time: transforms the n inputs in[0], in[stride], ... into
  // out[0..n), splitting off factors_[level].
  void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
               std::size_t level, bool inverse) {
    if (n == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t p = factors_[level];
    const std::size_t m = n / p;
    for (std::size_t r = 0; r < p; ++r) {
      recurse(in + r * stride, stride * p, out + r * m, m, level + 1, inverse);
    }
    const std::size_t step = n_ / n;
    switch (p) {
      case 2:
        for (std::size_t k = 0; k < m; ++k) {
          const Complex t0 = out[k];
          const Complex t1 = out[m + k] * root(k * step, inverse);
          out[k] = t0 + t1;
          out[m + k] = t0 - t1;
        }
        break;
      case 4: {
        const Complex rot = inverse ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
        for (std::size_t k = 0; k < m; ++k) {
          const Complex t0 = out[k];
          const Complex t1 = out[m + k] * root(k * step, inverse);
          const Complex t2 = out[2 * m + k] * root(2 * k * step, inverse);
          const Complex t3 = out[3 * m + k] * root(3 * k * step, inverse);
          const Complex a = t0 + t2;
          const Complex b = t0 - t2;
          const Complex c = t1 + t3;
          const Complex d = (t1 - t3) * rot;
          out[k] = a + c;
          out[m + k] = b + d;
          out[2 * m + k] = a - c;
          out[3 * m + k] = b - d;
        }
        break;
      }
      default: {
        const std::size_t pstep = n_ / p;
        Complex* t = radix_scratch_.data();
        for (std::size_t k = 0; k < m; ++k) {
          t[0] = out[k];
          for (std::size_t r = 1; r < p; ++r) t[r] = out[r * m + k] * root(r * k * step, inverse);
          for (std::size_t q = 0; q < p; ++q) {
            Complex acc = t[0];
            for (std::size_t r = 1; r < p; ++r) acc += t[r] * root(((r * q) % p) * pstep, inverse);
            out[q * m + k] = acc;
          }
        }
        break;
      }
    }
  }

  void init_bluestein() {
    std::size_t m = 1;
    while (m < 2 * n_ - 1) m *= 2;
    conv_ = std::make_unique<ComplexFft>(m);
    chirp_.resize(n_);
    const unsigned long long two_n = 2ULL * n_;
    for (std::size_t j = 0; j < n_; ++j) {
      const unsigned long long sq = (static_cast<unsigned long long>(j) * j) % two_n;
      chirp_[j] = unit_root(static_cast<double>(sq), static_cast<double>(two_n));
    }
    std::vector<Complex> kernel(m);
    kernel[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n_; ++j) {
      kernel[j] = std::conj(chirp_[j]);
      kernel[m - j] = std::conj(chirp_[j]);
    }
    kernel_fft_.resize(m);
    conv_->run(kernel.data(), kernel_fft_.data(), Direction::forward);
    work_a_.resize(m);
    work_b_.resize(m);
  }

  // The inverse is conj(forward(conj(x))).
  void bluestein(const Complex* in, Complex* out, bool inverse) {
    const std::size_t m = work_a_.size();
    for (std::size_t j = 0; j < n_; ++j) {
      const Complex x = inverse ? std::conj(in[j]) : in[j];
      work_a_[j] = x * chirp_[j];
    }
    std::fill(work_a_.begin() + static_cast<std::ptrdiff_t>(n_), work_a_.end(), Complex{});
    conv_->run(work_a_.data(), work_b_.data(), Direction::forward);
    for (std::size_t j = 0; j < m; ++j) work_b_[j] *= kernel_fft_[j];
    conv_->run(work_b_.data(), work_a_.data(), Direction::backward);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n_; ++k) {
      const Complex y = work_a_[k] * chirp_[k] * inv_m;
      out[k] = inverse ? std::conj(y) : y;
    }
  }

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> roots_;  // exp(-2 pi i j / n)
  std::vector<Complex> radix_scratch_;

  std::unique_ptr<ComplexFft> conv_;
  std::vector<Complex> chirp_;  // exp(-pi i j^2 / n)
  std::vector<Complex> kernel_fft_;
  std::vector<Complex> work_a_;
  std::vector<Complex> work_b_;
};

class FastLine final : public LineTransform {
 public:
  explicit FastLine(std::size_t n)
      : n_(n),
        full_(n),
        half_(n % 2 == 0 ? std::make_unique<ComplexFft>(n / 2) : nullptr),
        twiddle_(n / 2 + 1),
        scratch_a_(n),
        scratch_b_(n) {
    for (std::size_t k = 0; k <= n / 2; ++k) {
      twiddle_[k] = unit_root(static_cast<double>(k), static_cast<double>(n));
    }
  }

  std::size_t length() const noexcept override { return n_; }

  void r2c(std::span<const double> in, std::span<Complex> out) override {
    const std::size_t h = n_ / 2;
    if (!half_) {
      for (std::size_t j = 0; j < n_; ++j) scratch_a_[j] = {in[j], 0.0};
      full_.run(scratch_a_.data(), scratch_b_.data(), Direction::forward);
      std::copy_n(scratch_b_.begin(), h + 1, out.begin());
      return;
    }
    for (std::size_t j = 0; j < h; ++j) scratch_a_[j] = {in[2 * j], in[2 * j + 1]};
    half_->run(scratch_a_.data(), scratch_b_.data(), Direction::forward);
    const Complex minus_half_i{0.0, -0.5};
    for (std::size_t k = 0; k <= h; ++k) {
      const Complex z = scratch_b_[k % h];
      const Complex zc = std::conj(scratch_b_[(h - k) % h]);
      const Complex even = 0.5 * (z + zc);
      const Complex odd = minus_half_i * (z - zc);
      out[k] = even + twiddle_[k] * odd;
    }
  }

  void c2r(std::span<const Complex> in, std::span<double> out) override {
    const std::size_t h = n_ / 2;
    if (!half_) {
      scratch_a_[0] = {in[0].real(), 0.0};
      for (std::size_t k = 1; k <= h; ++k) {
        scratch_a_[k] = in[k];
        scratch_a_[n_ - k] = std::conj(in[k]);
      }
      full_.run(scratch_a_.data(), scratch_b_.data(), Direction::backward);
      for (std::size_t j = 0; j < n_; ++j) out[j] = scratch_b_[j].real();
      return;
    }
    const auto coefficient = [&](std::size_t k) {
      return (k == 0 || k == h) ? Complex{in[k].real(), 0.0} : in[k];
    };
    const Complex i_unit{0.0, 1.0};
    for (std::size_t k = 0; k < h; ++k) {
      const Complex x = coefficient(k);
      const Complex xc = std::conj(coefficient(h - k));
      scratch_a_[k] = (x + xc) + i_unit * (x - xc) * std::conj(twiddle_[k]);
    }
    half_->run(scratch_a_.data(), scratch_b_.data(), Direction::backward);
    for (std::size_t j = 0; j < h; ++j) {
      out[2 * j] = scratch_b_[j].real();
      out[2 * j + 1] = scratch_b_[j].imag();
    }
  }

  void c2c(std::span<const Complex> in, std::span<Complex> out, Direction dir) override {
    full_.run(in.data(), out.data(), dir);
  }

 private:
  std::size_t n_;
  ComplexFft full_;
  std::unique_ptr<ComplexFft> half_;  // even n only
  std::vector<Complex> twiddle_;      // exp(-2 pi i k / n), k <= n/2
  std::vector<Complex> scratch_a_;
  std::vector<Complex> scratch_b_;
};

class FastBackend final : public Backend {
 public:
  std::string_view id() const noexcept override { return "fast"; }
  std::unique_ptr<LineTransform> make_line(std::size_t n) const override {
    return std::make_unique<FastLine>(n);
  }
};

}  // namespace

const Backend& fast() {
  static const FastBackend instance;
  return instance;
}

}  // namespace unifft::backends
