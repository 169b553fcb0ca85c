#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unifft/grid.hpp"

namespace unifft {

enum class Direction { forward, backward };

/**
 * One-dimensional transforms of a fixed length. All transforms are
 * unnormalized: forward uses exp(-2 pi i jk/n), backward exp(+2 pi i jk/n).
 *
 * Implementations own scratch space, so a LineTransform must not be used
 * from two threads at once. Inputs and outputs never alias.
 */
class LineTransform {
 public:
  virtual ~LineTransform() = default;

  virtual std::size_t length() const noexcept = 0;

  /// n reals -> n/2+1 complex coefficients.
  virtual void r2c(std::span<const double> in, std::span<Complex> out) = 0;

  /// n/2+1 coefficients -> n reals by Hermitian synthesis. Imaginary parts
  /// of the zero mode and, for even n, the n/2 mode are ignored.
  virtual void c2r(std::span<const Complex> in, std::span<double> out) = 0;

  virtual void c2c(std::span<const Complex> in, std::span<Complex> out,
                   Direction dir) = 0;
};

/// A named source of line transforms.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string_view id() const noexcept = 0;
  virtual std::unique_ptr<LineTransform> make_line(std::size_t n) const = 0;
};

/// Throws BackendUnavailable for unknown ids.
const Backend& find_backend(std::string_view id);

/// Registered backend ids in preference order: "fast", "naive", then any
/// native adapters compiled in (e.g. "fftw").
std::vector<std::string> available_backends();

/// First entry of available_backends().
std::string default_backend();

}  // namespace unifft
