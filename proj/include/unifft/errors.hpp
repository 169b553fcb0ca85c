#pragma once

#include <exception>
#include <stdexcept>
#include <string>

namespace unifft {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested backend id is not registered in this build.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

/// Array extents do not match what a plan or operator expects.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The global shape cannot be decomposed over the available ranks.
class BadParameters : public Error {
 public:
  using Error::Error;
};

/// Every live rank is blocked in a collective that can never complete.
class DeadlockDetected : public Error {
 public:
  using Error::Error;
};

/// Ranks passed incompatible layouts to a collective redistribution.
class LayoutMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A rank program failed; carries the id of the rank that raised.
class RankFailure : public Error {
 public:
  RankFailure(int rank, const std::string& what, std::exception_ptr cause = nullptr)
      : Error("rank " + std::to_string(rank) + ": " + what), rank_(rank), cause_(std::move(cause)) {}

  int rank() const noexcept { return rank_; }

  /// The exception the rank program raised.
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  int rank_;
  std::exception_ptr cause_;
};

}  // namespace unifft
