#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace phin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (poles, negative radii, x = 0 with nu < 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a numerical validity envelope or a precomputed table.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Evaluation exactly at a logarithmic singularity of a Hilbert-transformed atom.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Grid of the wrong shape (length not a power of two, mismatched arrays).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input that makes a construction vacuous, e.g. an all-zero coefficient vector.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Requested accuracy could not be met. Carries the best available estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, std::complex<double> estimate, double indicator)
      : Error(what), estimate_(estimate), indicator_(indicator) {}

  std::complex<double> estimate() const noexcept { return estimate_; }
  double indicator() const noexcept { return indicator_; }

 private:
  std::complex<double> estimate_;
  double indicator_;
};

}  // namespace phin
