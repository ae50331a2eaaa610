#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by malformed or unsuitable input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& what)
      : InputError(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

class NonSymmetric : public InputError {
 public:
  NonSymmetric() : InputError("bilinear form is not symmetric") {}
};

class DegenerateForm : public InputError {
 public:
  DegenerateForm() : InputError("bilinear form is degenerate") {}
};

class SingularMatrix : public InputError {
 public:
  SingularMatrix() : InputError("matrix is singular") {}
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class AntisymmetryViolation : public InputError {
 public:
  AntisymmetryViolation(std::size_t i, std::size_t j, std::size_t k)
      : InputError("structure constants not antisymmetric at (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "," + std::to_string(k + 1) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

/// Carries the offending basis triple (0-based) and a printable residual.
class JacobiViolation : public InputError {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::string residual)
      : InputError("Jacobi identity fails for basis triple (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "," + std::to_string(k + 1) + "), residual " + residual),
        i(i), j(j), k(k), residual(std::move(residual)) {}
  std::size_t i, j, k;
  std::string residual;
};

class NotLorentzian : public InputError {
 public:
  NotLorentzian() : InputError("metric is not Lorentzian (signature (-,+,...,+) required)") {}
};

class NotRiemannian : public InputError {
 public:
  NotRiemannian() : InputError("metric is not Riemannian (positive definite required)") {}
};

class NotClassC : public InputError {
 public:
  NotClassC() : InputError("Lie algebra does not belong to class C") {}
};

class AbelianInput : public InputError {
 public:
  AbelianInput() : InputError("Lie algebra is abelian") {}
};

class MismatchedAlgebras : public InputError {
 public:
  MismatchedAlgebras() : InputError("metrics live on different Lie algebras") {}
};

class InvalidTolerance : public InputError {
 public:
  using InputError::InputError;
};

class UnknownExample : public InputError {
 public:
  explicit UnknownExample(const std::string& name) : InputError("unknown catalog example '" + name + "'") {}
};

/// A theorem's hypothesis does not hold on the given instance.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class InvalidSplit : public Error {
 public:
  using Error::Error;
};

class OddDimension : public Error {
 public:
  using Error::Error;
};

class NonCommutingFamily : public Error {
 public:
  using Error::Error;
};

class RadicalDimensionUnsupported : public Error {
 public:
  explicit RadicalDimensionUnsupported(std::size_t dim)
      : Error("radical of the restricted form has dimension " + std::to_string(dim) +
              "; witness construction needs dimension 1"),
        dim(dim) {}
  std::size_t dim;
};

class NotDegenerate : public Error {
 public:
  NotDegenerate() : Error("restriction of the metric to the derived algebra is nondegenerate") {}
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class NonPositiveProduct : public Error {
 public:
  NonPositiveProduct() : Error("alpha * scale <= 0: no finite blow-up on this ray") {}
};

}  // namespace flatlie
