#pragma once

#include <stdexcept>
#include <string>

namespace qwire {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Out-of-domain scalar argument (energy <= 0, rho outside [0, 1], ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double smallest_singular_value)
      : Error(what), smallest_singular_value_(smallest_singular_value) {}

  double smallest_singular_value() const { return smallest_singular_value_; }

 private:
  double smallest_singular_value_;
};

class UnitarityError : public Error {
 public:
  UnitarityError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Frobenius norm of M^dagger M - I for the offending matrix.
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A boundary condition fails the rank or self-adjointness test.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// 1 - S_ii U_11 vanishes: the cavity between the vertex and the inserted
/// auxiliary vertex is resonant and the multiple-reflection series diverges.
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& what, double denominator_modulus)
      : Error(what), denominator_modulus_(denominator_modulus) {}

  double denominator_modulus() const { return denominator_modulus_; }

 private:
  double denominator_modulus_;
};

/// The reflection amplitude is too small for the reflection-maximisation
/// procedure; callers should switch to the zero-reflection fallback.
class ZeroReflectionError : public Error {
 public:
  ZeroReflectionError(const std::string& what, double magnitude)
      : Error(what), magnitude_(magnitude) {}

  double magnitude() const { return magnitude_; }

 private:
  double magnitude_;
};

}  // namespace qwire
