#pragma once

#include <cmath>
#include <string>

#include "qwire/errors.hpp"

namespace qwire {

/// Strictly positive scattering energy in units where hbar = 2m* = 1, so the
/// wave number is sqrt(E) (always the positive root).
class Energy {
 public:
  explicit Energy(double value) : value_(value) {
    if (!std::isfinite(value) || !(value > 0.0)) {
      throw ArgumentError("energy must be a finite positive number, got " +
                          std::to_string(value));
    }
  }

  double value() const { return value_; }
  double wave_number() const { return std::sqrt(value_); }

  bool operator==(const Energy&) const = default;

 private:
  double value_;
};

}  // namespace qwire
