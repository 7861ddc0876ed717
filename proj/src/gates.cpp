#include "qwire/gates.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qwire/errors.hpp"

namespace qwire {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ArgumentError("cannot parse angle \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

ComplexMatrix hadamard_matrix() {
  return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

ComplexMatrix cnot_matrix() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

BoundaryCondition hadamard_gate(Energy e0) {
  ComplexMatrix a{{1.0 - kInvSqrt2, -kInvSqrt2}, {-kInvSqrt2, 1.0 + kInvSqrt2}};
  ComplexMatrix b{{1.0 + kInvSqrt2, kInvSqrt2}, {kInvSqrt2, 1.0 - kInvSqrt2}};
  a *= 0.5;
  b *= 1.0 / (Complex(0.0, 2.0) * e0.wave_number());
  return {std::move(a), std::move(b)};
}

BoundaryCondition cnot_gate(Energy e0) {
  ComplexMatrix a{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0.5, -0.5}, {0, 0, -0.5, 0.5}};
  ComplexMatrix b{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
  b *= 1.0 / (Complex(0.0, 2.0) * e0.wave_number());
  return {std::move(a), std::move(b)};
}

double robin_angle_for_phase(double chi, Energy e0) {
  if (!std::isfinite(chi)) throw ArgumentError("phase angle must be finite");
  // With z = cos(phi) + i k sin(phi) the phase is pi - 2 arg z, and arg z
  // increases monotonically from 0 to pi as phi runs over [0, pi).
  double chi_wrapped = std::remainder(chi, 2.0 * kPi);  // [-pi, pi]
  if (chi_wrapped <= -kPi) chi_wrapped += 2.0 * kPi;    // (-pi, pi]
  const double target = 0.5 * (kPi - chi_wrapped);      // [0, pi)
  const double k = e0.wave_number();
  auto arg_z = [k](double phi) { return std::atan2(k * std::sin(phi), std::cos(phi)); };

  double lo = 0.0;
  double hi = kPi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (arg_z(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoundaryCondition phase_gate(double chi, Energy e0) {
  const double phi = robin_angle_for_phase(chi, e0);
  return {ComplexMatrix{{std::cos(phi)}}, ComplexMatrix{{std::sin(phi)}}};
}

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  double sign = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.front() == '-') sign = -1.0;
    text.remove_prefix(1);
  }
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return sign * parse_number(text, whole);

  auto coefficient = text.substr(0, pi_pos);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.remove_suffix(1);
  double value = kPi * (coefficient.empty() ? 1.0 : parse_number(coefficient, whole));

  auto rest = text.substr(pi_pos + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw ArgumentError("cannot parse angle \"" + std::string(whole) + "\"");
    }
    const double denominator = parse_number(rest.substr(1), whole);
    if (denominator == 0.0) throw ArgumentError("angle denominator is zero");
    value /= denominator;
  }
  return sign * value;
}

BoundaryCondition gate_by_name(std::string_view name, Energy e0) {
  if (name == "hadamard") return hadamard_gate(e0);
  if (name == "cnot") return cnot_gate(e0);
  constexpr std::string_view kPhasePrefix = "phase:";
  if (name.starts_with(kPhasePrefix)) {
    return phase_gate(parse_angle(name.substr(kPhasePrefix.size())), e0);
  }
  throw ArgumentError("unknown gate \"" + std::string(name) +
                      "\" (expected hadamard, cnot or phase:<angle>)");
}

}  // namespace qwire
