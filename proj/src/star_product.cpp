#include "qwire/star_product.hpp"

#include <cmath>
#include <string>

#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"
#include "qwire/smatrix.hpp"

namespace qwire {

namespace {

void require_two_port(const ComplexMatrix& u, const char* op) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ShapeError(std::string(op) + ": expected a 2x2 matrix");
  }
}

void require_unitary_two_port(const ComplexMatrix& u, const char* op) {
  require_two_port(u, op);
  const double residual = unitarity_residual(u);
  if (!(residual <= kUnitarityTolerance)) {
    throw UnitarityError(std::string(op) + ": 2x2 matrix is not unitary (residual " +
                             std::to_string(residual) + ")",
                         residual);
  }
}

Complex cavity_factor(Complex s_ii, const ComplexMatrix& u) {
  const Complex denom = 1.0 - s_ii * u(0, 0);
  if (std::abs(denom) < kResonanceGuard) {
    throw ResonanceError("insertion is resonant: |1 - S_ii U_11| = " +
                             std::to_string(std::abs(denom)),
                         std::abs(denom));
  }
  return 1.0 / denom;
}

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

ComplexMatrix u2_from_params(const U2Params& p) {
  if (!(p.rho >= 0.0 && p.rho <= 1.0)) {
    throw ArgumentError("u2_from_params: rho must lie in [0, 1], got " +
                        std::to_string(p.rho));
  }
  const double t = std::sqrt(1.0 - p.rho * p.rho);
  return {
      {unit_phase(p.chi + p.tau) * p.rho, -unit_phase(p.chi - p.kappa) * t},
      {unit_phase(p.chi + p.kappa) * t, unit_phase(p.chi - p.tau) * p.rho},
  };
}

ComplexMatrix unit_insertion_matrix() { return {{0.0, 1.0}, {1.0, 0.0}}; }

AuxInsertion::AuxInsertion(std::size_t line, double distance, ComplexMatrix s_aux)
    : line_(line), distance_(distance), s_aux_(std::move(s_aux)) {
  if (!std::isfinite(distance) || !(distance > 0.0)) {
    throw ArgumentError("AuxInsertion: distance must be positive");
  }
  require_unitary_two_port(s_aux_, "AuxInsertion");
}

ComplexMatrix dress_with_line(const ComplexMatrix& s_aux, double a, Energy e) {
  require_unitary_two_port(s_aux, "dress_with_line");
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw ArgumentError("dress_with_line: distance must be positive");
  }
  const Complex phase = unit_phase(e.wave_number() * a);
  ComplexMatrix u = s_aux;
  u(0, 0) *= phase * phase;
  u(0, 1) *= phase;
  u(1, 0) *= phase;
  return u;
}

ComplexMatrix undress_line(const ComplexMatrix& u, double a, Energy e) {
  require_two_port(u, "undress_line");
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw ArgumentError("undress_line: distance must be positive");
  }
  const Complex phase = unit_phase(-e.wave_number() * a);
  ComplexMatrix s = u;
  s(0, 0) *= phase * phase;
  s(0, 1) *= phase;
  s(1, 0) *= phase;
  return s;
}

Complex insert_reflection(Complex s_ii, const ComplexMatrix& u) {
  require_two_port(u, "insert_reflection");
  return u(1, 1) + u(1, 0) * s_ii * cavity_factor(s_ii, u) * u(0, 1);
}

Complex insert_transmission(Complex s_ij, Complex s_ii, const ComplexMatrix& u) {
  require_two_port(u, "insert_transmission");
  return s_ij * cavity_factor(s_ii, u) * u(0, 1);
}

}  // namespace qwire
