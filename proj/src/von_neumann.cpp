#include "qwire/von_neumann.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"

namespace qwire {

namespace {

const Complex kEighth = std::polar(1.0, std::numbers::pi / 4.0);        // e^{i pi/4}
const Complex kEighthConj = std::polar(1.0, -std::numbers::pi / 4.0);   // e^{-i pi/4}
const Complex kThreeEighths = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
constexpr Complex kI{0.0, 1.0};

// alpha * M + beta * I
ComplexMatrix affine(const ComplexMatrix& m, Complex alpha, Complex beta) {
  ComplexMatrix out = alpha * m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += beta;
  return out;
}

}  // namespace

VonNeumannParam::VonNeumannParam(ComplexMatrix w) : w_(std::move(w)) {
  if (!w_.is_square()) throw ShapeError("VonNeumannParam: W must be square");
  const double residual = unitarity_residual(w_);
  if (!(residual <= kUnitarityTolerance)) {
    throw UnitarityError(
        "VonNeumannParam: W is not unitary (residual " + std::to_string(residual) + ")",
        residual);
  }
}

VonNeumannParam w_from_bc(const BoundaryCondition& bc) {
  const ComplexMatrix lhs = bc.a() - kEighth * bc.b();
  const ComplexMatrix rhs = bc.a() + kThreeEighths * bc.b();
  return VonNeumannParam(-solve(lhs, rhs));
}

BoundaryCondition bc_from_w(const VonNeumannParam& w) {
  return {affine(w.matrix(), -kEighthConj, kEighth),
          affine(w.matrix(), kI, kI)};
}

ScatteringMatrix s_from_w(const VonNeumannParam& w, Energy e) {
  const double k = e.wave_number();
  const ComplexMatrix lhs = affine(w.matrix(), -(kEighthConj + k), kEighth - k);
  const ComplexMatrix rhs = affine(w.matrix(), -kEighthConj + k, kEighth + k);
  return ScatteringMatrix(-solve(lhs, rhs), e);
}

VonNeumannParam w_from_s(const ScatteringMatrix& s) {
  const double k = s.energy().wave_number();
  const ComplexMatrix left = affine(s.matrix(), kEighth - k, kEighth + k);
  const ComplexMatrix right = affine(s.matrix(), kEighthConj + k, kEighthConj - k);
  // left * right^{-1} = (right^dagger^{-1} left^dagger)^dagger
  return VonNeumannParam(solve(right.adjoint(), left.adjoint()).adjoint());
}

}  // namespace qwire
