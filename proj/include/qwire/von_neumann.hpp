#pragma once

#include "qwire/boundary.hpp"
#include "qwire/energy.hpp"
#include "qwire/matrix.hpp"
#include "qwire/smatrix.hpp"

namespace qwire {

/// Unitary W representing the isometry between the deficiency subspaces
/// Ker(-Delta0^dagger - i) and Ker(-Delta0^dagger + i) in the bases
///   (u_j)_k = delta_jk 2^{1/4} exp((-1 + i) x / sqrt 2),
///   (v_j)_k = delta_jk 2^{1/4} exp((-1 - i) x / sqrt 2).
/// W = -I is the Dirichlet vertex.
class VonNeumannParam {
 public:
  /// Throws UnitarityError unless ||W^dagger W - I||_F <= 1e-10.
  explicit VonNeumannParam(ComplexMatrix w);

  std::size_t n() const { return w_.rows(); }
  const ComplexMatrix& matrix() const { return w_; }

 private:
  ComplexMatrix w_;
};

/// W = -(A - e^{i pi/4} B)^{-1} (A + e^{i 3pi/4} B).
VonNeumannParam w_from_bc(const BoundaryCondition& bc);

/// A' = -e^{-i pi/4} W + e^{i pi/4} I,  B' = i (W + I).
BoundaryCondition bc_from_w(const VonNeumannParam& w);

/// S(E) = -(-(e^{-i pi/4} + k) W + (e^{i pi/4} - k) I)^{-1}
///          ((-e^{-i pi/4} + k) W + (e^{i pi/4} + k) I),   k = sqrt(E).
ScatteringMatrix s_from_w(const VonNeumannParam& w, Energy e);

/// W = ((e^{i pi/4} - k) S + (e^{i pi/4} + k) I)
///     ((e^{-i pi/4} + k) S + (e^{-i pi/4} - k) I)^{-1}.
/// For an S-matrix that comes from a vertex the result does not depend on E.
VonNeumannParam w_from_s(const ScatteringMatrix& s);

}  // namespace qwire
