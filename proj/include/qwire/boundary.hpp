#pragma once

#include <cstddef>
#include <cstdint>

#include "qwire/energy.hpp"
#include "qwire/matrix.hpp"

namespace qwire {

/// Vertex boundary condition A psi(0) + B psi'(0) = 0 on n half-lines.
///
/// The pair defines a self-adjoint Laplacian iff the n x 2n matrix (A, B) has
/// rank n and A B^dagger is self-adjoint. Pairs related by (A', B') =
/// (C A, C B) with C invertible describe the same vertex; see equivalent().
class BoundaryCondition {
 public:
  /// Throws ShapeError unless a and b are square of the same size.
  BoundaryCondition(ComplexMatrix a, ComplexMatrix b);

  std::size_t n() const { return a_.rows(); }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }

  static BoundaryCondition dirichlet(std::size_t n);
  static BoundaryCondition neumann(std::size_t n);

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
};

struct ValidationReport {
  bool rank_ok = false;
  bool hermiticity_ok = false;
  std::size_t rank_found = 0;
  std::size_t rank_required = 0;
  double hermiticity_residual = 0.0;

  bool valid() const { return rank_ok && hermiticity_ok; }
};

/// Relative tolerance of the A B^dagger self-adjointness test, scaled by
/// (1 + ||A B^dagger||_F).
inline constexpr double kHermiticityTolerance = 1e-10;

ValidationReport validate(const BoundaryCondition& bc);

/// Throws ValidationError describing the failing condition.
void require_valid(const BoundaryCondition& bc);

/// The unique representative with A' + i sqrt(E0) B' = I, namely
/// A' = -(S - I) / 2 and B' = (S + I) / (2 i sqrt(E0)) for S = S_{A,B}(E0).
BoundaryCondition canonicalize(const BoundaryCondition& bc, Energy e0);

/// Energy at which canonical forms are compared by equivalent().
inline constexpr double kEquivalenceEnergy = 1.0;

/// Same self-adjoint extension: canonical forms at E0 = 1 agree to 1e-10.
bool equivalent(const BoundaryCondition& lhs, const BoundaryCondition& rhs);

/// design(haar_random_unitary(n, seed) at E0 = 1).
BoundaryCondition random_boundary_condition(std::size_t n, std::uint64_t seed);

}  // namespace qwire
