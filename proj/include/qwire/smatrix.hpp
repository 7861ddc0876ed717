#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwire/boundary.hpp"
#include "qwire/energy.hpp"
#include "qwire/matrix.hpp"

namespace qwire {

/// Largest ||S^dagger S - I||_F accepted for a ScatteringMatrix.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Residual up to which design() projects its input onto the unitary group
/// instead of rejecting it.
inline constexpr double kUnitarityRepairLimit = 1e-6;

/// On-shell S-matrix at energy E. Entry (j, k) is the amplitude scattered into
/// channel j by a unit plane wave incoming in channel k.
class ScatteringMatrix {
 public:
  /// Throws ShapeError for non-square input and UnitarityError when the
  /// residual exceeds kUnitarityTolerance.
  ScatteringMatrix(ComplexMatrix s, Energy energy);

  std::size_t n() const { return s_.rows(); }
  const ComplexMatrix& matrix() const { return s_; }
  Energy energy() const { return energy_; }
  Complex operator()(std::size_t j, std::size_t k) const { return s_(j, k); }

 private:
  ComplexMatrix s_;
  Energy energy_;
};

/// S_{A,B}(E) = -(A + i sqrt(E) B)^{-1} (A - i sqrt(E) B).
ScatteringMatrix scatter(const BoundaryCondition& bc, Energy e);

/// Boundary condition realising S at its energy: A' = -(S - I)/2,
/// B' = (S + I)/(2 i sqrt(E0)).
BoundaryCondition design(const ScatteringMatrix& s);

/// Same, for a raw matrix that may carry measurement-grade unitarity error:
/// residuals in (1e-10, 1e-6] are projected to the nearest unitary, larger
/// ones raise UnitarityError.
BoundaryCondition design(const ComplexMatrix& s, Energy e0);

/// Moves a vertex S-matrix from its energy E0 to E without knowing (A, B):
/// S(E) = ((k - k0) S + (k + k0))^{-1} ((k + k0) S + (k - k0)), k = sqrt(E).
ScatteringMatrix propagate(const ScatteringMatrix& s0, Energy e);

/// S_{A,-B}(E), the inverse of S_{A,B}(E).
ScatteringMatrix inverse_smatrix(const BoundaryCondition& bc, Energy e);

/// Diagonal S-matrix of the Robin conditions cos(phi_k) psi_k(0) +
/// sin(phi_k) psi_k'(0) = 0.
ScatteringMatrix robin_smatrix(std::span<const double> phis, Energy e);

/// Robin boundary pair A = diag(cos phi), B = diag(sin phi).
BoundaryCondition robin_boundary_condition(std::span<const double> phis);

struct BlockDecomposition {
  /// Channel sets (0-based), each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t count() const { return blocks.size(); }
};

/// Five energies log-spaced over [E0/4, 4 E0].
std::vector<double> default_block_samples(Energy e0);

inline constexpr double kBlockTolerance = 1e-9;

/// Channels i and j are coupled when |S_ij(E)| > tol at some sample; blocks
/// are the connected components of that relation. Needs at least 3 samples.
BlockDecomposition block_decompose(const BoundaryCondition& bc,
                                   std::span<const double> samples,
                                   double tol = kBlockTolerance);

struct ConsistencyReport {
  double max_residual = 0.0;
  bool consistent = false;
};

inline constexpr double kConsistencyTolerance = 1e-8;

/// Checks that a family of S-matrices at distinct energies comes from a
/// single vertex: propagates the first member to every other energy and
/// reports the largest entrywise deviation.
ConsistencyReport family_consistency(std::span<const ScatteringMatrix> family);

}  // namespace qwire
