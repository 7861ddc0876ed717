#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qwire/matrix.hpp"

namespace qwire {

/// Relative singular-value cutoff used for rank and singularity decisions.
inline constexpr double kRankTolerance = 1e-10;

ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Inverse by LU with partial pivoting. Throws SingularMatrixError (carrying
/// the smallest singular value) when sigma_min <= kRankTolerance * sigma_max.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Solves lhs * X = rhs, same singularity policy as inverse().
ComplexMatrix solve(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Singular values in descending order, min(rows, cols) of them.
/// One-sided Jacobi (Hestenes) on whichever orientation is taller.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Number of singular values above tol * sigma_max.
std::size_t numeric_rank(const ComplexMatrix& m, double tol = kRankTolerance);

/// || M^dagger M - I ||_F
double unitarity_residual(const ComplexMatrix& m);

/// || M - M^dagger ||_F
double hermiticity_residual(const ComplexMatrix& m);

Complex determinant(const ComplexMatrix& m);

/// Unitary polar factor of a square matrix close to unitary (Newton
/// iteration X <- (X + X^{-dagger}) / 2).
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

/// Haar-distributed n x n unitary: Gram-Schmidt QR of a complex Ginibre
/// matrix, columns phase-normalised so diag(R) > 0. Deterministic in seed.
ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace qwire
