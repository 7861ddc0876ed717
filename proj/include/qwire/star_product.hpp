#pragma once

#include <cstddef>

#include "qwire/energy.hpp"
#include "qwire/matrix.hpp"

namespace qwire {

/// Coordinates on U(2):
///   U = [[ e^{i(chi+tau)} rho,           -e^{i(chi-kappa)} sqrt(1-rho^2) ],
///        [ e^{i(chi+kappa)} sqrt(1-rho^2),  e^{i(chi-tau)} rho           ]]
struct U2Params {
  double rho = 0.0;
  double chi = 0.0;
  double tau = 0.0;
  double kappa = 0.0;
};

ComplexMatrix u2_from_params(const U2Params& p);

/// S_0 = [[0, 1], [1, 0]]: inserting it changes nothing but the line length.
ComplexMatrix unit_insertion_matrix();

/// Auxiliary two-port vertex placed on external line `line` at distance
/// `distance` from the original vertex. Port 1 of s_aux faces the original
/// vertex, port 2 is the new external end.
class AuxInsertion {
 public:
  /// Throws ArgumentError for distance <= 0, ShapeError for a non-2x2 matrix
  /// and UnitarityError if s_aux is not unitary to 1e-10.
  AuxInsertion(std::size_t line, double distance, ComplexMatrix s_aux);

  std::size_t line() const { return line_; }
  double distance() const { return distance_; }
  const ComplexMatrix& s_aux() const { return s_aux_; }

 private:
  std::size_t line_;
  double distance_;
  ComplexMatrix s_aux_;
};

/// U = D S_aux D with D = diag(e^{i sqrt(E) a}, 1): the auxiliary S-matrix
/// seen from the original vertex through a line of length a.
ComplexMatrix dress_with_line(const ComplexMatrix& s_aux, double a, Energy e);

/// Inverse of dress_with_line: the S_aux whose dressed matrix is u.
ComplexMatrix undress_line(const ComplexMatrix& u, double a, Energy e);

/// |1 - S_ii U_11| below this is treated as a resonance.
inline constexpr double kResonanceGuard = 1e-12;

/// S^new_ii = U_22 + U_21 S_ii (1 - S_ii U_11)^{-1} U_12.
Complex insert_reflection(Complex s_ii, const ComplexMatrix& u);

/// S^new_ij = S_ij (1 - S_ii U_11)^{-1} U_12, i != j.
Complex insert_transmission(Complex s_ij, Complex s_ii, const ComplexMatrix& u);

}  // namespace qwire
