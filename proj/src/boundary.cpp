#include "qwire/boundary.hpp"

#include <algorithm>
#include <string>

#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"
#include "qwire/smatrix.hpp"

namespace qwire {

BoundaryCondition::BoundaryCondition(ComplexMatrix a, ComplexMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows()) {
    throw ShapeError("BoundaryCondition: A and B must be square of equal size, got " +
                     std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()) +
                     " and " + std::to_string(b_.rows()) + "x" +
                     std::to_string(b_.cols()));
  }
}

BoundaryCondition BoundaryCondition::dirichlet(std::size_t n) {
  return {ComplexMatrix::identity(n), ComplexMatrix(n, n)};
}

BoundaryCondition BoundaryCondition::neumann(std::size_t n) {
  return {ComplexMatrix(n, n), ComplexMatrix::identity(n)};
}

ValidationReport validate(const BoundaryCondition& bc) {
  ValidationReport report;
  report.rank_required = bc.n();
  report.rank_found = numeric_rank(hconcat(bc.a(), bc.b()));
  report.rank_ok = report.rank_found == bc.n();

  const ComplexMatrix ab = bc.a() * bc.b().adjoint();
  report.hermiticity_residual = hermiticity_residual(ab);
  report.hermiticity_ok = report.hermiticity_residual <=
                          kHermiticityTolerance * (1.0 + frobenius_norm(ab));
  return report;
}

void require_valid(const BoundaryCondition& bc) {
  const auto report = validate(bc);
  if (!report.rank_ok) {
    throw ValidationError("boundary condition: rank " +
                          std::to_string(report.rank_found) + " of " +
                          std::to_string(report.rank_required) + " required");
  }
  if (!report.hermiticity_ok) {
    throw ValidationError(
        "boundary condition: A B^dagger is not self-adjoint (residual " +
        std::to_string(report.hermiticity_residual) + ")");
  }
}

BoundaryCondition canonicalize(const BoundaryCondition& bc, Energy e0) {
  require_valid(bc);
  return design(scatter(bc, e0));
}

bool equivalent(const BoundaryCondition& lhs, const BoundaryCondition& rhs) {
  if (lhs.n() != rhs.n()) {
    throw ShapeError("equivalent: channel counts differ");
  }
  const Energy e0{kEquivalenceEnergy};
  const auto l = canonicalize(lhs, e0);
  const auto r = canonicalize(rhs, e0);
  constexpr double kTol = 1e-10;
  return max_abs_diff(l.a(), r.a()) <= kTol &&
         max_abs_diff(l.b(), r.b()) <= kTol;
}

BoundaryCondition random_boundary_condition(std::size_t n, std::uint64_t seed) {
  return design(ScatteringMatrix(haar_random_unitary(n, seed), Energy{1.0}));
}

}  // namespace qwire
