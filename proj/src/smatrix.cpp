#include "qwire/smatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"

namespace qwire {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix scaled_identity(std::size_t n, Complex value) {
  return value * ComplexMatrix::identity(n);
}

}  // namespace

ScatteringMatrix::ScatteringMatrix(ComplexMatrix s, Energy energy)
    : s_(std::move(s)), energy_(energy) {
  if (!s_.is_square()) {
    throw ShapeError("ScatteringMatrix: matrix must be square");
  }
  const double residual = unitarity_residual(s_);
  if (!(residual <= kUnitarityTolerance)) {
    throw UnitarityError(
        "ScatteringMatrix: not unitary (residual " + std::to_string(residual) + ")",
        residual);
  }
}

ScatteringMatrix scatter(const BoundaryCondition& bc, Energy e) {
  const Complex ik = kI * e.wave_number();
  const ComplexMatrix plus = bc.a() + ik * bc.b();
  const ComplexMatrix minus = bc.a() - ik * bc.b();
  return ScatteringMatrix(-solve(plus, minus), e);
}

BoundaryCondition design(const ScatteringMatrix& s) {
  const auto n = s.n();
  const auto& m = s.matrix();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  ComplexMatrix a = -0.5 * (m - id);
  ComplexMatrix b = (1.0 / (2.0 * kI * s.energy().wave_number())) * (m + id);
  return {std::move(a), std::move(b)};
}

BoundaryCondition design(const ComplexMatrix& s, Energy e0) {
  if (!s.is_square()) throw ShapeError("design: matrix must be square");
  const double residual = unitarity_residual(s);
  if (residual <= kUnitarityTolerance) return design(ScatteringMatrix(s, e0));
  if (residual <= kUnitarityRepairLimit) {
    return design(ScatteringMatrix(nearest_unitary(s), e0));
  }
  throw UnitarityError(
      "design: input is not unitary (residual " + std::to_string(residual) + ")",
      residual);
}

ScatteringMatrix propagate(const ScatteringMatrix& s0, Energy e) {
  const double k = e.wave_number();
  const double k0 = s0.energy().wave_number();
  const auto n = s0.n();
  const auto& s = s0.matrix();
  const ComplexMatrix lhs = (k - k0) * s + scaled_identity(n, k + k0);
  const ComplexMatrix rhs = (k + k0) * s + scaled_identity(n, k - k0);
  return ScatteringMatrix(solve(lhs, rhs), e);
}

ScatteringMatrix inverse_smatrix(const BoundaryCondition& bc, Energy e) {
  return scatter(BoundaryCondition(bc.a(), -bc.b()), e);
}

ScatteringMatrix robin_smatrix(std::span<const double> phis, Energy e) {
  if (phis.empty()) throw ArgumentError("robin_smatrix: no channels");
  const double k = e.wave_number();
  std::vector<Complex> diag(phis.size());
  std::transform(phis.begin(), phis.end(), diag.begin(), [k](double phi) {
    const Complex num(std::cos(phi), -k * std::sin(phi));
    const Complex den(std::cos(phi), k * std::sin(phi));
    return -num / den;
  });
  return ScatteringMatrix(ComplexMatrix::diagonal(diag), e);
}

BoundaryCondition robin_boundary_condition(std::span<const double> phis) {
  if (phis.empty()) throw ArgumentError("robin_boundary_condition: no channels");
  std::vector<Complex> cosines(phis.size());
  std::vector<Complex> sines(phis.size());
  for (std::size_t k = 0; k < phis.size(); ++k) {
    cosines[k] = std::cos(phis[k]);
    sines[k] = std::sin(phis[k]);
  }
  return {ComplexMatrix::diagonal(cosines), ComplexMatrix::diagonal(sines)};
}

std::vector<double> default_block_samples(Energy e0) {
  constexpr int kCount = 5;
  const double lo = std::log(e0.value() / 4.0);
  const double hi = std::log(e0.value() * 4.0);
  std::vector<double> samples(kCount);
  for (int i = 0; i < kCount; ++i) {
    samples[i] = std::exp(lo + (hi - lo) * i / (kCount - 1));
  }
  return samples;
}

BlockDecomposition block_decompose(const BoundaryCondition& bc,
                                   std::span<const double> samples, double tol) {
  if (samples.size() < 3) {
    throw ArgumentError("block_decompose: need at least 3 sample energies, got " +
                        std::to_string(samples.size()));
  }
  const auto n = bc.n();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (double energy : samples) {
    const auto s = scatter(bc, Energy{energy});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && std::abs(s(i, j)) > tol) {
          const auto ri = find(i);
          const auto rj = find(j);
          if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
      }
    }
  }

  BlockDecomposition out;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return out;
}

ConsistencyReport family_consistency(std::span<const ScatteringMatrix> family) {
  if (family.size() < 2) {
    throw ArgumentError("family_consistency: need at least two S-matrices");
  }
  const auto& anchor = family.front();
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (family[a].n() != anchor.n()) {
      throw ShapeError("family_consistency: channel counts differ");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (family[a].energy() == family[b].energy()) {
        throw ArgumentError("family_consistency: energies must be distinct");
      }
    }
  }
  ConsistencyReport report;
  for (std::size_t idx = 1; idx < family.size(); ++idx) {
    const auto predicted = propagate(anchor, family[idx].energy());
    report.max_residual = std::max(
        report.max_residual, max_abs_diff(predicted.matrix(), family[idx].matrix()));
  }
  report.consistent = report.max_residual <= kConsistencyTolerance;
  return report;
}

}  // namespace qwire
