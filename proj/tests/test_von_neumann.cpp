#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "qwire/boundary.hpp"
#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"
#include "qwire/smatrix.hpp"
#include "qwire/von_neumann.hpp"
#include "support.hpp"

using qwire::BoundaryCondition;
using qwire::Complex;
using qwire::ComplexMatrix;
using qwire::Energy;
using qwire::ScatteringMatrix;
using qwire::VonNeumannParam;

namespace {

const Complex I{0.0, 1.0};
const Complex kE1 = std::polar(1.0, oracle::kPi / 4.0);  // e^{i pi/4}

// W from (A, B) evaluated with the test-side matrix helpers.
oracle::Mat w_oracle(const BoundaryCondition& bc) {
  const auto a = support::to_mat(bc.a());
  const auto b = support::to_mat(bc.b());
  const Complex e3 = std::polar(1.0, 3.0 * oracle::kPi / 4.0);
  return oracle::scale(oracle::matmul(oracle::inverse(oracle::add(a, b, -kE1)), oracle::add(a, b, e3)), -1.0);
}

}  // namespace

TEST_CASE("VonNeumannParam requires a unitary") {
  CHECK_THROWS_AS(VonNeumannParam(2.0 * ComplexMatrix::identity(2)), qwire::UnitarityError);
  CHECK_THROWS_AS(VonNeumannParam(ComplexMatrix(2, 3)), qwire::ShapeError);
}

TEST_CASE("w_from_bc") {
  const auto d = qwire::w_from_bc(BoundaryCondition::dirichlet(3));
  CHECK(qwire::max_abs_diff(d.matrix(), -ComplexMatrix::identity(3)) <= 1e-15);

  // (0, I): W = -(-e^{i pi/4})^{-1} e^{i 3pi/4} = e^{i pi/2}.
  const auto nm = qwire::w_from_bc(BoundaryCondition::neumann(2));
  CHECK(qwire::max_abs_diff(nm.matrix(), I * ComplexMatrix::identity(2)) <= 1e-15);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto bc = qwire::random_boundary_condition(n, seed);
    const auto w = qwire::w_from_bc(bc);
    CHECK(qwire::unitarity_residual(w.matrix()) <= 1e-10);
    CHECK(support::diff(w.matrix(), w_oracle(bc)) <= 1e-10);
    const auto c = support::from_mat(oracle::ginibre(n, n, seed + 9));
    const auto wc = qwire::w_from_bc({c * bc.a(), c * bc.b()});
    CHECK(qwire::max_abs_diff(wc.matrix(), w.matrix()) <= 1e-10);
  }
}

TEST_CASE("bc_from_w") {
  const auto dir = qwire::bc_from_w(VonNeumannParam(-ComplexMatrix::identity(2)));
  CHECK(qwire::max_abs_diff(dir.a(), Complex{std::sqrt(2.0)} * ComplexMatrix::identity(2)) <= 1e-15);
  CHECK(qwire::max_abs_diff(dir.b(), ComplexMatrix(2, 2)) <= 1e-15);
  CHECK(qwire::equivalent(dir, BoundaryCondition::dirichlet(2)));

  const auto from_id = qwire::bc_from_w(VonNeumannParam(ComplexMatrix::identity(2)));
  CHECK(qwire::max_abs_diff(qwire::w_from_bc(from_id).matrix(), ComplexMatrix::identity(2)) <= 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = qwire::haar_random_unitary(1 + seed % 6, seed);
    const auto bc = qwire::bc_from_w(VonNeumannParam(w));
    CHECK(qwire::validate(bc).valid());
    CHECK(qwire::max_abs_diff(qwire::w_from_bc(bc).matrix(), w) <= 1e-10);
  }
}

TEST_CASE("s_from_w") {
  for (double e : {0.1, 1.0, 30.0}) {
    const auto s = qwire::s_from_w(VonNeumannParam(-ComplexMatrix::identity(2)), Energy{e});
    CHECK(qwire::max_abs_diff(s.matrix(), -ComplexMatrix::identity(2)) <= 1e-14);
  }

  // Scalar W = 1 at E = 1 from the formula, evaluated by hand.
  const Complex em = std::conj(kE1);
  const Complex want = -((-em + 1.0) + (kE1 + 1.0)) / (-(em + 1.0) + (kE1 - 1.0));
  const auto s1 = qwire::s_from_w(VonNeumannParam(ComplexMatrix::identity(1)), Energy{1.0});
  CHECK(std::abs(s1(0, 0) - want) <= 1e-14);
  const auto via_bc = qwire::scatter(qwire::bc_from_w(VonNeumannParam(ComplexMatrix::identity(1))), Energy{1.0});
  CHECK(std::abs(via_bc(0, 0) - want) <= 1e-12);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const VonNeumannParam w(qwire::haar_random_unitary(1 + seed % 5, seed + 100));
    for (double e : {0.5, 1.0, 7.0}) {
      CHECK(qwire::unitarity_residual(qwire::s_from_w(w, Energy{e}).matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("triangle commutes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto bc = qwire::random_boundary_condition(1 + seed % 6, seed + 200);
    const auto w = qwire::w_from_bc(bc);
    for (double e : {0.3, 1.0, 2.0, 10.0}) {
      const auto s = qwire::scatter(bc, Energy{e});
      CHECK(qwire::max_abs_diff(qwire::s_from_w(w, Energy{e}).matrix(), s.matrix()) <= 1e-10);
      CHECK(qwire::max_abs_diff(qwire::w_from_s(s).matrix(), w.matrix()) <= 1e-9);
    }
    CHECK(qwire::equivalent(qwire::bc_from_w(w), bc));
  }
}

TEST_CASE("w_from_s") {
  const auto d = qwire::w_from_s(ScatteringMatrix(-ComplexMatrix::identity(3), Energy{4.0}));
  CHECK(qwire::max_abs_diff(d.matrix(), -ComplexMatrix::identity(3)) <= 1e-14);

  const auto bc = qwire::random_boundary_condition(3, 77);
  const auto w1 = qwire::w_from_s(qwire::scatter(bc, Energy{1.0}));
  const auto w9 = qwire::w_from_s(qwire::scatter(bc, Energy{9.0}));
  CHECK(qwire::max_abs_diff(w1.matrix(), w9.matrix()) <= 1e-9);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ScatteringMatrix s(qwire::haar_random_unitary(1 + seed % 6, seed), Energy{1.0});
    const auto back = qwire::s_from_w(qwire::w_from_s(s), Energy{1.0});
    CHECK(qwire::max_abs_diff(back.matrix(), s.matrix()) <= 1e-10);
  }
}
