#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"
#include "qwire/star_product.hpp"

using qwire::Complex;
using qwire::ComplexMatrix;
using qwire::Energy;
using qwire::U2Params;

namespace {

const Complex I{0.0, 1.0};
const double kPi = oracle::kPi;

U2Params random_params(std::mt19937_64& rng, double max_rho = 1.0) {
  std::uniform_real_distribution<double> rho(0.0, max_rho);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  return {rho(rng), angle(rng), angle(rng), angle(rng)};
}

Complex random_disc_point(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> r(0.0, max_modulus);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  return std::polar(r(rng), angle(rng));
}

}  // namespace

TEST_CASE("u2_from_params") {
  CHECK(qwire::max_abs_diff(qwire::u2_from_params({1.0, 0.0, 0.0, 0.0}), ComplexMatrix::identity(2)) == 0.0);
  const ComplexMatrix anti{{0.0, -1.0}, {1.0, 0.0}};
  CHECK(qwire::max_abs_diff(qwire::u2_from_params({0.0, 0.0, 0.3, 0.0}), anti) <= 1e-16);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_params(rng);
    const auto u = qwire::u2_from_params(p);
    CHECK(qwire::unitarity_residual(u) <= 1e-14);
    const double c = std::sqrt(1.0 - p.rho * p.rho);
    CHECK(std::abs(u(0, 0) - std::exp(I * (p.chi + p.tau)) * p.rho) <= 1e-15);
    CHECK(std::abs(u(0, 1) + std::exp(I * (p.chi - p.kappa)) * c) <= 1e-15);
    CHECK(std::abs(u(1, 0) - std::exp(I * (p.chi + p.kappa)) * c) <= 1e-15);
    CHECK(std::abs(u(1, 1) - std::exp(I * (p.chi - p.tau)) * p.rho) <= 1e-15);
  }
  CHECK_THROWS_AS(qwire::u2_from_params({1.5, 0.0, 0.0, 0.0}), qwire::ArgumentError);
  CHECK_THROWS_AS(qwire::u2_from_params({-0.1, 0.0, 0.0, 0.0}), qwire::ArgumentError);
}

TEST_CASE("AuxInsertion validates its inputs") {
  const auto s0 = qwire::unit_insertion_matrix();
  CHECK_NOTHROW(qwire::AuxInsertion(0, 1.0, s0));
  CHECK_THROWS_AS(qwire::AuxInsertion(0, 0.0, s0), qwire::ArgumentError);
  CHECK_THROWS_AS(qwire::AuxInsertion(0, 1.0, ComplexMatrix::identity(3)), qwire::ShapeError);
  CHECK_THROWS_AS(qwire::AuxInsertion(0, 1.0, 2.0 * s0), qwire::UnitarityError);
}

TEST_CASE("dress_with_line") {
  const Energy e{2.0};
  const double a = 0.7;
  const Complex ph = std::exp(I * e.wave_number() * a);
  const auto u = qwire::dress_with_line(qwire::unit_insertion_matrix(), a, e);
  CHECK(std::abs(u(0, 0)) == 0.0);
  CHECK(std::abs(u(1, 1)) == 0.0);
  CHECK(std::abs(u(0, 1) - ph) <= 1e-15);
  CHECK(std::abs(u(1, 0) - ph) <= 1e-15);

  const auto id = qwire::dress_with_line(ComplexMatrix::identity(2), kPi, Energy{1.0});
  CHECK(qwire::max_abs_diff(id, ComplexMatrix::identity(2)) <= 1e-15);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto s_aux = qwire::u2_from_params(random_params(rng));
    const auto d = qwire::dress_with_line(s_aux, 0.1 + t * 0.05, Energy{1.0 + t});
    CHECK(qwire::unitarity_residual(d) <= 1e-14);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(std::abs(d(r, c)) - std::abs(s_aux(r, c))) <= 1e-15);
    }
    const auto back = qwire::undress_line(d, 0.1 + t * 0.05, Energy{1.0 + t});
    CHECK(qwire::max_abs_diff(back, s_aux) <= 1e-14);
  }
}

TEST_CASE("the unit insertion only shifts phases") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const double a = 0.05 + 0.1 * t;
    const Energy e{0.3 + 0.2 * t};
    const auto u = qwire::dress_with_line(qwire::unit_insertion_matrix(), a, e);
    const Complex sii = random_disc_point(rng, 1.0);
    const Complex sij = random_disc_point(rng, 1.0);
    const Complex ph = std::exp(I * e.wave_number() * a);
    CHECK(std::abs(qwire::insert_reflection(sii, u) - ph * ph * sii) <= 1e-12);
    CHECK(std::abs(qwire::insert_transmission(sij, sii, u) - ph * sij) <= 1e-12);
  }
}

TEST_CASE("closed forms agree with the multiple-reflection series") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto u = qwire::dress_with_line(qwire::u2_from_params(random_params(rng, 0.9)), 1.0, Energy{1.7});
    const Complex sii = random_disc_point(rng, 0.95);
    const Complex sij = random_disc_point(rng, 1.0);
    const Complex want_r = oracle::reflection_series(sii, u(0, 0), u(0, 1), u(1, 0), u(1, 1));
    const Complex want_t = oracle::transmission_series(sij, sii, u(0, 0), u(0, 1));
    CHECK(std::abs(qwire::insert_reflection(sii, u) - want_r) <= 1e-12);
    CHECK(std::abs(qwire::insert_transmission(sij, sii, u) - want_t) <= 1e-12);
  }
}

TEST_CASE("truncated series error bound") {
  const auto u = qwire::u2_from_params({0.8, 0.3, -1.0, 0.4});
  const Complex sii = std::polar(0.9, 1.2);
  const Complex exact = qwire::insert_reflection(sii, u);
  const double q = std::abs(u(0, 0) * sii);
  for (int k = 1; k <= 30; k += 4) {
    const Complex partial = oracle::reflection_series(sii, u(0, 0), u(0, 1), u(1, 0), u(1, 1), k);
    CHECK(std::abs(exact - partial) <= std::pow(q, k + 1) / (1.0 - q) + 1e-15);
  }
}

TEST_CASE("reflection special cases") {
  const auto u = qwire::u2_from_params({0.4, 0.2, 0.7, -0.3});
  CHECK(std::abs(qwire::insert_reflection(0.0, u) - u(1, 1)) == 0.0);
  CHECK(std::abs(qwire::insert_transmission(0.0, std::polar(0.5, 1.0), u)) == 0.0);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto ut = qwire::u2_from_params(random_params(rng, 0.99));
    const Complex lossless = std::polar(1.0, 0.1 * t);
    CHECK(std::abs(std::abs(qwire::insert_reflection(lossless, ut)) - 1.0) <= 1e-10);
    // Entries of a unitary S never leave the unit disc after insertion.
    const auto s = qwire::haar_random_unitary(3, static_cast<std::uint64_t>(t));
    CHECK(std::abs(qwire::insert_reflection(s(0, 0), ut)) <= 1.0 + 1e-10);
    CHECK(std::abs(qwire::insert_transmission(s(0, 1), s(0, 0), ut)) <= 1.0 + 1e-10);
  }
}

TEST_CASE("transmission modulus formula") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_params(rng, 0.95);
    const auto u = qwire::u2_from_params(p);
    const double m = std::uniform_real_distribution<double>(0.05, 0.99)(rng);
    const double phi = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
    const Complex sii = std::polar(m, phi);
    const Complex sij = random_disc_point(rng, 1.0);
    const double want = std::abs(sij) * std::sqrt(1.0 - p.rho * p.rho) /
                        std::abs(std::exp(-I * (phi + p.chi + p.tau)) - m * p.rho);
    CHECK(std::abs(qwire::insert_transmission(sij, sii, u)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("resonance is rejected") {
  // S_ii U_11 = 1 exactly.
  const auto u = ComplexMatrix::identity(2);
  try {
    qwire::insert_reflection(1.0, u);
    FAIL("expected ResonanceError");
  } catch (const qwire::ResonanceError& e) {
    CHECK(e.denominator_modulus() < 1e-12);
  }
  CHECK_THROWS_AS(qwire::insert_transmission(0.0, 1.0, u), qwire::ResonanceError);
}
