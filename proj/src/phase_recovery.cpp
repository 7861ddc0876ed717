#include "qwire/phase_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qwire/errors.hpp"
#include "qwire/linalg.hpp"

namespace qwire {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double wrap_angle(double angle) {
  angle = std::remainder(angle, 2.0 * kPi);
  if (angle <= -kPi) angle += 2.0 * kPi;
  return angle;
}

std::vector<Complex> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Complex> v(n);
  v[k] = 1.0;
  return v;
}

std::vector<Complex> pair_vector(std::size_t n, std::size_t j, std::size_t k,
                                 Complex weight_k) {
  std::vector<Complex> v(n);
  v[j] = 1.0;
  v[k] += weight_k;
  return v;
}

// x from |x|, |x + s|, |x + i s| with s known and non-zero.
Complex law_of_cosines(double abs_x, double abs_x_plus_s, double abs_x_plus_is,
                       Complex s) {
  const double base = abs_x * abs_x + std::norm(s);
  const Complex x_conj_s(0.5 * (abs_x_plus_s * abs_x_plus_s - base),
                         0.5 * (abs_x_plus_is * abs_x_plus_is - base));
  return x_conj_s * s / std::norm(s);
}

// Auxiliary insertion on `line` whose dressed matrix equals u.
AuxInsertion insertion_for(const ComplexMatrix& u, std::size_t line, Energy e) {
  return AuxInsertion(line, kAuxDistance, undress_line(u, kAuxDistance, e));
}

}  // namespace

AmplitudeOracle::AmplitudeOracle(ScatteringMatrix hidden)
    : hidden_(std::move(hidden)) {}

void AmplitudeOracle::check_channel(std::size_t c) const {
  if (c >= n()) {
    throw ArgumentError("AmplitudeOracle: channel " + std::to_string(c) +
                        " out of range for n = " + std::to_string(n()));
  }
}

double AmplitudeOracle::magnitude(std::size_t out,
                                  std::span<const Complex> lambdas) {
  check_channel(out);
  if (lambdas.size() != n()) {
    throw ShapeError("AmplitudeOracle: expected " + std::to_string(n()) +
                     " amplitudes");
  }
  ++calls_;
  Complex sum{};
  for (std::size_t k = 0; k < n(); ++k) sum += lambdas[k] * hidden_(out, k);
  return std::abs(sum);
}

Complex AmplitudeOracle::inserted_entry(const AuxInsertion& ins,
                                        std::size_t in) const {
  const auto i = ins.line();
  const ComplexMatrix u =
      dress_with_line(ins.s_aux(), ins.distance(), hidden_.energy());
  if (in == i) return insert_reflection(hidden_(i, i), u);
  return insert_transmission(hidden_(i, in), hidden_(i, i), u);
}

double AmplitudeOracle::inserted_magnitude(const AuxInsertion& ins,
                                           std::size_t out, std::size_t in) {
  check_channel(ins.line());
  check_channel(out);
  check_channel(in);
  if (out != ins.line()) {
    throw ArgumentError(
        "AmplitudeOracle: inserted measurements are available only for the "
        "outgoing channel of the modified line");
  }
  ++calls_;
  return std::abs(inserted_entry(ins, in));
}

double AmplitudeOracle::inserted_magnitude(const AuxInsertion& ins,
                                           std::span<const Complex> lambdas) {
  check_channel(ins.line());
  if (lambdas.size() != n()) {
    throw ShapeError("AmplitudeOracle: expected " + std::to_string(n()) +
                     " amplitudes");
  }
  ++calls_;
  Complex sum{};
  for (std::size_t k = 0; k < n(); ++k) {
    if (lambdas[k] != Complex{}) sum += lambdas[k] * inserted_entry(ins, k);
  }
  return std::abs(sum);
}

double measure_magnitude(AmplitudeOracle& oracle, std::size_t j,
                         std::span<const Complex> lambdas) {
  return oracle.magnitude(j, lambdas);
}

double measure_inserted(AmplitudeOracle& oracle, const AuxInsertion& ins,
                        std::size_t j, std::size_t k) {
  return oracle.inserted_magnitude(ins, j, k);
}

std::string_view to_string(RecoveryMethod method) {
  switch (method) {
    case RecoveryMethod::direct:
      return "direct";
    case RecoveryMethod::reflection_max:
      return "reflection-max";
    case RecoveryMethod::superposition:
      return "superposition";
    case RecoveryMethod::zero_reflection_fallback:
      return "zero-reflection-fallback";
    case RecoveryMethod::unobservable:
      return "unobservable";
  }
  return "unknown";
}

double choose_probe_rho(double reflection_modulus) {
  const double m = reflection_modulus;
  if (!(m > 0.0)) throw ArgumentError("choose_probe_rho: modulus must be positive");
  double rho = std::min(0.1, m / 4.0);
  while (!(2.0 * rho * rho * m < m - rho)) rho *= 0.5;
  return rho;
}

ReflectionPhase recover_reflection_phase(AmplitudeOracle& oracle, std::size_t i) {
  const auto n = oracle.n();
  const double modulus = oracle.magnitude(i, unit_vector(n, i));
  if (modulus <= kZeroReflectionThreshold) {
    throw ZeroReflectionError(
        "reflection amplitude too small for phase maximisation; use the "
        "zero-reflection fallback",
        modulus);
  }

  ReflectionPhase out;
  out.rho = choose_probe_rho(modulus);
  const Energy e = oracle.energy();
  auto objective = [&](double chi_plus_tau) {
    const auto u = u2_from_params({out.rho, 0.0, chi_plus_tau, 0.0});
    return oracle.inserted_magnitude(insertion_for(u, i, e), i, i);
  };

  const double step = 2.0 * kPi / static_cast<double>(kPhaseGridSize);
  std::size_t best = 0;
  double best_value = -1.0;
  double worst_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kPhaseGridSize; ++k) {
    const double value = objective(step * static_cast<double>(k));
    if (value > best_value) {
      best_value = value;
      best = k;
    }
    worst_value = std::min(worst_value, value);
  }
  out.grid_maximizer = step * static_cast<double>(best);

  if (best_value - worst_value <= kFlatObjectiveTolerance * best_value) {
    // |S_ii| = 1: the composite one-port is lossless whatever the phase.
    out.observable = false;
    out.maximizer = out.grid_maximizer;
    out.phase = 0.0;
    return out;
  }

  // Golden section on the bracket around the grid maximum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = out.grid_maximizer - step;
  double hi = out.grid_maximizer + step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > kGoldenSectionTolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  double maximizer = 0.5 * (lo + hi);

  // The objective depends on cos(phi + chi + tau) only, so it is mirror
  // symmetric about the maximiser. Bisect on f(m + pi/2) - f(m - pi/2), which
  // is steep there, to get past the flat-top resolution of golden section.
  auto asymmetry = [&](double m) {
    return objective(m + kPi / 2.0) - objective(m - kPi / 2.0);
  };
  double left = maximizer - step;
  double right = maximizer + step;
  if (asymmetry(left) > 0.0 && asymmetry(right) < 0.0) {
    for (int iter = 0; iter < 80 && right - left > 1e-15; ++iter) {
      const double mid = 0.5 * (left + right);
      const double value = asymmetry(mid);
      if (value > 0.0) {
        left = mid;
      } else if (value < 0.0) {
        right = mid;
      } else {
        left = right = mid;
      }
    }
    maximizer = 0.5 * (left + right);
  }

  out.maximizer = wrap_angle(maximizer);
  out.phase = wrap_angle(kPi - maximizer);
  return out;
}

Complex recover_transmission_phase(AmplitudeOracle& oracle, std::size_t i,
                                   std::size_t j, Complex s_ii) {
  const auto n = oracle.n();
  if (i == j) throw ArgumentError("recover_transmission_phase: need i != j");
  if (std::abs(s_ii) <= kZeroReflectionThreshold) {
    throw ZeroReflectionError(
        "S_ii vanishes; transmission phase needs the zero-reflection fallback",
        std::abs(s_ii));
  }
  const double abs_x = oracle.magnitude(i, unit_vector(n, j));
  const double abs_sum = oracle.magnitude(i, pair_vector(n, j, i, 1.0));
  const double abs_isum = oracle.magnitude(i, pair_vector(n, j, i, kI));
  return law_of_cosines(abs_x, abs_sum, abs_isum, s_ii);
}

FallbackRecovery recover_with_fallback(AmplitudeOracle& oracle, std::size_t i,
                                       std::size_t j) {
  const auto n = oracle.n();
  if (i == j) throw ArgumentError("recover_with_fallback: need i != j");
  const Energy e = oracle.energy();
  const auto u = u2_from_params({kFallbackRho, 0.0, 0.0, 0.0});
  const auto ins = insertion_for(u, i, e);

  // With S_ii = 0 the new reflection is exactly U'_22.
  const Complex known_reflection = u(1, 1);
  const double abs_x = oracle.inserted_magnitude(ins, pair_vector(n, j, i, 0.0));
  const double abs_sum = oracle.inserted_magnitude(ins, pair_vector(n, j, i, 1.0));
  const double abs_isum = oracle.inserted_magnitude(ins, pair_vector(n, j, i, kI));
  const Complex inserted = law_of_cosines(abs_x, abs_sum, abs_isum, known_reflection);

  // S'_ij = S_ij U'_12 and U'_12 = e^{i sqrt(E) a'} S_aux'_12.
  FallbackRecovery out;
  out.uncompensated = inserted / ins.s_aux()(0, 1);
  out.value = out.uncompensated *
              std::polar(1.0, -e.wave_number() * ins.distance());
  return out;
}

PhaseRecoveryReport recover_full(AmplitudeOracle& oracle) {
  const auto n = oracle.n();
  const auto calls_before = oracle.call_count();
  PhaseRecoveryReport report{ComplexMatrix(n, n), oracle.energy(), 0,
                             std::vector<RecoveryMethod>(n * n), 0.0,
                             std::nullopt};
  auto& s = report.recovered;
  auto method = [&](std::size_t r, std::size_t c) -> RecoveryMethod& {
    return report.methods[r * n + c];
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double modulus = oracle.magnitude(i, unit_vector(n, i));
    if (modulus <= kZeroReflectionThreshold) {
      s(i, i) = 0.0;
      method(i, i) = RecoveryMethod::direct;
      continue;
    }
    const auto phase = recover_reflection_phase(oracle, i);
    s(i, i) = std::polar(modulus, phase.phase);
    method(i, i) = phase.observable ? RecoveryMethod::reflection_max
                                    : RecoveryMethod::unobservable;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double modulus = oracle.magnitude(i, unit_vector(n, j));
      if (modulus <= kZeroTransmissionThreshold) {
        s(i, j) = 0.0;
        method(i, j) = RecoveryMethod::direct;
      } else if (std::abs(s(i, i)) > kZeroReflectionThreshold) {
        s(i, j) = recover_transmission_phase(oracle, i, j, s(i, i));
        method(i, j) = RecoveryMethod::superposition;
      } else {
        s(i, j) = recover_with_fallback(oracle, i, j).value;
        method(i, j) = RecoveryMethod::zero_reflection_fallback;
      }
    }
  }

  report.oracle_calls = oracle.call_count() - calls_before;
  report.unitarity_residual = unitarity_residual(s);
  return report;
}

double score_against(PhaseRecoveryReport& report, const ScatteringMatrix& truth) {
  report.max_entry_error = max_abs_diff(report.recovered, truth.matrix());
  return *report.max_entry_error;
}

std::vector<double> raw_magnitude_table(AmplitudeOracle& oracle) {
  const auto n = oracle.n();
  std::vector<double> table;
  for (std::size_t out = 0; out < n; ++out) {
    for (std::size_t j = 0; j < n; ++j) {
      table.push_back(oracle.magnitude(out, unit_vector(n, j)));
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        table.push_back(oracle.magnitude(out, pair_vector(n, j, k, 1.0)));
        table.push_back(oracle.magnitude(out, pair_vector(n, j, k, kI)));
      }
    }
  }
  return table;
}

}  // namespace qwire
