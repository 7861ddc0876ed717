#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwire/matrix.hpp"
#include "qwire/smatrix.hpp"
#include "qwire/star_product.hpp"

namespace qwire {

/// Simulated fixed-energy scattering experiment around a hidden S-matrix.
///
/// Every public query returns a non-negative magnitude; there is no accessor
/// for the hidden matrix or for any phase. Each query bumps call_count().
/// Not thread-safe: one instance per thread.
class AmplitudeOracle {
 public:
  explicit AmplitudeOracle(ScatteringMatrix hidden);

  std::size_t n() const { return hidden_.n(); }
  Energy energy() const { return hidden_.energy(); }
  std::size_t call_count() const { return calls_; }

  /// |sum_k lambdas_k S_{out,k}|: outgoing amplitude in channel `out` for
  /// the incoming superposition lambdas.
  double magnitude(std::size_t out, std::span<const Complex> lambdas);

  /// |S^new_{out,in}| after inserting `ins`. Only the row of the modified
  /// line has closed-form entries, so out must equal ins.line().
  double inserted_magnitude(const AuxInsertion& ins, std::size_t out,
                            std::size_t in);

  /// |sum_k lambdas_k S^new_{line,k}| after inserting `ins`.
  double inserted_magnitude(const AuxInsertion& ins,
                            std::span<const Complex> lambdas);

 private:
  Complex inserted_entry(const AuxInsertion& ins, std::size_t in) const;
  void check_channel(std::size_t c) const;

  ScatteringMatrix hidden_;
  std::size_t calls_ = 0;
};

double measure_magnitude(AmplitudeOracle& oracle, std::size_t j,
                         std::span<const Complex> lambdas);

double measure_inserted(AmplitudeOracle& oracle, const AuxInsertion& ins,
                        std::size_t j, std::size_t k);

enum class RecoveryMethod {
  direct,                    // magnitude alone fixes the entry (zero)
  reflection_max,            // maximise |S^new_ii| over the auxiliary phase
  superposition,             // three superposition probes against known S_ii
  zero_reflection_fallback,  // S_ii = 0: probe through an inserted vertex
  unobservable,              // |S_ii| = 1: reflection phase is not measurable
};

std::string_view to_string(RecoveryMethod method);

/// Reflection amplitudes at or below this are treated as zero.
inline constexpr double kZeroReflectionThreshold = 1e-8;
/// Off-diagonal magnitudes at or below this are recorded as exact zeros.
inline constexpr double kZeroTransmissionThreshold = 1e-12;
inline constexpr std::size_t kPhaseGridSize = 256;
inline constexpr double kGoldenSectionTolerance = 1e-8;
/// Relative spread of |S^new_ii| over the grid below which the objective is
/// considered flat.
inline constexpr double kFlatObjectiveTolerance = 1e-10;
/// Auxiliary line length used by every probe.
inline constexpr double kAuxDistance = 1.0;
/// rho' of the auxiliary vertex used by the zero-reflection fallback.
inline constexpr double kFallbackRho = 0.5;

/// rho = min(0.1, |S_ii|/4), halved until 2 rho^2 |S_ii| < |S_ii| - rho.
double choose_probe_rho(double reflection_modulus);

struct ReflectionPhase {
  double phase = 0.0;           // phi with S_ii = e^{i phi} |S_ii|, in (-pi, pi]
  double rho = 0.0;             // auxiliary rho used for the scan
  double grid_maximizer = 0.0;  // chi + tau of the best grid point
  double maximizer = 0.0;       // refined chi + tau
  bool observable = true;       // false when |S^new_ii| is flat in chi + tau
};

/// Scans chi + tau of an auxiliary vertex on line i (rho fixed, chi =
/// kappa = 0), maximises |S^new_ii| on a 256-point grid, refines by golden
/// section and then by locating the symmetry axis of the objective. At the
/// maximum e^{i(phi + chi + tau)} = -1. Throws ZeroReflectionError when
/// |S_ii| <= kZeroReflectionThreshold.
ReflectionPhase recover_reflection_phase(AmplitudeOracle& oracle, std::size_t i);

/// S_ij from |S_ij|, |S_ij + S_ii| and |S_ij + i S_ii| with S_ii known.
Complex recover_transmission_phase(AmplitudeOracle& oracle, std::size_t i,
                                   std::size_t j, Complex s_ii);

struct FallbackRecovery {
  Complex value;          // S_ij
  Complex uncompensated;  // e^{i sqrt(E) a'} S_ij, before the origin shift
};

/// Recovers S_ij when S_ii vanishes by inserting a vertex with rho' > 0 on
/// line i, whose reflection S'_ii = U'_22 is known and non-zero.
FallbackRecovery recover_with_fallback(AmplitudeOracle& oracle, std::size_t i,
                                       std::size_t j);

struct PhaseRecoveryReport {
  ComplexMatrix recovered;
  Energy energy;
  std::size_t oracle_calls = 0;
  /// Row-major n x n.
  std::vector<RecoveryMethod> methods;
  double unitarity_residual = 0.0;
  /// Only set by callers that know the hidden matrix (tests, CLI demo).
  std::optional<double> max_entry_error;

  RecoveryMethod method(std::size_t i, std::size_t j) const {
    return methods[i * recovered.cols() + j];
  }
};

/// Reconstructs every complex entry of the hidden S-matrix at its energy.
PhaseRecoveryReport recover_full(AmplitudeOracle& oracle);

/// Sets report.max_entry_error against the known truth and returns it.
double score_against(PhaseRecoveryReport& report, const ScatteringMatrix& truth);

/// All magnitudes obtainable without insertions from the probe family
/// {e_k, e_j + e_k, e_j + i e_k} on every outgoing channel.
std::vector<double> raw_magnitude_table(AmplitudeOracle& oracle);

}  // namespace qwire
