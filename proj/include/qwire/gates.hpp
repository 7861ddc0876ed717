#pragma once

#include <string_view>

#include "qwire/boundary.hpp"
#include "qwire/energy.hpp"
#include "qwire/matrix.hpp"

namespace qwire {

/// (1/sqrt 2) [[1, 1], [1, -1]]
ComplexMatrix hadamard_matrix();

/// Controlled-NOT permutation on four channels (swaps channels 3 and 4).
ComplexMatrix cnot_matrix();

/// Vertex whose S-matrix at E0 is the Hadamard matrix, in closed form.
BoundaryCondition hadamard_gate(Energy e0);

/// Vertex whose S-matrix at E0 is the CNOT permutation, in closed form.
BoundaryCondition cnot_gate(Energy e0);

/// Robin angle phi in [0, pi) with
///   e^{i chi} = -(cos phi - i sqrt(E0) sin phi) / (cos phi + i sqrt(E0) sin phi),
/// found by bisection to 1e-12.
double robin_angle_for_phase(double chi, Energy e0);

/// One-channel Robin pair (cos phi, sin phi) realising the phase e^{i chi}.
BoundaryCondition phase_gate(double chi, Energy e0);

/// Parses "hadamard", "cnot" or "phase:<angle>", where the angle is a number
/// optionally written with "pi" (e.g. "pi", "-pi/4", "2pi/3", "0.5*pi",
/// "1.25"). Throws ArgumentError for anything else.
BoundaryCondition gate_by_name(std::string_view name, Energy e0);

/// Parses the angle syntax accepted by gate_by_name.
double parse_angle(std::string_view text);

}  // namespace qwire
