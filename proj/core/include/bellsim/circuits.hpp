#pragma once

#include "bellsim/elements.hpp"
#include "bellsim/state.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace bellsim {

using CircuitElement = std::variant<TwoModeGate, SwitchSettings>;

/// Ordered sequence of optical elements; application order is list
/// order, and an empty circuit is the identity.
struct Circuit {
  std::vector<CircuitElement> elements;
};

enum class Device { creator, analyzer };

/// Bell creator device: H1(x)H2, pump switch injecting -epsilon into HH,
/// then H1(x)I2. Maps each rectilinear-with-vacuum input to a distinct
/// Bell state (times -epsilon) over the vacuum.
/// Throws std::invalid_argument("switch amplitude undefined") if epsilon
/// is zero.
Circuit bell_creator(Complex epsilon);

/// Bell analyzer device: H1(x)I2, pump switch injecting +epsilon into HH,
/// then H1(x)H2. Inverts the creator on the canonical Bell-with-vacuum
/// inputs, leaving a single rectilinear pair amplitude of +epsilon.
Circuit bell_analyzer(Complex epsilon);

/// Folds apply_gate / apply_switch over the element list in order.
PairState run_circuit(const PairState& state, const Circuit& circuit);

/// Like run_circuit, but returns the input followed by the state after
/// each element (size = elements + 1; last entry is the final state).
std::vector<PairState> run_circuit_trace(const PairState& state,
                                         const Circuit& circuit);

/// Pure two-qubit reference circuits with the conventional
/// c-pi = diag(1,1,1,-1):
///   creator:  (H1(x)I2)(c-pi)(H1(x)H2)
///   analyzer: (H1(x)H2)(c-pi)(H1(x)I2)
/// These are unitary and differ deliberately from the optical devices,
/// whose switch flips the first (HH) component instead.
/// Throws std::invalid_argument if the input is not a unit vector.
Eigen::Vector4cd qubit_circuit_reference(const Eigen::Vector4cd& input,
                                         Device which);

/// Canonical creator mapping: |0> + eps|input> -> |0> - eps|output>.
struct CreationMapping {
  RectLabel input;
  BellLabel output;
};

/// Canonical analyzer mapping: |0> - eps|input> -> |0> + eps|output>.
struct DetectionMapping {
  BellLabel input;
  RectLabel output;
};

/// HH -> psi-, HV -> psi+, VH -> phi-, VV -> phi+.
const std::array<CreationMapping, 4>& creation_table();

/// psi- -> HH, psi+ -> HV, phi- -> VH, phi+ -> VV (inverse of the above).
const std::array<DetectionMapping, 4>& detection_table();

struct MappingRow {
  std::string input_label;
  std::string expected_label;
  PairState expected;
  PairState computed;
  double max_deviation = 0.0;
};

struct MappingReport {
  Device which = Device::creator;
  Complex epsilon;
  double tol = 0.0;
  std::vector<MappingRow> rows;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Runs the four canonical inputs of the chosen device and compares the
/// outputs amplitude-by-amplitude against the canonical mapping table.
/// pass iff every row's deviation is <= tol.
MappingReport mapping_report(Device which, Complex epsilon, double tol);

}  // namespace bellsim
