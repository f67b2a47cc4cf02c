#include "bellsim/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {

void require_nonzero(Complex epsilon) {
  if (epsilon == Complex{0.0, 0.0}) {
    throw std::invalid_argument("switch amplitude undefined");
  }
}

double state_deviation(const PairState& a, const PairState& b) {
  double dev = std::abs(a.vacuum_amp - b.vacuum_amp);
  for (int i = 0; i < kPairDim; ++i) {
    dev = std::max(dev, std::abs(a.pair_amps[i] - b.pair_amps[i]));
  }
  return dev;
}

std::string signed_label(std::string_view sign, std::string_view name) {
  return std::string("|0> ") + std::string(sign) + " eps|" + std::string(name) +
         ">";
}

}  // namespace

Circuit bell_creator(Complex epsilon) {
  require_nonzero(epsilon);
  Circuit c;
  c.elements.emplace_back(hadamard_gate(HadamardModes::both));
  c.elements.emplace_back(SwitchSettings{-epsilon, RectLabel::HH});
  c.elements.emplace_back(hadamard_gate(HadamardModes::mode1_only));
  return c;
}

Circuit bell_analyzer(Complex epsilon) {
  require_nonzero(epsilon);
  Circuit c;
  c.elements.emplace_back(hadamard_gate(HadamardModes::mode1_only));
  c.elements.emplace_back(SwitchSettings{epsilon, RectLabel::HH});
  c.elements.emplace_back(hadamard_gate(HadamardModes::both));
  return c;
}

PairState run_circuit(const PairState& state, const Circuit& circuit) {
  PairState current = state;
  for (const auto& element : circuit.elements) {
    current = std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, TwoModeGate>) {
            return apply_gate(current, e);
          } else {
            return apply_switch(current, e);
          }
        },
        element);
  }
  return current;
}

std::vector<PairState> run_circuit_trace(const PairState& state,
                                         const Circuit& circuit) {
  std::vector<PairState> trace;
  trace.reserve(circuit.elements.size() + 1);
  trace.push_back(state);
  for (const auto& element : circuit.elements) {
    const PairState& current = trace.back();
    trace.push_back(std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, TwoModeGate>) {
            return apply_gate(current, e);
          } else {
            return apply_switch(current, e);
          }
        },
        element));
  }
  return trace;
}

Eigen::Vector4cd qubit_circuit_reference(const Eigen::Vector4cd& input,
                                         Device which) {
  if (std::abs(input.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("qubit_circuit_reference: input must be a unit vector");
  }
  const Eigen::Matrix4cd h_both = hadamard_gate(HadamardModes::both).matrix;
  const Eigen::Matrix4cd h_first = hadamard_gate(HadamardModes::mode1_only).matrix;
  Eigen::Vector4cd cpi_diag{1.0, 1.0, 1.0, -1.0};
  if (which == Device::creator) {
    return h_first * (cpi_diag.asDiagonal() * (h_both * input));
  }
  return h_both * (cpi_diag.asDiagonal() * (h_first * input));
}

const std::array<CreationMapping, 4>& creation_table() {
  static const std::array<CreationMapping, 4> table = {{
      {RectLabel::HH, BellLabel::psi_minus},
      {RectLabel::HV, BellLabel::psi_plus},
      {RectLabel::VH, BellLabel::phi_minus},
      {RectLabel::VV, BellLabel::phi_plus},
  }};
  return table;
}

const std::array<DetectionMapping, 4>& detection_table() {
  static const std::array<DetectionMapping, 4> table = {{
      {BellLabel::psi_minus, RectLabel::HH},
      {BellLabel::psi_plus, RectLabel::HV},
      {BellLabel::phi_minus, RectLabel::VH},
      {BellLabel::phi_plus, RectLabel::VV},
  }};
  return table;
}

MappingReport mapping_report(Device which, Complex epsilon, double tol) {
  MappingReport report;
  report.which = which;
  report.epsilon = epsilon;
  report.tol = tol;

  const Circuit circuit =
      which == Device::creator ? bell_creator(epsilon) : bell_analyzer(epsilon);

  for (int k = 0; k < kPairDim; ++k) {
    MappingRow row;
    PairState input;
    if (which == Device::creator) {
      const auto& entry = creation_table()[k];
      input = make_downconversion_state(epsilon, rect_vector(entry.input));
      row.input_label = signed_label("+", to_string(entry.input));
      row.expected_label = signed_label("-", to_string(entry.output));
      row.expected.vacuum_amp = Complex{1.0, 0.0};
      row.expected.pair_amps = -epsilon * bell_vector(entry.output);
    } else {
      const auto& entry = detection_table()[k];
      input = make_downconversion_state(-epsilon, bell_vector(entry.input));
      row.input_label = signed_label("-", to_string(entry.input));
      row.expected_label = signed_label("+", to_string(entry.output));
      row.expected.vacuum_amp = Complex{1.0, 0.0};
      row.expected.pair_amps = epsilon * rect_vector(entry.output);
    }
    row.computed = run_circuit(input, circuit);
    row.max_deviation = state_deviation(row.computed, row.expected);
    report.max_deviation = std::max(report.max_deviation, row.max_deviation);
    report.rows.push_back(std::move(row));
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

}  // namespace bellsim
