#pragma once

#include "bellsim/circuits.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bellsim {

/// Parse or validation failure for a circuit document; maps to a usage
/// error at the CLI, unlike the runtime_error family.
class DocError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-wave plate with its fast axis at theta_degrees, acting on one
/// spatial mode. 22.5 degrees realizes the Hadamard transform.
struct WaveplateElement {
  double theta_degrees;
  Mode mode;
};

struct SwitchElement {
  Complex injection;
  RectLabel target;
};

using DocElement = std::variant<WaveplateElement, SwitchElement>;

struct RectInput {
  RectLabel label;
};
struct BellInput {
  BellLabel label;
};
struct RawInput {
  Complex vacuum;
  PairVector pairs;
};
using InputSpec = std::variant<RectInput, BellInput, RawInput>;

/// Serializable description of a device: nominal downconversion amplitude,
/// ordered element list, and the state fed into the first element.
struct CircuitDoc {
  Complex epsilon;
  std::vector<DocElement> elements;
  InputSpec input;
};

/// Strict parse: unknown fields, wrong types, bad labels, and versions
/// other than 1 all raise DocError.
CircuitDoc parse_circuit_doc(const std::string& json_text);

/// Stable output: fixed field order and two-space indenting, so equal
/// documents serialize byte-for-byte identically.
std::string serialize_circuit_doc(const CircuitDoc& doc);

Circuit to_circuit(const CircuitDoc& doc);

/// rectilinear label -> |0> + eps |label>;  bell label -> |0> - eps |Bell>
/// (the device convention for a created pair);  raw -> amplitudes as given.
PairState initial_state(const CircuitDoc& doc);

/// Plate-level documents for the two devices; running them reproduces
/// bell_creator / bell_analyzer up to floating-point rounding.
CircuitDoc describe_creator(Complex epsilon);
CircuitDoc describe_analyzer(Complex epsilon);

}  // namespace bellsim
