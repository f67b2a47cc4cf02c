#include "bellsim/circuit_doc.hpp"

#include <cmath>

#include <doctest.h>

using namespace bellsim;

namespace {

constexpr Complex kEps{0.01, 0.0};

double state_dev(const PairState& a, const PairState& b) {
  double dev = std::abs(a.vacuum_amp - b.vacuum_amp);
  for (int k = 0; k < kPairDim; ++k)
    dev = std::max(dev, std::abs(a.pair_amps(k) - b.pair_amps(k)));
  return dev;
}

void expect_doc_error(const std::string& json_text, const std::string& needle) {
  try {
    parse_circuit_doc(json_text);
    FAIL("expected DocError for: " << json_text);
  } catch (const DocError& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_SUITE("circuit_doc") {

TEST_CASE("serialize/parse round trip is byte stable") {
  const CircuitDoc creator = describe_creator(kEps);
  const std::string once = serialize_circuit_doc(creator);
  const std::string twice = serialize_circuit_doc(parse_circuit_doc(once));
  CHECK(once == twice);

  const CircuitDoc analyzer = describe_analyzer(Complex{0.003, -0.001});
  const std::string a_once = serialize_circuit_doc(analyzer);
  CHECK(a_once == serialize_circuit_doc(parse_circuit_doc(a_once)));
}

TEST_CASE("creator document reproduces the device circuit") {
  const CircuitDoc doc = describe_creator(kEps);
  REQUIRE(doc.elements.size() == 4);
  const PairState input = initial_state(doc);
  CHECK(state_dev(input, make_downconversion_state(kEps, rect_vector(RectLabel::HH)))
        == 0.0);
  const PairState from_doc = run_circuit(input, to_circuit(doc));
  const PairState from_device = run_circuit(input, bell_creator(kEps));
  // The document spells H1(x)H2 as two plates; only rounding differs.
  CHECK(state_dev(from_doc, from_device) <= 1e-15);
}

TEST_CASE("analyzer document reproduces the device circuit") {
  const CircuitDoc doc = describe_analyzer(kEps);
  REQUIRE(doc.elements.size() == 4);
  const PairState input = initial_state(doc);
  CHECK(state_dev(input, make_downconversion_state(
                             -kEps, bell_vector(BellLabel::psi_minus))) == 0.0);
  const PairState from_doc = run_circuit(input, to_circuit(doc));
  const PairState from_device = run_circuit(input, bell_analyzer(kEps));
  CHECK(state_dev(from_doc, from_device) <= 1e-15);
}

TEST_CASE("describe rejects a zero amplitude") {
  CHECK_THROWS_AS(describe_creator(Complex{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(describe_analyzer(Complex{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("raw input carries amplitudes verbatim") {
  CircuitDoc doc;
  doc.epsilon = kEps;
  RawInput raw;
  raw.vacuum = Complex{0.9, -0.1};
  raw.pairs << Complex{0.01, 0.02}, Complex{0.0, 0.0}, Complex{-0.03, 0.0},
      Complex{0.0, 0.04};
  doc.input = raw;
  const std::string text = serialize_circuit_doc(doc);
  const CircuitDoc parsed = parse_circuit_doc(text);
  const PairState state = initial_state(parsed);
  CHECK(state.vacuum_amp == raw.vacuum);
  CHECK((state.pair_amps - raw.pairs).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bell input is the created-pair convention") {
  CircuitDoc doc;
  doc.epsilon = kEps;
  doc.input = BellInput{BellLabel::phi_minus};
  const PairState state = initial_state(doc);
  CHECK(state.vacuum_amp == Complex{1.0, 0.0});
  CHECK((state.pair_amps + kEps * bell_vector(BellLabel::phi_minus))
            .cwiseAbs()
            .maxCoeff() < 1e-18);
}

TEST_CASE("im defaults to zero when omitted") {
  const CircuitDoc doc = parse_circuit_doc(R"({
    "version": 1,
    "epsilon": {"re": 0.02},
    "elements": [],
    "input": {"kind": "rectilinear", "label": "HV"}
  })");
  CHECK(doc.epsilon == Complex{0.02, 0.0});
  CHECK(doc.elements.empty());
}

TEST_CASE("strict parsing rejects malformed documents") {
  expect_doc_error("not json", "invalid JSON");
  expect_doc_error("[1, 2]", "must be an object");
  expect_doc_error(R"({"epsilon": {"re": 1}, "elements": [], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "missing field 'version'");
  expect_doc_error(R"({"version": 2, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "unsupported version");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "rectilinear", "label": "HH"}, "extra": 0})",
                   "unknown field 'extra'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": "x"}, "elements": [], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "must be a number");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1, "imag": 0}, "elements": [], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "unknown field 'imag'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [{"kind": "prism"}], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "unknown element kind 'prism'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [{"kind": "waveplate", "theta_degrees": 10, "mode": 3}], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "mode must be 1 or 2");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [{"kind": "waveplate", "mode": 1}], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "missing field 'theta_degrees'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [{"kind": "switch", "injection": {"re": 1}, "target": "XX"}], "input": {"kind": "rectilinear", "label": "HH"}})",
                   "unknown label 'XX'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "plasma"}})",
                   "unknown input kind 'plasma'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "bell", "label": "psi"}})",
                   "unknown label 'psi'");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "raw", "vacuum": {"re": 1}, "pairs": [{"re": 0}]}})",
                   "array of 4");
  expect_doc_error(R"({"version": 1, "epsilon": {"re": 1}, "elements": [], "input": {"kind": "rectilinear", "label": "HH", "vacuum": {"re": 1}}})",
                   "unknown field 'vacuum'");
}

TEST_CASE("complex epsilon round trips through text") {
  CircuitDoc doc = describe_creator(Complex{0.01, 0.005});
  const CircuitDoc back = parse_circuit_doc(serialize_circuit_doc(doc));
  CHECK(back.epsilon == doc.epsilon);
  REQUIRE(back.elements.size() == 4);
  const auto& sw = std::get<SwitchElement>(back.elements[2]);
  CHECK(sw.injection == -doc.epsilon);
}

}  // TEST_SUITE
