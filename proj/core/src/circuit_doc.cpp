#include "bellsim/circuit_doc.hpp"

#include "bellsim/elements.hpp"

#include <initializer_list>
#include <numbers>
#include <utility>

#include <json.hpp>

namespace bellsim {

namespace {

using nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(const std::string& message) { throw DocError(message); }

void check_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown field '" + item.key() + "' in " + where);
  }
}

const ordered_json& require(const ordered_json& obj, const char* key,
                            const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

double as_number(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " must be a number");
  return j.get<double>();
}

Complex parse_complex(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object with fields re, im");
  check_keys(j, {"re", "im"}, where);
  const double re = as_number(require(j, "re", where), where + ".re");
  const double im = j.contains("im") ? as_number(j.at("im"), where + ".im") : 0.0;
  return {re, im};
}

ordered_json complex_json(Complex z) {
  ordered_json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

DocElement parse_element(const ordered_json& j, std::size_t index) {
  const std::string where = "elements[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(where + " must be an object");
  const ordered_json& kind_json = require(j, "kind", where);
  if (!kind_json.is_string()) fail(where + ".kind must be a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "waveplate") {
    check_keys(j, {"kind", "theta_degrees", "mode"}, where);
    const double theta =
        as_number(require(j, "theta_degrees", where), where + ".theta_degrees");
    const ordered_json& mode_json = require(j, "mode", where);
    if (!mode_json.is_number_integer()) fail(where + ".mode must be 1 or 2");
    const int mode = mode_json.get<int>();
    if (mode != 1 && mode != 2) fail(where + ".mode must be 1 or 2");
    return WaveplateElement{theta, Mode(mode)};
  }
  if (kind == "switch") {
    check_keys(j, {"kind", "injection", "target"}, where);
    const Complex injection =
        parse_complex(require(j, "injection", where), where + ".injection");
    const ordered_json& target_json = require(j, "target", where);
    if (!target_json.is_string()) fail(where + ".target must be a string");
    const std::string target = target_json.get<std::string>();
    const auto label = parse_rect_label(target);
    if (!label) fail(where + ".target: unknown label '" + target + "'");
    return SwitchElement{injection, *label};
  }
  fail("unknown element kind '" + kind + "'");
}

InputSpec parse_input(const ordered_json& j) {
  if (!j.is_object()) fail("input must be an object");
  const ordered_json& kind_json = require(j, "kind", "input");
  if (!kind_json.is_string()) fail("input.kind must be a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "rectilinear" || kind == "bell") {
    check_keys(j, {"kind", "label"}, "input");
    const ordered_json& label_json = require(j, "label", "input");
    if (!label_json.is_string()) fail("input.label must be a string");
    const std::string text = label_json.get<std::string>();
    if (kind == "rectilinear") {
      const auto label = parse_rect_label(text);
      if (!label) fail("input.label: unknown label '" + text + "'");
      return RectInput{*label};
    }
    const auto label = parse_bell_label(text);
    if (!label) fail("input.label: unknown label '" + text + "'");
    return BellInput{*label};
  }
  if (kind == "raw") {
    check_keys(j, {"kind", "vacuum", "pairs"}, "input");
    RawInput raw;
    raw.vacuum = parse_complex(require(j, "vacuum", "input"), "input.vacuum");
    const ordered_json& pairs = require(j, "pairs", "input");
    if (!pairs.is_array() || pairs.size() != std::size_t(kPairDim))
      fail("input.pairs must be an array of 4 complex numbers");
    for (int k = 0; k < kPairDim; ++k)
      raw.pairs(k) = parse_complex(pairs[std::size_t(k)],
                                   "input.pairs[" + std::to_string(k) + "]");
    return raw;
  }
  fail("unknown input kind '" + kind + "'");
}

}  // namespace

CircuitDoc parse_circuit_doc(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be an object");
  check_keys(j, {"version", "epsilon", "elements", "input"}, "document");

  const ordered_json& version = require(j, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != 1)
    fail("unsupported version");

  CircuitDoc doc;
  doc.epsilon = parse_complex(require(j, "epsilon", "document"), "epsilon");
  const ordered_json& elements = require(j, "elements", "document");
  if (!elements.is_array()) fail("elements must be an array");
  for (std::size_t k = 0; k < elements.size(); ++k)
    doc.elements.push_back(parse_element(elements[k], k));
  doc.input = parse_input(require(j, "input", "document"));
  return doc;
}

std::string serialize_circuit_doc(const CircuitDoc& doc) {
  ordered_json j;
  j["version"] = 1;
  j["epsilon"] = complex_json(doc.epsilon);

  ordered_json elements = ordered_json::array();
  for (const DocElement& element : doc.elements) {
    elements.push_back(std::visit(
        overloaded{
            [](const WaveplateElement& wp) {
              ordered_json e;
              e["kind"] = "waveplate";
              e["theta_degrees"] = wp.theta_degrees;
              e["mode"] = int(wp.mode);
              return e;
            },
            [](const SwitchElement& sw) {
              ordered_json e;
              e["kind"] = "switch";
              e["injection"] = complex_json(sw.injection);
              e["target"] = to_string(sw.target);
              return e;
            }},
        element));
  }
  j["elements"] = std::move(elements);

  j["input"] = std::visit(
      overloaded{
          [](const RectInput& in) {
            ordered_json e;
            e["kind"] = "rectilinear";
            e["label"] = to_string(in.label);
            return e;
          },
          [](const BellInput& in) {
            ordered_json e;
            e["kind"] = "bell";
            e["label"] = to_string(in.label);
            return e;
          },
          [](const RawInput& in) {
            ordered_json e;
            e["kind"] = "raw";
            e["vacuum"] = complex_json(in.vacuum);
            ordered_json pairs = ordered_json::array();
            for (int k = 0; k < kPairDim; ++k) pairs.push_back(complex_json(in.pairs(k)));
            e["pairs"] = std::move(pairs);
            return e;
          }},
      doc.input);

  return j.dump(2) + "\n";
}

Circuit to_circuit(const CircuitDoc& doc) {
  Circuit circuit;
  for (const DocElement& element : doc.elements) {
    std::visit(overloaded{
                   [&](const WaveplateElement& wp) {
                     const double theta = wp.theta_degrees * std::numbers::pi / 180.0;
                     circuit.elements.push_back(waveplate_gate(theta, wp.mode));
                   },
                   [&](const SwitchElement& sw) {
                     circuit.elements.push_back(SwitchSettings{sw.injection, sw.target});
                   }},
               element);
  }
  return circuit;
}

PairState initial_state(const CircuitDoc& doc) {
  return std::visit(
      overloaded{
          [&](const RectInput& in) {
            return make_downconversion_state(doc.epsilon, rect_vector(in.label));
          },
          [&](const BellInput& in) {
            return make_downconversion_state(-doc.epsilon, bell_vector(in.label));
          },
          [](const RawInput& in) {
            PairState state;
            state.vacuum_amp = in.vacuum;
            state.pair_amps = in.pairs;
            return state;
          }},
      doc.input);
}

namespace {

constexpr double kHadamardPlateDegrees = 22.5;

}  // namespace

CircuitDoc describe_creator(Complex epsilon) {
  if (epsilon == Complex{0.0, 0.0})
    throw std::invalid_argument("switch amplitude undefined");
  CircuitDoc doc;
  doc.epsilon = epsilon;
  doc.elements = {WaveplateElement{kHadamardPlateDegrees, Mode::mode1},
                  WaveplateElement{kHadamardPlateDegrees, Mode::mode2},
                  SwitchElement{-epsilon, RectLabel::HH},
                  WaveplateElement{kHadamardPlateDegrees, Mode::mode1}};
  doc.input = RectInput{RectLabel::HH};
  return doc;
}

CircuitDoc describe_analyzer(Complex epsilon) {
  if (epsilon == Complex{0.0, 0.0})
    throw std::invalid_argument("switch amplitude undefined");
  CircuitDoc doc;
  doc.epsilon = epsilon;
  doc.elements = {WaveplateElement{kHadamardPlateDegrees, Mode::mode1},
                  SwitchElement{epsilon, RectLabel::HH},
                  WaveplateElement{kHadamardPlateDegrees, Mode::mode1},
                  WaveplateElement{kHadamardPlateDegrees, Mode::mode2}};
  doc.input = BellInput{BellLabel::psi_minus};
  return doc;
}

}  // namespace bellsim
