#include "bellsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

PairState make_downconversion_state(Complex epsilon, const PairVector& coeffs) {
  PairState state;
  state.vacuum_amp = Complex{1.0, 0.0};
  state.pair_amps = epsilon * coeffs;
  return state;
}

PairVector bell_vector(BellLabel label) {
  PairVector v = PairVector::Zero();
  switch (label) {
    case BellLabel::psi_plus:
      v[1] = kInvSqrt2;
      v[2] = kInvSqrt2;
      break;
    case BellLabel::psi_minus:
      v[1] = -kInvSqrt2;
      v[2] = kInvSqrt2;
      break;
    case BellLabel::phi_plus:
      v[0] = kInvSqrt2;
      v[3] = kInvSqrt2;
      break;
    case BellLabel::phi_minus:
      v[0] = kInvSqrt2;
      v[3] = -kInvSqrt2;
      break;
  }
  return v;
}

PairVector rect_vector(RectLabel label) {
  PairVector v = PairVector::Zero();
  v[static_cast<int>(label)] = 1.0;
  return v;
}

double pair_fidelity(const PairState& a, const PairState& b) {
  const double na = a.pair_norm_sq();
  const double nb = b.pair_norm_sq();
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("pair_fidelity: no pair component");
  }
  const Complex overlap = a.pair_amps.dot(b.pair_amps);
  return std::norm(overlap) / (na * nb);
}

bool states_close(const PairState& a, const PairState& b, double tol) {
  if (std::abs(a.vacuum_amp - b.vacuum_amp) > tol) return false;
  for (int i = 0; i < kPairDim; ++i) {
    if (std::abs(a.pair_amps[i] - b.pair_amps[i]) > tol) return false;
  }
  return true;
}

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::psi_plus: return "psi-plus";
    case BellLabel::psi_minus: return "psi-minus";
    case BellLabel::phi_plus: return "phi-plus";
    case BellLabel::phi_minus: return "phi-minus";
  }
  return "?";
}

std::string_view to_string(RectLabel label) {
  switch (label) {
    case RectLabel::HH: return "HH";
    case RectLabel::HV: return "HV";
    case RectLabel::VH: return "VH";
    case RectLabel::VV: return "VV";
  }
  return "?";
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  if (text == "psi-plus") return BellLabel::psi_plus;
  if (text == "psi-minus") return BellLabel::psi_minus;
  if (text == "phi-plus") return BellLabel::phi_plus;
  if (text == "phi-minus") return BellLabel::phi_minus;
  return std::nullopt;
}

std::optional<RectLabel> parse_rect_label(std::string_view text) {
  if (text == "HH") return RectLabel::HH;
  if (text == "HV") return RectLabel::HV;
  if (text == "VH") return RectLabel::VH;
  if (text == "VV") return RectLabel::VV;
  return std::nullopt;
}

}  // namespace bellsim
