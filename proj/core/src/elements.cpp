#include "bellsim/elements.hpp"

#include <cmath>

namespace bellsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::Matrix2cd hadamard2() {
  Eigen::Matrix2cd h;
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return h;
}

// Lift single-mode Jones matrices to the pair space. Basis index is
// 2*m1 + m2 with m = 0 for H, 1 for V, which is exactly (HH,HV,VH,VV).
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

SwitchSettings SwitchSettings::from_crystal(const CrystalParams& params,
                                            RectLabel target) {
  SwitchSettings settings;
  settings.injection = Complex{0.0, -1.0} * params.interaction_time *
                       params.coupling * params.pump_amplitude / params.hbar;
  settings.target = target;
  settings.crystal_doc = params;
  return settings;
}

TwoModeGate hadamard_gate(HadamardModes modes) {
  const Eigen::Matrix2cd h = hadamard2();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  switch (modes) {
    case HadamardModes::mode1_only: return {kron2(h, id)};
    case HadamardModes::mode2_only: return {kron2(id, h)};
    case HadamardModes::both: return {kron2(h, h)};
  }
  return {Eigen::Matrix4cd::Identity()};
}

TwoModeGate waveplate_gate(double theta, Mode mode) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  Eigen::Matrix2cd jones;
  jones << c, s, s, -c;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return mode == Mode::mode1 ? TwoModeGate{kron2(jones, id)}
                             : TwoModeGate{kron2(id, jones)};
}

PairState apply_gate(const PairState& state, const TwoModeGate& gate) {
  PairState out = state;
  out.pair_amps = gate.matrix * state.pair_amps;
  return out;
}

PairState apply_switch(const PairState& state, const SwitchSettings& settings) {
  PairState out = state;
  out.pair_amps[static_cast<int>(settings.target)] += settings.injection;
  return out;
}

Complex required_injection_for_pi(const PairState& state, RectLabel target) {
  return -2.0 * state.pair_amps[static_cast<int>(target)];
}

double norm_change(const PairState& state, const SwitchSettings& settings) {
  const Complex mu = settings.injection;
  const Complex amp = state.pair_amps[static_cast<int>(settings.target)];
  return std::norm(mu) + 2.0 * (std::conj(mu) * amp).real();
}

}  // namespace bellsim
