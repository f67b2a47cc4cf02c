#pragma once

#include "bellsim/state.hpp"

#include <optional>

namespace bellsim {

/// Linear optical element lifted to the pair space: a 4x4 matrix acting
/// on pair_amps in (HH, HV, VH, VV) order. Gates never touch the vacuum
/// amplitude.
struct TwoModeGate {
  Eigen::Matrix4cd matrix;
};

enum class HadamardModes { mode1_only, mode2_only, both };
enum class Mode { mode1 = 1, mode2 = 2 };

/// Provenance record for a pump-switch injection amplitude. The physics
/// collapses coupling g, classical pump amplitude zeta and interaction
/// time t into the single number -i*t*g*zeta/hbar; these fields are kept
/// for documentation only and never enter the propagation.
struct CrystalParams {
  Complex coupling;          // g
  Complex pump_amplitude;    // zeta (c-number replacing the pump mode)
  double interaction_time;   // t, seconds
  double hbar = 1.0;
  double signal_frequency = 0.0;  // omega of modes 1 and 2
  double pump_frequency = 0.0;    // 2*omega
};

/// Pump-driven conditional-phase switch, reduced to the down-conversion
/// amplitude it injects in one pass and the pair class its phase
/// matching feeds.
struct SwitchSettings {
  Complex injection;  // mu
  RectLabel target = RectLabel::HH;
  std::optional<CrystalParams> crystal_doc;

  /// Builds settings from crystal parameters; injection is computed as
  /// -i * t * g * zeta / hbar.
  static SwitchSettings from_crystal(const CrystalParams& params,
                                     RectLabel target = RectLabel::HH);
};

/// H on the designated spatial mode(s), H = (1/sqrt2)[[1,1],[1,-1]],
/// lifted to the pair space. Optically: a half-wave plate at 22.5 degrees.
TwoModeGate hadamard_gate(HadamardModes modes);

/// Half-wave plate at angle theta (radians) on one spatial mode:
/// Jones matrix [[cos2t, sin2t],[sin2t, -cos2t]] lifted to the pair
/// space. theta = pi/8 reproduces hadamard_gate on that mode.
TwoModeGate waveplate_gate(double theta, Mode mode);

/// pair_amps' = matrix * pair_amps; vacuum amplitude unchanged.
PairState apply_gate(const PairState& state, const TwoModeGate& gate);

/// First-order switch action: adds the injection amplitude to the target
/// pair class and nothing else. Affine, not linear, and not
/// norm-preserving in general; valid for |amplitudes| << 1.
PairState apply_switch(const PairState& state, const SwitchSettings& settings);

/// Injection that makes the switch flip the sign of the target
/// amplitude: -2 * pair_amps[target].
Complex required_injection_for_pi(const PairState& state, RectLabel target);

/// |after|^2 - |before|^2 = |mu|^2 + 2 Re(conj(mu) * pair_amps[target]);
/// quantifies the first-order model's deliberate non-unitarity.
double norm_change(const PairState& state, const SwitchSettings& settings);

}  // namespace bellsim
