#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string_view>

namespace bellsim {

using Complex = std::complex<double>;

/// Amplitudes of the two-photon polarization sector, always ordered
/// (HH, HV, VH, VV). Every matrix and mapping table in this library
/// uses this order.
using PairVector = Eigen::Vector4cd;

/// The four maximally-entangled two-photon polarization states.
enum class BellLabel { psi_plus, psi_minus, phi_plus, phi_minus };

/// The rectilinear product basis; values double as pair-amplitude indices.
enum class RectLabel { HH = 0, HV = 1, VH = 2, VV = 3 };

inline constexpr int kPairDim = 4;

/// A photon-pair state in coherent superposition with the vacuum:
/// vacuum_amp * |0> + sum_k pair_amps[k] * |k-th rectilinear pair state>.
///
/// Stored unnormalized; probabilities normalize on demand. The affine
/// pump-switch algebra depends on keeping the raw amplitudes.
struct PairState {
  Complex vacuum_amp{1.0, 0.0};
  PairVector pair_amps = PairVector::Zero();

  double pair_norm_sq() const { return pair_amps.squaredNorm(); }
  double total_norm_sq() const { return std::norm(vacuum_amp) + pair_norm_sq(); }
};

/// |0> + epsilon * (coeffs dot pair basis): the generic down-conversion
/// output. coeffs need not be normalized.
PairState make_downconversion_state(Complex epsilon, const PairVector& coeffs);

/// Unit 4-vector of the given Bell state in (HH, HV, VH, VV) order:
///   psi+- = (|VH> +- |HV>)/sqrt2,  phi+- = (|HH> +- |VV>)/sqrt2.
PairVector bell_vector(BellLabel label);

/// Unit 4-vector of a rectilinear basis state.
PairVector rect_vector(RectLabel label);

/// |<a|b>|^2 / (|a|^2 |b|^2) over the pair (coincidence-basis) components
/// only; insensitive to global phase. Throws std::invalid_argument
/// ("no pair component") if either pair vector is zero.
double pair_fidelity(const PairState& a, const PairState& b);

/// Amplitude-level, phase-sensitive comparison: true iff the vacuum
/// amplitudes and all four pair amplitudes agree within tol elementwise.
bool states_close(const PairState& a, const PairState& b, double tol);

std::string_view to_string(BellLabel label);
std::string_view to_string(RectLabel label);

/// Accepts "psi-plus", "psi-minus", "phi-plus", "phi-minus".
std::optional<BellLabel> parse_bell_label(std::string_view text);

/// Accepts "HH", "HV", "VH", "VV".
std::optional<RectLabel> parse_rect_label(std::string_view text);

}  // namespace bellsim
