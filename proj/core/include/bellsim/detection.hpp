#pragma once

#include "bellsim/state.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace bellsim {

/// Single-photon detectors: D1 and D2 see the H and V ports of the
/// mode-1 polarizing splitter, D3 and D4 the H and V ports of mode 2.
enum class DetectorId { d1 = 1, d2 = 2, d3 = 3, d4 = 4 };

std::string to_string(DetectorId id);

/// Coincidence pattern produced by each two-photon component:
/// (mode-1 detector, mode-2 detector).
std::pair<DetectorId, DetectorId> detectors_for(RectLabel label);

struct OutcomeDistribution {
  /// Coincidence probability per rectilinear component, (HH, HV, VH, VV)
  /// order, including the efficiency^2 factor for the two detections.
  std::array<double, 4> coincidence{};
  /// Remaining probability: vacuum shots plus pairs lost to inefficiency.
  double no_coincidence = 0.0;

  double coincidence_total() const;
};

/// Probabilities normalized by the total norm of the state, so an
/// unnormalized |0> + eps|pair> input yields |eps|^2/(1+|eps|^2) per unit
/// pair component at unit efficiency.
OutcomeDistribution outcome_distribution(const PairState& state,
                                         double efficiency = 1.0);

double expected_coincidence_probability(Complex epsilon,
                                        double efficiency = 1.0);

struct ShotCounts {
  std::array<std::uint64_t, 4> coincidence{};
  std::uint64_t no_coincidence = 0;
  std::uint64_t shots = 0;
};

/// Multinomial sampling by CDF inversion with a fixed 53-bit uniform
/// generator, so counts for a given (distribution, shots, seed) are
/// identical across platforms and runs.
ShotCounts sample_shots(const OutcomeDistribution& distribution,
                        std::uint64_t shots, std::uint64_t seed);

struct BellIdentification {
  /// Set when a single coincidence pattern carries essentially all of the
  /// coincidence probability after the analyzer.
  std::optional<BellLabel> label;
  /// Coincidence probability of the identifying pattern (0 when ambiguous).
  double probability = 0.0;
  /// Full analyzer-output distribution, also available when ambiguous.
  OutcomeDistribution distribution;
};

/// Runs the analyzer on the state and reads the Bell label off the
/// coincidence pattern: HH -> psi-, HV -> psi+, VH -> phi-, VV -> phi+.
BellIdentification identify_bell(const PairState& state, Complex epsilon,
                                 double efficiency = 1.0);

}  // namespace bellsim
