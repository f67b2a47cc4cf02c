#include "bellsim/detection.hpp"

#include "bellsim/circuits.hpp"

#include <random>
#include <stdexcept>

namespace bellsim {

namespace {

// Fraction of the coincidence probability a single pattern must carry
// before the outcome is reported as that pattern's Bell state.
constexpr double kUniqueFraction = 1.0 - 1e-9;

double uniform53(std::mt19937_64& gen) {
  // 53-bit mantissa in [0, 1); bit-for-bit reproducible for a given seed.
  return double(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string to_string(DetectorId id) {
  switch (id) {
    case DetectorId::d1: return "D1";
    case DetectorId::d2: return "D2";
    case DetectorId::d3: return "D3";
    case DetectorId::d4: return "D4";
  }
  throw std::invalid_argument("unknown detector");
}

std::pair<DetectorId, DetectorId> detectors_for(RectLabel label) {
  switch (label) {
    case RectLabel::HH: return {DetectorId::d1, DetectorId::d3};
    case RectLabel::HV: return {DetectorId::d1, DetectorId::d4};
    case RectLabel::VH: return {DetectorId::d2, DetectorId::d3};
    case RectLabel::VV: return {DetectorId::d2, DetectorId::d4};
  }
  throw std::invalid_argument("unknown rectilinear label");
}

double OutcomeDistribution::coincidence_total() const {
  double total = 0.0;
  for (double p : coincidence) total += p;
  return total;
}

OutcomeDistribution outcome_distribution(const PairState& state,
                                         double efficiency) {
  if (!(efficiency >= 0.0 && efficiency <= 1.0))
    throw std::invalid_argument("efficiency must be in [0, 1]");
  const double total = state.total_norm_sq();
  if (total <= 0.0) throw std::invalid_argument("outcome_distribution: zero state");

  OutcomeDistribution dist;
  const double eff_sq = efficiency * efficiency;
  for (int k = 0; k < kPairDim; ++k)
    dist.coincidence[std::size_t(k)] = eff_sq * std::norm(state.pair_amps(k)) / total;
  dist.no_coincidence = 1.0 - dist.coincidence_total();
  return dist;
}

double expected_coincidence_probability(Complex epsilon, double efficiency) {
  if (!(efficiency >= 0.0 && efficiency <= 1.0))
    throw std::invalid_argument("efficiency must be in [0, 1]");
  const double eps_sq = std::norm(epsilon);
  return efficiency * efficiency * eps_sq / (1.0 + eps_sq);
}

ShotCounts sample_shots(const OutcomeDistribution& distribution,
                        std::uint64_t shots, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  ShotCounts counts;
  counts.shots = shots;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform53(gen);
    double cumulative = 0.0;
    bool assigned = false;
    for (std::size_t k = 0; k < distribution.coincidence.size(); ++k) {
      cumulative += distribution.coincidence[k];
      if (u < cumulative) {
        ++counts.coincidence[k];
        assigned = true;
        break;
      }
    }
    if (!assigned) ++counts.no_coincidence;
  }
  return counts;
}

BellIdentification identify_bell(const PairState& state, Complex epsilon,
                                 double efficiency) {
  const PairState analyzed = run_circuit(state, bell_analyzer(epsilon));

  BellIdentification result;
  result.distribution = outcome_distribution(analyzed, efficiency);

  const double total = result.distribution.coincidence_total();
  if (total <= 0.0) return result;

  std::size_t best = 0;
  for (std::size_t k = 1; k < result.distribution.coincidence.size(); ++k)
    if (result.distribution.coincidence[k] > result.distribution.coincidence[best])
      best = k;
  if (result.distribution.coincidence[best] < kUniqueFraction * total) return result;

  for (const DetectionMapping& row : detection_table()) {
    if (row.output == RectLabel(best)) {
      result.label = row.input;
      break;
    }
  }
  result.probability = result.distribution.coincidence[best];
  return result;
}

}  // namespace bellsim
