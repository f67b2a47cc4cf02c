#pragma once

#include "bellsim/state.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace bellsim {

/// Truncated occupation-number basis over the four polarization-spatial
/// modes (1H, 1V, 2H, 2V), each mode holding at most n_max photons.
/// Enumeration is lexicographic in (n1H, n1V, n2H, n2V) and stable.
class FockBasis {
 public:
  explicit FockBasis(int n_max);

  int n_max() const { return n_max_; }
  int dimension() const { return dimension_; }  // (n_max+1)^4

  int index_of(const std::array<int, 4>& occupations) const;
  std::array<int, 4> occupations(int index) const;

 private:
  int n_max_;
  int dimension_;
};

struct FockState {
  Eigen::VectorXcd amplitudes;

  double norm_sq() const { return amplitudes.squaredNorm(); }
};

/// Classical-pump interaction in the truncated basis:
///   H = kappa a1H^dag a2H^dag + conj(kappa) a1H a2H,   kappa = g*zeta, hbar = 1.
/// Hermitian by construction; couples only occupation tuples differing by
/// (+-1, 0, +-1, 0). The pump itself is a c-number and carries no mode.
class PumpedHamiltonian {
 public:
  PumpedHamiltonian(Complex kappa, const FockBasis& basis);

  Complex kappa() const { return kappa_; }
  const FockBasis& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Complex kappa_;
  FockBasis basis_;
  Eigen::MatrixXcd matrix_;
};

/// Vacuum-plus-pair state into the Fock basis: vacuum -> |0,0,0,0>,
/// HH -> |1,0,1,0>, HV -> |1,0,0,1>, VH -> |0,1,1,0>, VV -> |0,1,0,1>.
/// Requires n_max >= 1.
FockState embed(const PairState& state, const FockBasis& basis);

/// amplitudes' = exp(-i H t) amplitudes, dense scaling-and-squaring
/// exponential; unitary, so the norm is preserved to ~1e-15.
///
/// Truncation guard: if the input carries < 1e-6 probability on boundary
/// states (any occupation equal to n_max), the output must too, else
/// std::runtime_error("increase n_max"): amplitude reaching the
/// boundary would have kept flowing outward in the untruncated space.
/// Inputs already touching the boundary are propagated as-is.
FockState propagate_exact(const FockState& state, const PumpedHamiltonian& ham,
                          double t);

/// Comparison of the first-order switch model against exact propagation
/// on the embedded state, with kappa*t chosen so that -i*kappa*t = mu.
struct ValidityReport {
  /// |exact - model| at the tracked amplitudes, in order
  /// (vacuum, HH, HV, VH, VV).
  std::array<double, 5> amplitude_deviations{};
  /// |exact vacuum amplitude - input vacuum amplitude|; the model keeps
  /// the vacuum fixed, so this is also its vacuum deviation.
  double vacuum_depletion = 0.0;
  /// Exact amplitude on the double-pair state |2,0,2,0>, which the model
  /// drops entirely.
  Complex double_pair_amp;
  /// max |exact - model| over the whole truncated basis.
  double max_deviation = 0.0;
  /// | ||exact||^2 - ||input||^2 |; the exact propagator is unitary, so
  /// this measures only numerical error in the matrix exponential.
  double norm_error = 0.0;
};

/// Requires n_max >= 2 (throws std::invalid_argument("increase n_max")).
ValidityReport validate_switch(const PairState& pair_state, Complex mu,
                               int n_max);

struct ScalingRow {
  double scale;
  double max_deviation;
};

/// Model-vs-exact deviation as a function of a joint amplitude scale:
/// row k propagates (vacuum, scale*pair_amps) with injection scale*base_mu.
struct ScalingStudy {
  std::vector<ScalingRow> rows;
  /// Least-squares slope of log(deviation) vs log(scale); empty when the
  /// model is exact (all deviations zero, e.g. mu = 0).
  std::optional<double> exponent;
  bool exact = false;
};

/// Requires >= 2 positive scales (throws std::invalid_argument
/// "need >= 2 points" / "scales must be positive").
ScalingStudy error_scaling_study(std::span<const double> scales,
                                 const PairState& base_state, Complex base_mu,
                                 int n_max);

}  // namespace bellsim
