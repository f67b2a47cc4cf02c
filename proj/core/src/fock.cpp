#include "bellsim/fock.hpp"

#include "bellsim/elements.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace bellsim {

namespace {

// Probability below which a boundary shell is considered unpopulated,
// both for admitting an input and for checking the propagated output.
constexpr double kLeakTol = 1e-6;

double boundary_probability(const FockState& state, const FockBasis& basis) {
  double prob = 0.0;
  for (int i = 0; i < basis.dimension(); ++i) {
    const auto occ = basis.occupations(i);
    const bool on_boundary = occ[0] == basis.n_max() || occ[1] == basis.n_max() ||
                             occ[2] == basis.n_max() || occ[3] == basis.n_max();
    if (on_boundary) prob += std::norm(state.amplitudes(i));
  }
  return prob;
}

}  // namespace

FockBasis::FockBasis(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const int per_mode = n_max + 1;
  dimension_ = per_mode * per_mode * per_mode * per_mode;
}

int FockBasis::index_of(const std::array<int, 4>& occupations) const {
  int index = 0;
  for (int n : occupations) {
    if (n < 0 || n > n_max_) throw std::out_of_range("occupation out of range");
    index = index * (n_max_ + 1) + n;
  }
  return index;
}

std::array<int, 4> FockBasis::occupations(int index) const {
  if (index < 0 || index >= dimension_) throw std::out_of_range("basis index out of range");
  std::array<int, 4> occ{};
  for (int k = 3; k >= 0; --k) {
    occ[k] = index % (n_max_ + 1);
    index /= n_max_ + 1;
  }
  return occ;
}

PumpedHamiltonian::PumpedHamiltonian(Complex kappa, const FockBasis& basis)
    : kappa_(kappa), basis_(basis),
      matrix_(Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension())) {
  // Fill the pair-creation entries; each conjugate entry is the matching
  // pair-annihilation matrix element, so the result is Hermitian.
  for (int i = 0; i < basis_.dimension(); ++i) {
    auto occ = basis_.occupations(i);
    if (occ[0] == basis_.n_max() || occ[2] == basis_.n_max()) continue;
    const double factor = std::sqrt(double(occ[0] + 1) * double(occ[2] + 1));
    auto raised = occ;
    ++raised[0];
    ++raised[2];
    const int j = basis_.index_of(raised);
    matrix_(j, i) += kappa_ * factor;
    matrix_(i, j) += std::conj(kappa_) * factor;
  }
}

FockState embed(const PairState& state, const FockBasis& basis) {
  if (basis.n_max() < 1) throw std::invalid_argument("increase n_max");
  FockState out{Eigen::VectorXcd::Zero(basis.dimension())};
  out.amplitudes(basis.index_of({0, 0, 0, 0})) = state.vacuum_amp;
  out.amplitudes(basis.index_of({1, 0, 1, 0})) = state.pair_amps(int(RectLabel::HH));
  out.amplitudes(basis.index_of({1, 0, 0, 1})) = state.pair_amps(int(RectLabel::HV));
  out.amplitudes(basis.index_of({0, 1, 1, 0})) = state.pair_amps(int(RectLabel::VH));
  out.amplitudes(basis.index_of({0, 1, 0, 1})) = state.pair_amps(int(RectLabel::VV));
  return out;
}

FockState propagate_exact(const FockState& state, const PumpedHamiltonian& ham,
                          double t) {
  const FockBasis& basis = ham.basis();
  if (state.amplitudes.size() != basis.dimension())
    throw std::invalid_argument("state dimension mismatch");
  const bool guard = boundary_probability(state, basis) < kLeakTol;
  const Eigen::MatrixXcd propagator =
      (Complex{0.0, -t} * ham.matrix()).exp();
  FockState out{propagator * state.amplitudes};
  if (guard && boundary_probability(out, basis) >= kLeakTol)
    throw std::runtime_error("increase n_max");
  return out;
}

ValidityReport validate_switch(const PairState& pair_state, Complex mu,
                               int n_max) {
  if (n_max < 2) throw std::invalid_argument("increase n_max");
  const FockBasis basis(n_max);
  // mu = -i kappa t with t = 1.
  const PumpedHamiltonian ham(Complex{0.0, 1.0} * mu, basis);
  const FockState input = embed(pair_state, basis);
  const FockState exact = propagate_exact(input, ham, 1.0);

  const PairState model = apply_switch(pair_state, SwitchSettings{mu, RectLabel::HH});
  const FockState model_fock = embed(model, basis);
  const Eigen::VectorXcd diff = exact.amplitudes - model_fock.amplitudes;

  ValidityReport report;
  const std::array<std::array<int, 4>, 5> tracked{{
      {0, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}};
  for (std::size_t k = 0; k < tracked.size(); ++k)
    report.amplitude_deviations[k] = std::abs(diff(basis.index_of(tracked[k])));
  report.vacuum_depletion =
      std::abs(exact.amplitudes(basis.index_of({0, 0, 0, 0})) - pair_state.vacuum_amp);
  report.double_pair_amp = exact.amplitudes(basis.index_of({2, 0, 2, 0}));
  report.max_deviation = diff.cwiseAbs().maxCoeff();
  report.norm_error = std::abs(exact.norm_sq() - input.norm_sq());
  return report;
}

ScalingStudy error_scaling_study(std::span<const double> scales,
                                 const PairState& base_state, Complex base_mu,
                                 int n_max) {
  if (scales.size() < 2) throw std::invalid_argument("need >= 2 points");
  for (double s : scales)
    if (!(s > 0.0)) throw std::invalid_argument("scales must be positive");

  ScalingStudy study;
  for (double s : scales) {
    PairState scaled = base_state;
    scaled.pair_amps *= s;
    const ValidityReport report = validate_switch(scaled, s * base_mu, n_max);
    study.rows.push_back({s, report.max_deviation});
  }

  std::vector<double> xs, ys;
  for (const ScalingRow& row : study.rows) {
    if (row.max_deviation > 0.0) {
      xs.push_back(std::log(row.scale));
      ys.push_back(std::log(row.max_deviation));
    }
  }
  if (xs.empty()) {
    study.exact = true;
    return study;
  }
  if (xs.size() < 2) return study;

  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    x_mean += xs[k];
    y_mean += ys[k];
  }
  x_mean /= double(xs.size());
  y_mean /= double(xs.size());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    num += (xs[k] - x_mean) * (ys[k] - y_mean);
    den += (xs[k] - x_mean) * (xs[k] - x_mean);
  }
  study.exponent = num / den;
  return study;
}

}  // namespace bellsim
