#include "bellsim/state.hpp"

#include <cmath>

#include <doctest.h>

using namespace bellsim;

namespace {

constexpr double kTight = 1e-15;

double vec_dev(const PairVector& a, const PairVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("bell vectors have the fixed component layout") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(vec_dev(bell_vector(BellLabel::psi_plus), PairVector{0.0, s, s, 0.0}) < kTight);
  CHECK(vec_dev(bell_vector(BellLabel::psi_minus), PairVector{0.0, -s, s, 0.0}) < kTight);
  CHECK(vec_dev(bell_vector(BellLabel::phi_plus), PairVector{s, 0.0, 0.0, s}) < kTight);
  CHECK(vec_dev(bell_vector(BellLabel::phi_minus), PairVector{s, 0.0, 0.0, -s}) < kTight);
}

TEST_CASE("bell vectors are orthonormal") {
  const BellLabel labels[] = {BellLabel::psi_plus, BellLabel::psi_minus,
                              BellLabel::phi_plus, BellLabel::phi_minus};
  for (BellLabel a : labels) {
    for (BellLabel b : labels) {
      const Complex overlap = bell_vector(a).dot(bell_vector(b));
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(std::abs(overlap - expected) < kTight);
    }
  }
}

TEST_CASE("rect vectors are one-hot at their own index") {
  for (int k = 0; k < kPairDim; ++k) {
    const PairVector v = rect_vector(RectLabel(k));
    for (int j = 0; j < kPairDim; ++j)
      CHECK(v(j) == (j == k ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
  }
}

TEST_CASE("make_downconversion_state scales the pair part only") {
  const Complex eps{0.01, -0.002};
  const PairState state = make_downconversion_state(eps, bell_vector(BellLabel::phi_plus));
  CHECK(state.vacuum_amp == Complex{1.0, 0.0});
  CHECK(vec_dev(state.pair_amps, eps * bell_vector(BellLabel::phi_plus)) < kTight);
  CHECK(state.pair_norm_sq() == doctest::Approx(std::norm(eps)).epsilon(1e-12));
  CHECK(state.total_norm_sq() == doctest::Approx(1.0 + std::norm(eps)).epsilon(1e-12));
}

TEST_CASE("pair_fidelity") {
  const PairState a = make_downconversion_state({0.01, 0.0}, bell_vector(BellLabel::psi_minus));

  SUBCASE("unity against itself and any global phase") {
    CHECK(pair_fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    PairState rotated = a;
    rotated.pair_amps *= Complex{0.0, 1.0};
    CHECK(pair_fidelity(a, rotated) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("zero against an orthogonal pair state") {
    const PairState b = make_downconversion_state({0.5, 0.0}, bell_vector(BellLabel::phi_plus));
    CHECK(pair_fidelity(a, b) < kTight);
  }
  SUBCASE("independent of amplitude scale") {
    const PairState b = make_downconversion_state({0.7, 0.0}, bell_vector(BellLabel::psi_minus));
    CHECK(pair_fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("throws when a pair part vanishes") {
    PairState vacuum_only;
    CHECK_THROWS_AS(pair_fidelity(a, vacuum_only), std::invalid_argument);
  }
}

TEST_CASE("states_close compares every amplitude") {
  PairState a = make_downconversion_state({0.01, 0.0}, rect_vector(RectLabel::HV));
  PairState b = a;
  CHECK(states_close(a, b, 0.0));
  b.pair_amps(3) += Complex{0.0, 2e-9};
  CHECK(states_close(a, b, 1e-8));
  CHECK_FALSE(states_close(a, b, 1e-9));
  b = a;
  b.vacuum_amp += 2e-9;
  CHECK_FALSE(states_close(a, b, 1e-9));
}

TEST_CASE("label round trips") {
  const BellLabel bells[] = {BellLabel::psi_plus, BellLabel::psi_minus,
                             BellLabel::phi_plus, BellLabel::phi_minus};
  for (BellLabel label : bells) CHECK(parse_bell_label(to_string(label)) == label);
  for (int k = 0; k < kPairDim; ++k) {
    const RectLabel label = RectLabel(k);
    CHECK(parse_rect_label(to_string(label)) == label);
  }
  CHECK_FALSE(parse_bell_label("psiplus").has_value());
  CHECK_FALSE(parse_bell_label("").has_value());
  CHECK_FALSE(parse_rect_label("hh").has_value());
  CHECK_FALSE(parse_rect_label("HHH").has_value());
}

}  // TEST_SUITE
