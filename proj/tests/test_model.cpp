#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "ringdyn/model.hpp"
#include "test_util.hpp"

using namespace ringdyn;
using ringdyn::testing::polar_rhs_via_complex;
using ringdyn::testing::random_state;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);
}  // namespace

TEST_CASE("natural frequency alternates around the mean") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.2};
  CHECK(natural_frequency(params, 0) == doctest::Approx(1.9).epsilon(1e-15));
  CHECK(natural_frequency(params, 1) == doctest::Approx(2.1).epsilon(1e-15));

  params.detuning = 0.0;
  for (int j = 0; j < params.n; ++j) CHECK(natural_frequency(params, j) == 2.0);

  RingParams odd{8, 0.0, 0.0, 0.0, 1.0};
  CHECK(natural_frequency(odd, 3) == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(natural_frequency(params, -1), std::out_of_range);
  CHECK_THROWS_AS(natural_frequency(params, 8), std::out_of_range);
  RingParams bad{6, 0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(natural_frequency(bad, 0), BadRingSize);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(RingParams{0}.validate(), BadRingSize);
  CHECK_THROWS_AS(RingParams{-4}.validate(), BadRingSize);
  CHECK_THROWS_AS(RingParams{10}.validate(), BadRingSize);
  RingParams nan_params{8, std::nan(""), 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(nan_params.validate(), Error);
  CHECK_NOTHROW(RingParams{12}.validate());
}

TEST_CASE("full synchrony cancels the coupling term") {
  RingParams params{4, 0.3, 1.7, 1.1, 0.0};
  const double phi = 0.8;
  std::vector<std::complex<double>> a(4, std::polar(1.0, phi));
  const auto d = rhs_complex(params, a);
  const std::complex<double> expected = kI * (params.omega + 2.0 * params.alpha) * a[0];
  for (int j = 0; j < 4; ++j) CHECK(std::abs(d[j] - expected) < 1e-14);
}

TEST_CASE("decoupled state drifts at omega + 2 alpha - 2 beta") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.0};
  const RingState state = decoupled_state(params, {0.4, 1.2});
  const auto d = rhs_complex(params, state);
  const auto& a = state.complex_amplitudes();
  for (int j = 0; j < params.n; ++j) {
    CHECK(std::abs(d[j] - kI * 0.2 * a[j]) < 1e-14);
  }

  // Same statement in polar form: amplitudes stationary, phases uniform.
  const Eigen::VectorXd dp = rhs_polar(params, state);
  for (int j = 0; j < params.n; ++j) {
    CHECK(std::abs(dp[amp_index(j)]) < 1e-14);
    CHECK(dp[phase_index(j)] == doctest::Approx(0.2).epsilon(1e-12));
  }
}

TEST_CASE("single uncoupled node") {
  RingParams params{4, 0.0, 0.0, 2.0, 0.0};
  std::vector<std::complex<double>> a = {{2.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
  const auto d = rhs_complex(params, a);
  CHECK(std::abs(d[0] - std::complex<double>(-1.0, 4.0)) < 1e-14);
}

TEST_CASE("amplitude underflow raises") {
  RingParams params{4, 0.1, 1.0, 2.0, 0.0};
  std::vector<std::complex<double>> a(4, std::complex<double>(1.0, 0.0));
  a[2] = 1e-9;
  CHECK_THROWS_AS(rhs_complex(params, a), AmplitudeUnderflow);

  Eigen::VectorXd y = Eigen::VectorXd::Ones(8);
  y[amp_index(1)] = 0.5e-8;
  try {
    rhs_polar(params, y);
    FAIL("expected AmplitudeUnderflow");
  } catch (const AmplitudeUnderflow& e) {
    CHECK(e.node() == 1);
    CHECK(e.step() == -1);
  }
}

TEST_CASE("identical phases at unit amplitude") {
  RingParams params{8, 0.3, 1.4, 2.0, 0.6};
  std::vector<double> amp(8, 1.0);
  std::vector<double> phase(8, 2.2);
  const Eigen::VectorXd d = rhs_polar(params, RingState::from_polar(amp, phase));
  for (int j = 0; j < params.n; ++j) {
    CHECK(std::abs(d[amp_index(j)]) < 1e-14);
    const double expected = natural_frequency(params, j) + 2.0 * params.alpha;
    CHECK(d[phase_index(j)] == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("polar and complex right-hand sides agree under the chain rule") {
  std::mt19937 rng(2024);
  for (const double detuning : {0.0, 0.35}) {
    RingParams params{8, 0.25, 1.0, 2.0, detuning};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const RingState state = random_state(params.n, rng);
      const Eigen::VectorXd direct = rhs_polar(params, state);
      const Eigen::VectorXd transformed = polar_rhs_via_complex(params, state);
      worst = std::max(worst, (direct - transformed).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("omega shifts only the phase derivatives") {
  std::mt19937 rng(7);
  RingParams base{8, 0.2, 0.9, 2.0, 0.1};
  RingParams shifted = base;
  shifted.omega = -1.4;
  const double delta = shifted.omega - base.omega;
  for (int trial = 0; trial < 20; ++trial) {
    const RingState state = random_state(base.n, rng);
    const Eigen::VectorXd d0 = rhs_polar(base, state);
    const Eigen::VectorXd d1 = rhs_polar(shifted, state);
    for (int j = 0; j < base.n; ++j) {
      CHECK(d1[amp_index(j)] == d0[amp_index(j)]);
      CHECK(std::abs(d1[phase_index(j)] - d0[phase_index(j)] - delta) < 1e-12);
    }
  }
}

TEST_CASE("polar/complex conversions") {
  const RingState i_state = RingState::from_complex({{0.0, 1.0}});
  const RingState i_polar = to_polar(i_state);
  CHECK(i_polar.amplitudes()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(i_polar.phases()[0] == doctest::Approx(kPi / 2).epsilon(1e-15));

  const RingState minus_one = to_polar(RingState::from_complex({{-1.0, 0.0}}));
  CHECK(minus_one.amplitudes()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(minus_one.phases()[0] == doctest::Approx(kPi).epsilon(1e-15));

  std::mt19937 rng(99);
  const RingState original = to_complex(random_state(8, rng));
  const RingState round_trip = to_complex(to_polar(original));
  for (int j = 0; j < 8; ++j) {
    CHECK(std::abs(round_trip.complex_amplitudes()[j] - original.complex_amplitudes()[j]) <
          1e-12);
  }

  CHECK_THROWS_AS(to_polar(RingState::from_complex({{0.0, 0.0}})), AmplitudeUnderflow);
  CHECK_THROWS_AS(RingState::from_polar({-0.5}, {0.0}), Error);
  CHECK_THROWS_AS(RingState::from_polar({1.0, 1.0}, {0.0}), Error);
}

TEST_CASE("reduce_phase lands in [0, 2pi)") {
  CHECK(reduce_phase(-kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(reduce_phase(7.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(reduce_phase(-1e-20) >= 0.0);
  CHECK(reduce_phase(-1e-20) < 2.0 * kPi);
  CHECK(reduce_phase(0.0) == 0.0);
}

TEST_CASE("wrong-form access is rejected") {
  const RingState polar = RingState::from_polar({1.0}, {0.5});
  CHECK_THROWS_AS(polar.complex_amplitudes(), Error);
  const RingState complex_form = RingState::from_complex({{1.0, 0.0}});
  CHECK_THROWS_AS(complex_form.amplitudes(), Error);
}
