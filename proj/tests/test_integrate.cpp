#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "ringdyn/integrate.hpp"
#include "ringdyn/stability.hpp"
#include "ringdyn/symmetry.hpp"
#include "test_util.hpp"

using namespace ringdyn;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rk4 single step matches the truncated exponential") {
  const auto decay = [](double, double x) { return -x; };
  const double stepped = rk4_step(decay, 1.0, 0.0, 0.1);
  // One step of the classical scheme on x' = -x is the quartic Taylor
  // polynomial of e^{-dt}.
  CHECK(stepped == doctest::Approx(0.9048375).epsilon(1e-14));
  CHECK(std::abs(stepped - std::exp(-0.1)) < 1e-7);

  const auto zero_field = [](double, const Eigen::VectorXd& x) {
    return Eigen::VectorXd(Eigen::VectorXd::Zero(x.size()));
  };
  Eigen::VectorXd x(3);
  x << 1.0, -2.0, 0.5;
  CHECK((rk4_step(zero_field, x, 0.0, 0.3) - x).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(rk4_step(decay, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(rk4_step(decay, 1.0, 0.0, -0.1), Error);
}

TEST_CASE("rk4 shows fourth-order convergence") {
  const auto decay = [](double, double x) { return -x; };
  const auto run = [&](double dt, long steps) {
    double x = 1.0;
    for (long i = 0; i < steps; ++i) x = rk4_step(decay, x, dt * i, dt);
    return x;
  };
  const double exact = std::exp(-1.0);
  const double coarse = std::abs(run(0.1, 10) - exact);
  const double fine = std::abs(run(0.05, 20) - exact);
  const double ratio = coarse / fine;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("decoupled orbit: unit amplitudes, uniform phase advance") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.0};
  const double psi = 1.2;
  const RingState state0 = decoupled_state(params, {0.0, psi});
  const Eigen::VectorXd y0 = to_polar_vector(state0);
  const auto samples = integrate_orbit(params, state0, 0.01, 1000, 1000);
  REQUIRE(samples.size() == 2);
  const Eigen::VectorXd& y = samples.back().y;
  const double advance = 10.0 * (params.omega + 2.0 * params.alpha - 2.0 * params.beta);
  for (int j = 0; j < params.n; ++j) {
    CHECK(std::abs(y[amp_index(j)] - 1.0) < 1e-9);
    CHECK(std::abs(y[phase_index(j)] - y0[phase_index(j)] - advance) < 1e-9);
  }
}

TEST_CASE("detuned orbit drifts the cluster phase difference linearly") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.2};
  const RingState state0 = decoupled_state(params, {0.0, kPi / 2});
  const auto samples = integrate_orbit(params, state0, 0.01, 1000, 100);
  const double psi0 = samples.front().y[phase_index(1)] - samples.front().y[phase_index(0)];
  for (const auto& sample : samples) {
    const double psi = sample.y[phase_index(1)] - sample.y[phase_index(0)];
    CHECK(std::abs(psi - psi0 - params.detuning * sample.t) < 1e-6);
  }
}

TEST_CASE("orbit preconditions and underflow reporting") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.0};
  const RingState state0 = decoupled_state(params, {0.0, 0.0});
  CHECK_THROWS_AS(integrate_orbit(params, state0, 0.01, 0), Error);
  CHECK_THROWS_AS(integrate_orbit(params, state0, -0.01, 10), Error);
  CHECK_THROWS_AS(integrate_orbit(params, state0, 0.01, 10, 0), Error);

  std::vector<double> amp(8, 1.0);
  std::vector<double> phase(8, 0.0);
  amp[3] = 2e-9;  // below the underflow bound
  try {
    integrate_orbit(params, RingState::from_polar(amp, phase), 0.01, 10);
    FAIL("expected AmplitudeUnderflow");
  } catch (const AmplitudeUnderflow& e) {
    CHECK(e.node() == 3);
    CHECK(e.step() == 0);
  }
}

TEST_CASE("orbits are bit-reproducible") {
  RingParams params{8, 0.25, 1.0, 2.0, 0.2};
  const RingState state0 = decoupled_state(params, {0.2, 0.7});
  const auto a = integrate_orbit(params, state0, 0.01, 300, 7);
  const auto b = integrate_orbit(params, state0, 0.01, 300, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK((a[i].y - b[i].y).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("observer sees every sampled state") {
  RingParams params{8, 0.1, 1.0, 2.0, 0.0};
  const RingState state0 = decoupled_state(params, {0.0, 0.3});
  int calls = 0;
  const auto samples = integrate_orbit(params, state0, 0.01, 100, 25,
                                       [&calls](double, const Eigen::VectorXd&) { ++calls; });
  CHECK(calls == static_cast<int>(samples.size()));
  CHECK(samples.size() == 5);  // steps 0, 25, 50, 75, 100
}

TEST_CASE("monodromy of the zero field is the identity") {
  const auto zero = [](double) { return Eigen::Matrix4cd(Eigen::Matrix4cd::Zero()); };
  const Eigen::Matrix4cd m = monodromy(zero, 2.0, 50);
  CHECK((m - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("monodromy of a constant scalar matrix is the exponential") {
  const std::complex<double> c(0.3, -0.8);
  const auto field = [&](double) { return Eigen::Matrix4cd(c * Eigen::Matrix4cd::Identity()); };
  const Eigen::Matrix4cd m = monodromy(field, 1.5, 400);
  const std::complex<double> expected = std::exp(c * 1.5);
  CHECK((m - expected * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("monodromy of a frozen block matches the spectral growth rates") {
  RingParams params{8, 0.4, 1.0, 2.0, 0.0};
  const double psi = 0.9;
  const double period = 3.0;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Matrix4cd block = block_dk(params, psi, k).matrix;
    const auto field = [&](double) { return block; };
    const Eigen::Matrix4cd m = monodromy(field, period, 2000);
    // Matrix-exponential oracle: |mu_i| = e^{period Re lambda_i}.
    const auto mu = eigenvalues_numeric(m);
    const auto lambda = eigenvalues_numeric(block);
    std::array<double, 4> grown;
    std::array<double, 4> observed;
    for (int i = 0; i < 4; ++i) {
      grown[i] = std::exp(period * lambda[i].real());
      observed[i] = std::abs(mu[i]);
    }
    std::sort(grown.begin(), grown.end());
    std::sort(observed.begin(), observed.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(grown[i] - observed[i]) < 1e-6);
  }
}

TEST_CASE("monodromy composes over half periods") {
  RingParams params{8, 0.5, 1.0, 2.0, 0.4};
  const double period = 2.0 * kPi / params.detuning;
  const auto field = [&](double t) {
    return block_dk(params, 0.2 + params.detuning * t, 2).matrix;
  };
  const Eigen::Matrix4cd full = monodromy(field, period, 2000);
  const Eigen::Matrix4cd first = monodromy(field, period / 2.0, 1000);
  const auto shifted = [&](double t) { return field(t + period / 2.0); };
  const Eigen::Matrix4cd second = monodromy(shifted, period / 2.0, 1000);
  CHECK((second * first - full).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("monodromy rejects bad arguments") {
  const auto zero = [](double) { return Eigen::Matrix4cd(Eigen::Matrix4cd::Zero()); };
  CHECK_THROWS_AS(monodromy(zero, 0.0, 10), Error);
  CHECK_THROWS_AS(monodromy(zero, 1.0, 0), Error);
}
