#pragma once

#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/model.hpp"

namespace ringdyn {

/// One classical fourth-order Runge-Kutta step of dx/dt = f(t, x).
/// Works for any state type with vector-space arithmetic (doubles,
/// Eigen vectors, Eigen matrices).
template <class State, class F>
State rk4_step(F&& f, const State& x, double t, double dt) {
  if (!(dt > 0.0)) throw Error("rk4_step: dt must be positive");
  const State k1 = f(t, x);
  const State k2 = f(t + 0.5 * dt, State(x + (0.5 * dt) * k1));
  const State k3 = f(t + 0.5 * dt, State(x + (0.5 * dt) * k2));
  const State k4 = f(t + dt, State(x + dt * k3));
  return State(x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// One trajectory sample: time and interleaved polar coordinates
/// (a_0, phi_0, ...), phases unwrapped.
struct OrbitSample {
  double t = 0.0;
  Eigen::VectorXd y;
};

using OrbitObserver = std::function<void(double t, const Eigen::VectorXd& y)>;

/// Fixed-step RK4 integration of the nonlinear ring from state0.
/// Returns samples at step indices divisible by sample_stride plus the
/// final step; phases are left unwrapped so drift stays measurable.
/// Deterministic for fixed inputs. AmplitudeUnderflow aborts with the
/// failing step index attached.
std::vector<OrbitSample> integrate_orbit(const RingParams& params, const RingState& state0,
                                         double dt, long n_steps, long sample_stride = 1,
                                         const OrbitObserver& observer = nullptr);

/// Monodromy matrix of the linear time-varying flow dV/dt = D(t) V over
/// [0, period]: the period-evolution of the identity basis, integrated by
/// RK4 with n_steps steps. block_fn(t) may return any square complex
/// Eigen matrix type (4x4 blocks or full 2Nx2N flows).
template <class BlockFn>
auto monodromy(BlockFn&& block_fn, double period, long n_steps) {
  using Matrix = std::decay_t<decltype(block_fn(0.0))>;
  if (!(period > 0.0)) throw Error("monodromy: period must be positive");
  if (n_steps < 1) throw Error("monodromy: n_steps must be >= 1");
  const Matrix d0 = block_fn(0.0);
  Matrix v = Matrix::Identity(d0.rows(), d0.cols());
  const double h = period / static_cast<double>(n_steps);
  const auto flow = [&block_fn](double s, const Matrix& w) -> Matrix { return block_fn(s) * w; };
  for (long i = 0; i < n_steps; ++i) {
    v = rk4_step(flow, v, h * static_cast<double>(i), h);
  }
  if (!v.allFinite()) throw Error("monodromy: non-finite entries during integration");
  return v;
}

}  // namespace ringdyn
