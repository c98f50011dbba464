#include "ringdyn/integrate.hpp"

namespace ringdyn {

std::vector<OrbitSample> integrate_orbit(const RingParams& params, const RingState& state0,
                                         double dt, long n_steps, long sample_stride,
                                         const OrbitObserver& observer) {
  params.validate();
  if (!(dt > 0.0)) throw Error("integrate_orbit: dt must be positive");
  if (n_steps < 1) throw Error("integrate_orbit: n_steps must be >= 1");
  if (sample_stride < 1) throw Error("integrate_orbit: sample_stride must be >= 1");

  Eigen::VectorXd y = to_polar_vector(state0);
  const auto f = [&params](double, const Eigen::VectorXd& x) { return rhs_polar(params, x); };

  std::vector<OrbitSample> samples;
  samples.reserve(static_cast<std::size_t>(n_steps / sample_stride) + 2);
  const auto record = [&](long step) {
    const double t = dt * static_cast<double>(step);
    samples.push_back({t, y});
    if (observer) observer(t, y);
  };

  record(0);
  for (long step = 0; step < n_steps; ++step) {
    try {
      y = rk4_step(f, y, dt * static_cast<double>(step), dt);
    } catch (const AmplitudeUnderflow& e) {
      throw AmplitudeUnderflow(e.node(), e.magnitude(), step);
    }
    const long done = step + 1;
    if (done % sample_stride == 0 || done == n_steps) record(done);
  }
  return samples;
}

}  // namespace ringdyn
