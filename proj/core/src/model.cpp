#include "ringdyn/model.hpp"

#include <cmath>

namespace ringdyn {

std::vector<std::complex<double>> rhs_complex(
    const RingParams& params, const std::vector<std::complex<double>>& amplitudes) {
  params.validate();
  const int n = params.n;
  if (static_cast<int>(amplitudes.size()) != n) {
    throw Error("state length does not match ring size");
  }
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(amplitudes[j]);
    if (mag <= kAmplitudeEpsilon) throw AmplitudeUnderflow(j, mag);
  }

  const std::complex<double> i_unit(0.0, 1.0);
  std::vector<std::complex<double>> d(n);
  for (int j = 0; j < n; ++j) {
    const std::complex<double> a = amplitudes[j];
    const std::complex<double> left = amplitudes[(j + n - 1) % n];
    const std::complex<double> right = amplitudes[(j + 1) % n];
    const double w = natural_frequency(params, j);
    d[j] = -a + i_unit * w * a + 2.0 * i_unit * params.alpha * std::norm(a) * a + a / std::abs(a) +
           i_unit * params.beta * (left - 2.0 * a + right);
  }
  return d;
}

std::vector<std::complex<double>> rhs_complex(const RingParams& params, const RingState& state) {
  return rhs_complex(params, to_complex(state).complex_amplitudes());
}

Eigen::VectorXd rhs_polar(const RingParams& params, const Eigen::VectorXd& y) {
  params.validate();
  const int n = params.n;
  if (y.size() != 2 * n) throw Error("state length does not match ring size");
  for (int j = 0; j < n; ++j) {
    if (y[amp_index(j)] <= kAmplitudeEpsilon) throw AmplitudeUnderflow(j, y[amp_index(j)]);
  }

  Eigen::VectorXd d(2 * n);
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    const double a = y[amp_index(j)];
    const double am = y[amp_index(jm)];
    const double ap = y[amp_index(jp)];
    const double dm = y[phase_index(jm)] - y[phase_index(j)];
    const double dp = y[phase_index(jp)] - y[phase_index(j)];
    const double w = natural_frequency(params, j);

    d[amp_index(j)] =
        1.0 - a - params.beta * am * std::sin(dm) - params.beta * ap * std::sin(dp);
    d[phase_index(j)] = w + 2.0 * params.alpha * a * a - 2.0 * params.beta +
                        params.beta * (am / a) * std::cos(dm) +
                        params.beta * (ap / a) * std::cos(dp);
  }
  return d;
}

Eigen::VectorXd rhs_polar(const RingParams& params, const RingState& state) {
  return rhs_polar(params, to_polar_vector(state));
}

}  // namespace ringdyn
