#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/model.hpp"
#include "ringdyn/state.hpp"
#include "ringdyn/symmetry.hpp"

namespace ringdyn::testing {

inline RingState random_state(int n, std::mt19937& rng, double amp_lo = 0.5,
                              double amp_hi = 1.5) {
  std::uniform_real_distribution<double> amp(amp_lo, amp_hi);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.141592653589793);
  std::vector<double> a(n);
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) {
    a[j] = amp(rng);
    p[j] = phase(rng);
  }
  return RingState::from_polar(std::move(a), std::move(p));
}

// Chain-rule oracle: the polar right-hand side obtained from the complex
// one via da/dt = Re(e^{-i phi} dA/dt), dphi/dt = Im(e^{-i phi} dA/dt)/a.
inline Eigen::VectorXd polar_rhs_via_complex(const RingParams& params, const RingState& state) {
  const RingState polar = to_polar(state);
  const auto da = rhs_complex(params, polar);
  Eigen::VectorXd out(2 * params.n);
  for (int j = 0; j < params.n; ++j) {
    const std::complex<double> rotated =
        std::polar(1.0, -polar.phases()[j]) * da[static_cast<std::size_t>(j)];
    out[amp_index(j)] = rotated.real();
    out[phase_index(j)] = rotated.imag() / polar.amplitudes()[j];
  }
  return out;
}

// Central-difference Jacobian of the polar right-hand side at the
// decoupled point; the independent oracle for the analytic linearization.
inline Eigen::MatrixXd finite_difference_jacobian(const RingParams& params, double theta,
                                                  double psi, double step) {
  const Eigen::VectorXd y0 = to_polar_vector(decoupled_state(params, {theta, psi}));
  const int dim = static_cast<int>(y0.size());
  Eigen::MatrixXd j(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Eigen::VectorXd yp = y0;
    Eigen::VectorXd ym = y0;
    yp[col] += step;
    ym[col] -= step;
    j.col(col) = (rhs_polar(params, yp) - rhs_polar(params, ym)) / (2.0 * step);
  }
  return j;
}

}  // namespace ringdyn::testing
