#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/params.hpp"
#include "ringdyn/state.hpp"

namespace ringdyn {

/// Right-hand side of the complex equations of motion, per node j
/// (indices modulo n):
///
///   dA_j/dt = -A_j + i w_j A_j + 2 i alpha |A_j|^2 A_j + A_j / |A_j|
///             + i beta (A_{j-1} - 2 A_j + A_{j+1})
///
/// Throws AmplitudeUnderflow when any |A_j| <= kAmplitudeEpsilon.
std::vector<std::complex<double>> rhs_complex(const RingParams& params,
                                              const std::vector<std::complex<double>>& amplitudes);
std::vector<std::complex<double>> rhs_complex(const RingParams& params, const RingState& state);

/// Right-hand side in polar coordinates, taking and returning the
/// interleaved layout (index 2j: da_j/dt, index 2j+1: dphi_j/dt):
///
///   da_j/dt   = 1 - a_j - beta a_{j-1} sin(phi_{j-1} - phi_j)
///                       - beta a_{j+1} sin(phi_{j+1} - phi_j)
///   dphi_j/dt = w_j + 2 alpha a_j^2 - 2 beta
///               + beta (a_{j-1}/a_j) cos(phi_{j-1} - phi_j)
///               + beta (a_{j+1}/a_j) cos(phi_{j+1} - phi_j)
Eigen::VectorXd rhs_polar(const RingParams& params, const Eigen::VectorXd& y);
Eigen::VectorXd rhs_polar(const RingParams& params, const RingState& state);

}  // namespace ringdyn
