#pragma once

#include <ostream>

#include "config.hpp"

namespace ringdyn::cli {

/// Trajectory of the ring from the antiphase-cluster point (theta0, psi0):
/// rows (t, a_0..a_{N-1}, phi_0..phi_{N-1}, theta, psi) with phi columns
/// reduced to [0, 2pi) and theta = phi_0, psi = phi_1 - phi_0 unwrapped.
void cmd_simulate(const RunConfig& config, std::ostream& out);

/// Static block spectra over the psi grid (uniform frequencies only):
/// rows (psi, k, re_1, im_1, re_2, im_2, re_3, im_3, re_4, im_4).
void cmd_eigs(const RunConfig& config, std::ostream& out);

/// Max transverse growth rate over (alpha, psi) cells, alpha outer:
/// rows (alpha, psi, max_transverse).
void cmd_sweep_uniform(const RunConfig& config, std::ostream& out, int workers = 1);

/// Max transverse Floquet exponent over (alpha, detuning) cells:
/// rows (alpha, omega_detuning, max_transverse_floquet).
void cmd_sweep_alternating(const RunConfig& config, std::ostream& out, int workers = 1);

/// Per-block Floquet exponents for one detuned configuration:
/// rows (k, exp_1, exp_2, exp_3, exp_4).
void cmd_floquet(const RunConfig& config, std::ostream& out);

}  // namespace ringdyn::cli
