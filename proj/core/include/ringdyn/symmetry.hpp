#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/params.hpp"
#include "ringdyn/state.hpp"

namespace ringdyn {

/// Element of the ring symmetry group (dihedral rotations/reflections
/// times uniform phase shifts). Acting on complex states:
///
///   (op x)_j = e^{i theta} x_{perm(j)},
///   perm(j) = reflect ? N - j - r : j + r   (mod N)
///
/// i.e. the reflection j -> N - j is applied first, then rotation_power
/// steps of the rotation x_j -> x_{j+1}, then the phase shift.
struct SymmetryOp {
  int rotation_power = 0;
  bool reflect = false;
  double phase_shift = 0.0;

  static SymmetryOp rotation(int power) { return {power, false, 0.0}; }
  static SymmetryOp reflection() { return {0, true, 0.0}; }
  static SymmetryOp phase(double theta) { return {0, false, theta}; }
  /// Rotation by two nodes with a half-period phase advance; on complex
  /// states A_j -> -A_{j+2}. Generates the cyclic group of order N/2
  /// whose fixed points are the antiphase-cluster states.
  static SymmetryOp pi_rot2();
};

/// Composition: result acts as op2 after op1.
SymmetryOp compose(const SymmetryOp& op2, const SymmetryOp& op1);

/// Action of op on a state (either form; the output keeps the input form).
RingState apply(const SymmetryOp& op, const RingState& state);

/// Differential of the op on tangent (delta a, delta phi) coordinates:
/// the 2N x 2N node permutation. Phase shifts differentiate to the
/// identity in polar coordinates.
Eigen::MatrixXd tangent_representation(const SymmetryOp& op, int n);

/// Max over samples of || f(op x) - D(op) f(x) ||_inf for the polar
/// right-hand side f. Zero (to roundoff) exactly when op is a symmetry
/// of the flow.
double check_equivariance(const SymmetryOp& op, const RingParams& params,
                          const std::vector<RingState>& samples);

/// Coordinates on the invariant 2-torus of antiphase-cluster states:
/// reference phase theta and cluster phase difference psi.
struct DecoupledPoint {
  double theta = 0.0;
  double psi = 0.0;
};

/// The antiphase-cluster ("decoupled") state: unit amplitudes and phases
/// theta, theta+psi, theta+pi, theta+psi+pi cycling with j mod 4. Built
/// so that A_{j-1} + A_{j+1} = 0 holds exactly for every j, which
/// cancels the nearest-neighbor coupling term. Requires n = 4M.
RingState decoupled_state(const RingParams& params, const DecoupledPoint& point);

/// max_j | i beta (A_{j-1} - 2 A_j + A_{j+1}) + 2 i beta A_j |, the gap
/// between the true coupling and its on-set value -2 i beta A_j. Zero
/// exactly on the decoupled set; grows linearly with small transverse
/// perturbations, making it a distance-from-set measure.
double coupling_residual(const RingParams& params, const RingState& state);

/// Orthonormal wave-pattern basis attached to one wavenumber k: four
/// 2N-vectors supported on (even amplitude, even phase, odd amplitude,
/// odd phase) components with the pattern zeta^{k p} over the N/2
/// adjacent pairs p, zeta = e^{4 i pi / N}. Columns are eigenvectors of
/// the tangent representation of pi_rot2 with eigenvalue zeta^k.
struct SymmetryBasis {
  int wavenumber = 0;
  std::complex<double> zeta;  // e^{4 k i pi / N}
  Eigen::MatrixXcd columns;   // 2N x 4, orthonormal
};

SymmetryBasis symmetry_basis(int n, int k);

/// All N/2 wave-pattern bases side by side: a 2N x 2N unitary matrix
/// whose columns [4k, 4k+4) are symmetry_basis(n, k).
Eigen::MatrixXcd full_symmetry_basis(int n);

}  // namespace ringdyn
