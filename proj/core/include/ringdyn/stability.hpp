#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/params.hpp"
#include "ringdyn/symmetry.hpp"

namespace ringdyn {

/// 2N x 2N linearization of the polar dynamics about the decoupled state
/// at cluster phase difference psi, in the interleaved tangent layout.
/// Independent of the reference phase theta.
struct JacobianMatrix {
  Eigen::MatrixXd entries;
  double psi = 0.0;
};

JacobianMatrix jacobian_analytic(const RingParams& params, double psi);

/// One 4x4 wave-pattern block of the symmetry-reduced linearization, in
/// the reported normalization (see block_dk). Component order:
/// (even amplitude, odd amplitude, even phase, odd phase).
struct SpectralBlock {
  int wavenumber = 0;
  Eigen::Matrix4cd matrix;
  double psi = 0.0;
};

/// The reduced block for wavenumber k. With z = 1 - zeta^k and
/// zb = 1 - zeta^{-k}, zeta = e^{4 i pi / N}:
///
///   D_k = 1/2 [ -1            -b sin(psi) zb   0              b cos(psi) zb
///               b sin(psi) z  -1               b cos(psi) z   0
///               4a            -b cos(psi) zb   0             -b sin(psi) zb
///              -b cos(psi) z   4a              b sin(psi) z   0 ]
///
/// Note the 1/2: all reported block spectra and Floquet exponents use
/// this normalization, which is half the raw tangent-flow rate. The raw
/// Jacobian restricted to the k-th wave-pattern subspace has spectrum
/// exactly 2x this block's (asserted in the test suite).
SpectralBlock block_dk(const RingParams& params, double psi, int k);

using Eigenvalues = std::array<std::complex<double>, 4>;

/// Closed-form spectrum of D_k, all four sign choices of
///
///   lambda = -1/4 +- 1/4 sqrt(1 - 8 b^2 (1 - cos(k pi / M))
///            +- 4 b sqrt(2 (16 a^2 cos^2 psi - sin^2 psi)(1 - cos(k pi / M))))
///
/// with principal complex square roots; the multiset does not depend on
/// the branch since both outer signs are taken. Sorted by descending
/// real part, ties by descending imaginary part.
Eigenvalues eigenvalues_closed_form(const RingParams& params, double psi, int k);

/// Dense eigensolve of a 4x4 complex block, sorted the same way.
/// Every returned pair satisfies ||D v - lambda v||_2 < 1e-9.
Eigenvalues eigenvalues_numeric(const Eigen::Matrix4cd& block);

/// Distance between two eigenvalue multisets: the best-case bottleneck
/// matching over all pairings.
double spectral_distance(const Eigenvalues& a, const Eigenvalues& b);

enum class SpectrumKind { kEigenvalues, kFloquetExponents };

struct BlockSpectrum {
  int wavenumber = 0;
  Eigenvalues values;  // Floquet exponents carry zero imaginary part
};

/// Per-block spectra plus the maximum transverse growth rate: the max
/// real part over every block with k != 0. The k = 0 block spans the
/// torus tangent directions (its neutral pair is reported in per_block
/// but never enters max_transverse).
struct StabilityVerdict {
  SpectrumKind kind = SpectrumKind::kEigenvalues;
  std::vector<BlockSpectrum> per_block;
  double max_transverse = 0.0;
};

/// Static spectra of all N/2 blocks for the uniform-frequency ring.
/// Throws DetunedSystem when detuning != 0 (static eigenvalues are not
/// the stability criterion once psi drifts).
StabilityVerdict spectrum_uniform(const RingParams& params, double psi);

/// Floquet exponents of one block for the detuned ring: integrates
/// dV/dt = D_k(psi0 + detuning * t) V over one drift period
/// T = 2 pi / |detuning| from the identity and returns ln|mu_i| / T for
/// the monodromy eigenvalues mu_i, sorted descending. Throws
/// ZeroDetuning when detuning == 0.
std::array<double, 4> floquet_block(const RingParams& params, int k, double psi0,
                                    long n_steps = 1000);

/// Floquet exponents ln|mu_i| / period of an already-built monodromy
/// matrix, sorted descending. Residuals are checked relative to the
/// matrix scale (monodromies of unstable flows grow large).
std::vector<double> floquet_exponents(const Eigen::MatrixXcd& monodromy_matrix, double period);

/// Floquet exponents of all N/2 blocks plus the max transverse exponent.
StabilityVerdict spectrum_alternating(const RingParams& params, long n_steps = 1000,
                                      double psi0 = 0.0);

/// Phase-only ring dphi_j/dt = w_j + g(phi_{j-1} - phi_j)
/// + g(phi_{j+1} - phi_j), used for the contrast with the full
/// phase-amplitude model. The analytic derivative is required so that
/// the Jacobian (and its trace) is exact rather than finite-differenced.
struct PhaseOnlyModel {
  std::function<double(double)> coupling;
  std::function<double(double)> derivative;
};

/// max over a grid of |g(x) + g(pi - x)|; the antiphase-cluster pattern
/// solves the phase-only ring only when this vanishes.
double parity_residual(const PhaseOnlyModel& model, int grid_points = 100);

/// N x N Jacobian of the phase-only ring at the antiphase-cluster phase
/// pattern with phase difference psi (unit coupling strength; the
/// frequency row drops out).
Eigen::MatrixXd phase_only_jacobian(const PhaseOnlyModel& model, int n, double psi);

enum class PhaseOnlyVerdict {
  kNeutral,                  // all eigenvalue real parts are zero
  kNotAsymptoticallyStable,  // zero trace with at least one nonzero real part
  kUnconstrained,            // nonzero trace: the zero-trace argument does not apply
};

struct PhaseOnlyReport {
  double trace = 0.0;
  double max_real_part = 0.0;
  PhaseOnlyVerdict verdict = PhaseOnlyVerdict::kNeutral;
};

/// Parity-checks the coupling (InadmissibleCoupling on failure), builds
/// the phase-only Jacobian and reports its trace, its maximum eigenvalue
/// real part and the resulting verdict. A zero trace forces the sum of
/// real parts to zero, so the pattern is never asymptotically stable.
PhaseOnlyReport phase_only_check(const PhaseOnlyModel& model, int n, double psi);

}  // namespace ringdyn
