#include "ringdyn/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "ringdyn/model.hpp"

namespace ringdyn {

namespace {

int euclid_mod(int value, int n) {
  int r = value % n;
  if (r < 0) r += n;
  return r;
}

// Source index permutation of the op: (op x)_j = phase * x_{perm(j)}.
int perm_index(const SymmetryOp& op, int j, int n) {
  return euclid_mod(op.reflect ? n - j - op.rotation_power : j + op.rotation_power, n);
}

}  // namespace

SymmetryOp SymmetryOp::pi_rot2() { return {2, false, std::numbers::pi}; }

SymmetryOp compose(const SymmetryOp& op2, const SymmetryOp& op1) {
  SymmetryOp out;
  out.rotation_power = op2.rotation_power + (op2.reflect ? -op1.rotation_power : op1.rotation_power);
  out.reflect = op2.reflect != op1.reflect;
  out.phase_shift = reduce_phase(op1.phase_shift + op2.phase_shift);
  return out;
}

RingState apply(const SymmetryOp& op, const RingState& state) {
  const int n = state.size();
  if (state.form() == StateForm::kComplex) {
    const auto& in = state.complex_amplitudes();
    const std::complex<double> phase = std::polar(1.0, op.phase_shift);
    std::vector<std::complex<double>> out(in.size());
    for (int j = 0; j < n; ++j) {
      out[j] = phase * in[perm_index(op, j, n)];
    }
    return RingState::from_complex(std::move(out));
  }
  const auto& amp = state.amplitudes();
  const auto& phi = state.phases();
  std::vector<double> out_amp(amp.size());
  std::vector<double> out_phi(phi.size());
  for (int j = 0; j < n; ++j) {
    const int p = perm_index(op, j, n);
    out_amp[j] = amp[p];
    out_phi[j] = phi[p] + op.phase_shift;
  }
  return RingState::from_polar(std::move(out_amp), std::move(out_phi));
}

Eigen::MatrixXd tangent_representation(const SymmetryOp& op, int n) {
  Eigen::MatrixXd rep = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const int p = perm_index(op, j, n);
    rep(amp_index(j), amp_index(p)) = 1.0;
    rep(phase_index(j), phase_index(p)) = 1.0;
  }
  return rep;
}

double check_equivariance(const SymmetryOp& op, const RingParams& params,
                          const std::vector<RingState>& samples) {
  params.validate();
  const Eigen::MatrixXd rep = tangent_representation(op, params.n);
  double worst = 0.0;
  for (const RingState& sample : samples) {
    const Eigen::VectorXd fx = rhs_polar(params, sample);
    const Eigen::VectorXd fgx = rhs_polar(params, apply(op, to_polar(sample)));
    worst = std::max(worst, (fgx - rep * fx).cwiseAbs().maxCoeff());
  }
  return worst;
}

RingState decoupled_state(const RingParams& params, const DecoupledPoint& point) {
  params.validate();
  const int n = params.n;
  // Base pair evaluated once; the +pi companions are exact negations so
  // that A_{j-1} + A_{j+1} = 0 holds bitwise.
  const std::complex<double> even = std::polar(1.0, point.theta);
  const std::complex<double> odd = std::polar(1.0, point.theta + point.psi);
  std::vector<std::complex<double>> a(n);
  for (int j = 0; j < n; ++j) {
    switch (j % 4) {
      case 0: a[j] = even; break;
      case 1: a[j] = odd; break;
      case 2: a[j] = -even; break;
      default: a[j] = -odd; break;
    }
  }
  return RingState::from_complex(std::move(a));
}

double coupling_residual(const RingParams& params, const RingState& state) {
  params.validate();
  const RingState complex_form = to_complex(state);
  const auto& a = complex_form.complex_amplitudes();
  const int n = params.n;
  if (static_cast<int>(a.size()) != n) throw Error("state length does not match ring size");
  const std::complex<double> i_beta(0.0, params.beta);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::complex<double> coupling =
        i_beta * (a[(j + n - 1) % n] - 2.0 * a[j] + a[(j + 1) % n]);
    worst = std::max(worst, std::abs(coupling + 2.0 * i_beta * a[j]));
  }
  return worst;
}

SymmetryBasis symmetry_basis(int n, int k) {
  if (n <= 0 || n % 4 != 0) throw BadRingSize(n);
  if (k < 0 || k >= n / 2) throw WavenumberOutOfRange(k, n);

  const int pairs = n / 2;
  const double norm = 1.0 / std::sqrt(static_cast<double>(pairs));
  SymmetryBasis basis;
  basis.wavenumber = k;
  basis.zeta = std::polar(1.0, 4.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(n));
  basis.columns = Eigen::MatrixXcd::Zero(2 * n, 4);
  for (int p = 0; p < pairs; ++p) {
    // Angle built per entry rather than by repeated multiplication, so
    // column orthogonality holds to roundoff even for large rings.
    const std::complex<double> wave =
        std::polar(norm, 4.0 * std::numbers::pi * static_cast<double>(k) *
                             static_cast<double>(p) / static_cast<double>(n));
    const int even = 2 * p;
    const int odd = 2 * p + 1;
    basis.columns(amp_index(even), 0) = wave;
    basis.columns(amp_index(odd), 1) = wave;
    basis.columns(phase_index(even), 2) = wave;
    basis.columns(phase_index(odd), 3) = wave;
  }
  return basis;
}

Eigen::MatrixXcd full_symmetry_basis(int n) {
  if (n <= 0 || n % 4 != 0) throw BadRingSize(n);
  Eigen::MatrixXcd u(2 * n, 2 * n);
  for (int k = 0; k < n / 2; ++k) {
    u.block(0, 4 * k, 2 * n, 4) = symmetry_basis(n, k).columns;
  }
  return u;
}

}  // namespace ringdyn
