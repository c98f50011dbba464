#include "ringdyn/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ringdyn/integrate.hpp"

namespace ringdyn {

namespace {

constexpr double kEigenResidualTol = 1e-9;
constexpr double kParityTol = 1e-12;
constexpr double kNeutralTol = 1e-9;
constexpr double kTraceZeroTol = 1e-12;

bool eigen_order(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

Eigen::Matrix4cd dk_matrix(double alpha, double beta, const std::complex<double>& zeta_k,
                           double psi) {
  const double s = std::sin(psi);
  const double c = std::cos(psi);
  const std::complex<double> z = 1.0 - zeta_k;
  const std::complex<double> zb = 1.0 - std::conj(zeta_k);
  Eigen::Matrix4cd d;
  d << std::complex<double>(-1.0), -beta * s * zb, std::complex<double>(0.0), beta * c * zb,
      beta * s * z, std::complex<double>(-1.0), beta * c * z, std::complex<double>(0.0),
      std::complex<double>(4.0 * alpha), -beta * c * zb, std::complex<double>(0.0), -beta * s * zb,
      -beta * c * z, std::complex<double>(4.0 * alpha), beta * s * z, std::complex<double>(0.0);
  return 0.5 * d;
}

std::complex<double> zeta_power(int n, int k) {
  return std::polar(1.0, 4.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n));
}

// Dense eigensolve with a residual check scaled to the matrix size;
// monodromy matrices of unstable flows can be numerically large.
std::vector<std::complex<double>> checked_eigenvalues(const Eigen::MatrixXcd& m,
                                                      double residual_scale) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw EigensolveFailure("eigensolver did not converge");
  }
  std::vector<std::complex<double>> values(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    const auto lambda = solver.eigenvalues()[i];
    const Eigen::VectorXcd v = solver.eigenvectors().col(i);
    const double residual = (m * v - lambda * v).norm();
    if (!(residual < kEigenResidualTol * residual_scale)) {
      throw EigensolveFailure("eigenpair residual " + std::to_string(residual) +
                              " exceeds tolerance");
    }
    values[i] = lambda;
  }
  std::sort(values.begin(), values.end(), eigen_order);
  return values;
}

}  // namespace

JacobianMatrix jacobian_analytic(const RingParams& params, double psi) {
  params.validate();
  const int n = params.n;
  const double s = std::sin(psi);
  const double c = std::cos(psi);
  const double b = params.beta;
  const double a4 = 4.0 * params.alpha;

  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int node = 0; node < n; ++node) {
    const int jm = (node + n - 1) % n;
    const int jp = (node + 1) % n;
    const double eps = (node % 2 == 0) ? 1.0 : -1.0;

    const int ra = amp_index(node);
    const int rp = phase_index(node);
    j(ra, amp_index(node)) += -1.0;
    j(ra, amp_index(jm)) += b * s;
    j(ra, amp_index(jp)) += -b * s;
    j(ra, phase_index(jm)) += eps * b * c;
    j(ra, phase_index(jp)) += -eps * b * c;

    j(rp, amp_index(node)) += a4;
    j(rp, amp_index(jm)) += -eps * b * c;
    j(rp, amp_index(jp)) += eps * b * c;
    j(rp, phase_index(jm)) += b * s;
    j(rp, phase_index(jp)) += -b * s;
  }
  return {std::move(j), psi};
}

SpectralBlock block_dk(const RingParams& params, double psi, int k) {
  params.validate();
  if (k < 0 || k >= params.pairs()) throw WavenumberOutOfRange(k, params.n);
  return {k, dk_matrix(params.alpha, params.beta, zeta_power(params.n, k), psi), psi};
}

Eigenvalues eigenvalues_closed_form(const RingParams& params, double psi, int k) {
  params.validate();
  if (k < 0 || k >= params.pairs()) throw WavenumberOutOfRange(k, params.n);

  const double m = static_cast<double>(params.quads());
  const double wave = 1.0 - std::cos(static_cast<double>(k) * std::numbers::pi / m);
  const double s = std::sin(psi);
  const double c = std::cos(psi);
  const double a = params.alpha;
  const double b = params.beta;

  const std::complex<double> inner =
      4.0 * b * std::sqrt(std::complex<double>(2.0 * (16.0 * a * a * c * c - s * s) * wave));
  const std::complex<double> base(1.0 - 8.0 * b * b * wave);

  Eigenvalues values;
  int idx = 0;
  for (const double inner_sign : {1.0, -1.0}) {
    const std::complex<double> root = std::sqrt(base + inner_sign * inner);
    for (const double outer_sign : {1.0, -1.0}) {
      values[idx++] = -0.25 + 0.25 * outer_sign * root;
    }
  }
  std::sort(values.begin(), values.end(), eigen_order);
  return values;
}

Eigenvalues eigenvalues_numeric(const Eigen::Matrix4cd& block) {
  if (!block.allFinite()) throw Error("eigenvalues_numeric: non-finite block entries");
  const auto values = checked_eigenvalues(block, 1.0);
  Eigenvalues out;
  std::copy(values.begin(), values.end(), out.begin());
  return out;
}

double spectral_distance(const Eigenvalues& a, const Eigenvalues& b) {
  std::array<int, 4> idx = {0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

StabilityVerdict spectrum_uniform(const RingParams& params, double psi) {
  params.validate();
  if (!params.uniform()) throw DetunedSystem(params.detuning);

  StabilityVerdict verdict;
  verdict.kind = SpectrumKind::kEigenvalues;
  verdict.per_block.reserve(params.pairs());
  double max_transverse = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < params.pairs(); ++k) {
    BlockSpectrum block{k, eigenvalues_closed_form(params, psi, k)};
    if (k != 0) {
      for (const auto& value : block.values) {
        max_transverse = std::max(max_transverse, value.real());
      }
    }
    verdict.per_block.push_back(std::move(block));
  }
  verdict.max_transverse = max_transverse;
  return verdict;
}

std::array<double, 4> floquet_block(const RingParams& params, int k, double psi0, long n_steps) {
  params.validate();
  if (params.detuning == 0.0) throw ZeroDetuning();
  if (k < 0 || k >= params.pairs()) throw WavenumberOutOfRange(k, params.n);

  const double period = 2.0 * std::numbers::pi / std::abs(params.detuning);
  const std::complex<double> zeta_k = zeta_power(params.n, k);
  const double alpha = params.alpha;
  const double beta = params.beta;
  const double detuning = params.detuning;
  const auto block_fn = [=](double t) {
    return dk_matrix(alpha, beta, zeta_k, psi0 + detuning * t);
  };
  const Eigen::Matrix4cd m = monodromy(block_fn, period, n_steps);
  const auto mu = checked_eigenvalues(m, std::max(1.0, m.norm()));

  std::array<double, 4> exponents;
  for (int i = 0; i < 4; ++i) {
    exponents[i] = std::log(std::abs(mu[i])) / period;
  }
  std::sort(exponents.rbegin(), exponents.rend());
  return exponents;
}

std::vector<double> floquet_exponents(const Eigen::MatrixXcd& monodromy_matrix, double period) {
  if (!(period > 0.0)) throw Error("floquet_exponents: period must be positive");
  const auto mu = checked_eigenvalues(monodromy_matrix, std::max(1.0, monodromy_matrix.norm()));
  std::vector<double> exponents(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    exponents[i] = std::log(std::abs(mu[i])) / period;
  }
  std::sort(exponents.rbegin(), exponents.rend());
  return exponents;
}

StabilityVerdict spectrum_alternating(const RingParams& params, long n_steps, double psi0) {
  params.validate();
  if (params.detuning == 0.0) throw ZeroDetuning();

  StabilityVerdict verdict;
  verdict.kind = SpectrumKind::kFloquetExponents;
  verdict.per_block.reserve(params.pairs());
  double max_transverse = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < params.pairs(); ++k) {
    const auto exponents = floquet_block(params, k, psi0, n_steps);
    BlockSpectrum block;
    block.wavenumber = k;
    for (int i = 0; i < 4; ++i) block.values[i] = exponents[i];
    if (k != 0) max_transverse = std::max(max_transverse, exponents[0]);
    verdict.per_block.push_back(std::move(block));
  }
  verdict.max_transverse = max_transverse;
  return verdict;
}

double parity_residual(const PhaseOnlyModel& model, int grid_points) {
  if (grid_points < 1) throw Error("parity_residual: grid must be nonempty");
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x =
        2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points);
    worst = std::max(worst, std::abs(model.coupling(x) + model.coupling(std::numbers::pi - x)));
  }
  return worst;
}

Eigen::MatrixXd phase_only_jacobian(const PhaseOnlyModel& model, int n, double psi) {
  if (n <= 0 || n % 4 != 0) throw BadRingSize(n);

  std::vector<double> phi(n);
  for (int j = 0; j < n; ++j) {
    switch (j % 4) {
      case 0: phi[j] = 0.0; break;
      case 1: phi[j] = psi; break;
      case 2: phi[j] = std::numbers::pi; break;
      default: phi[j] = psi + std::numbers::pi; break;
    }
  }

  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int node = 0; node < n; ++node) {
    const int jm = (node + n - 1) % n;
    const int jp = (node + 1) % n;
    const double gm = model.derivative(phi[jm] - phi[node]);
    const double gp = model.derivative(phi[jp] - phi[node]);
    j(node, jm) += gm;
    j(node, jp) += gp;
    j(node, node) += -(gm + gp);
  }
  return j;
}

PhaseOnlyReport phase_only_check(const PhaseOnlyModel& model, int n, double psi) {
  const double parity = parity_residual(model);
  if (parity > kParityTol) throw InadmissibleCoupling(parity);

  const Eigen::MatrixXd j = phase_only_jacobian(model, n, psi);
  PhaseOnlyReport report;
  report.trace = j.trace();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(j, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw EigensolveFailure("eigensolver did not converge");
  double max_abs_real = 0.0;
  double max_real = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double re = solver.eigenvalues()[i].real();
    max_abs_real = std::max(max_abs_real, std::abs(re));
    max_real = std::max(max_real, re);
  }
  report.max_real_part = max_real;

  if (max_abs_real <= kNeutralTol) {
    report.verdict = PhaseOnlyVerdict::kNeutral;
  } else if (std::abs(report.trace) <= kTraceZeroTol * static_cast<double>(n)) {
    report.verdict = PhaseOnlyVerdict::kNotAsymptoticallyStable;
  } else {
    report.verdict = PhaseOnlyVerdict::kUnconstrained;
  }
  return report;
}

}  // namespace ringdyn
