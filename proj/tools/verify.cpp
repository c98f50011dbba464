#include "verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>

#include "ringdyn/integrate.hpp"
#include "ringdyn/model.hpp"
#include "ringdyn/stability.hpp"
#include "ringdyn/symmetry.hpp"

namespace ringdyn::cli {

namespace {

constexpr double kPi = std::numbers::pi;

RingState random_state(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(0.5, 1.5);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::vector<double> a(n);
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) {
    a[j] = amp(rng);
    p[j] = phase(rng);
  }
  return RingState::from_polar(std::move(a), std::move(p));
}

// Chain rule between the two coordinate systems:
//   da/dt = Re(e^{-i phi} dA/dt),  dphi/dt = Im(e^{-i phi} dA/dt) / a.
Eigen::VectorXd polar_rhs_from_complex(const RingParams& params, const RingState& polar) {
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

double check_chain_rule() {
  std::mt19937 rng(101);
  RingParams params{8, 0.3, 1.1, 2.0, 0.15};
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RingState state = random_state(params.n, rng);
    const Eigen::VectorXd direct = rhs_polar(params, state);
    const Eigen::VectorXd transformed = polar_rhs_from_complex(params, state);
    worst = std::max(worst, (direct - transformed).cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_synchrony_coupling_zero() {
  std::mt19937 rng(102);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::complex<double> a = std::polar(1.0, phase(rng));
    // Discrete-Laplacian coupling with identical neighbors cancels term
    // by term in floating point, not just analytically.
    const std::complex<double> coupling = a - 2.0 * a + a;
    worst = std::max(worst, std::abs(coupling));
  }
  return worst;
}

double check_radial_fixed_point() {
  RingParams params{8, 0.4, 1.3, 2.0, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double psi = 2.0 * kPi * i / 32.0;
    const Eigen::VectorXd d = rhs_polar(params, decoupled_state(params, {0.3, psi}));
    for (int j = 0; j < params.n; ++j) {
      worst = std::max(worst, std::abs(d[amp_index(j)]));
    }
  }
  return worst;
}

double check_omega_shift() {
  std::mt19937 rng(103);
  RingParams base{8, 0.3, 1.1, 2.0, 0.1};
  RingParams shifted = base;
  shifted.omega = 3.7;
  const double delta = shifted.omega - base.omega;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const RingState state = random_state(base.n, rng);
    const Eigen::VectorXd d0 = rhs_polar(base, state);
    const Eigen::VectorXd d1 = rhs_polar(shifted, state);
    for (int j = 0; j < base.n; ++j) {
      worst = std::max(worst, std::abs(d1[amp_index(j)] - d0[amp_index(j)]));
      worst = std::max(worst, std::abs((d1[phase_index(j)] - d0[phase_index(j)]) - delta));
    }
  }
  return worst;
}

double check_rk4_order() {
  const auto decay = [](double, double x) { return -x; };
  const auto integrate = [&](double dt, long steps) {
    double x = 1.0;
    for (long i = 0; i < steps; ++i) x = rk4_step(decay, x, dt * i, dt);
    return x;
  };
  const double exact = std::exp(-1.0);
  const double coarse = std::abs(integrate(0.1, 10) - exact);
  const double fine = std::abs(integrate(0.05, 20) - exact);
  return std::abs(coarse / fine - 16.0);
}

double check_integrate_determinism() {
  RingParams params{8, 0.25, 1.0, 2.0, 0.2};
  const RingState state0 = decoupled_state(params, {0.1, 0.9});
  const auto a = integrate_orbit(params, state0, 0.01, 500, 10);
  const auto b = integrate_orbit(params, state0, 0.01, 500, 10);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, (a[i].y - b[i].y).cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_monodromy_composition() {
  RingParams params{8, 0.5, 1.0, 2.0, 0.4};
  const double period = 2.0 * kPi / params.detuning;
  const auto fn = [&](double t) { return block_dk(params, 0.2 + params.detuning * t, 1).matrix; };
  const Eigen::Matrix4cd full = monodromy(fn, period, 1000);
  const Eigen::Matrix4cd first = monodromy(fn, period / 2.0, 500);
  const auto shifted = [&](double t) { return fn(t + period / 2.0); };
  const Eigen::Matrix4cd second = monodromy(shifted, period / 2.0, 500);
  return (second * first - full).cwiseAbs().maxCoeff();
}

double check_group_law() {
  std::mt19937 rng(104);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> rot(0, 7);
  std::uniform_int_distribution<int> flip(0, 1);
  const int n = 8;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const SymmetryOp op1{rot(rng), flip(rng) == 1, phase(rng)};
    const SymmetryOp op2{rot(rng), flip(rng) == 1, phase(rng)};
    const RingState x = to_complex(random_state(n, rng));
    const auto lhs = apply(op2, apply(op1, x)).complex_amplitudes();
    const auto rhs = apply(compose(op2, op1), x).complex_amplitudes();
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
  }
  return worst;
}

double check_invariant_set_closure() {
  double worst = 0.0;
  for (const double detuning : {0.0, 0.2}) {
    RingParams params{8, 0.1, 1.0, 2.0, detuning};
    const RingState state0 = decoupled_state(params, {0.0, 1.1});
    const auto samples = integrate_orbit(params, state0, 0.01, 1000, 50);
    for (const auto& sample : samples) {
      worst = std::max(worst, coupling_residual(params, from_polar_vector(sample.y)));
    }
  }
  return worst;
}

double check_basis_orthonormality() {
  double worst = 0.0;
  for (const int n : {8, 16}) {
    for (int k = 0; k < n / 2; ++k) {
      const auto basis = symmetry_basis(n, k);
      const Eigen::Matrix4cd gram = basis.columns.adjoint() * basis.columns;
      worst = std::max(worst, (gram - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double check_basis_completeness() {
  double worst = 0.0;
  for (const int n : {8, 16}) {
    const Eigen::MatrixXcd u = full_symmetry_basis(n);
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    worst = std::max(
        worst, (gram - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_basis_eigenvector_property() {
  double worst = 0.0;
  const int n = 8;
  for (int k = 0; k < n / 2; ++k) {
    const auto basis = symmetry_basis(n, k);
    SymmetryOp op = SymmetryOp::pi_rot2();
    for (int m = 1; m < n / 2; ++m) {
      const Eigen::MatrixXd rep = tangent_representation(op, n);
      const std::complex<double> factor = std::pow(basis.zeta, m);
      worst = std::max(worst,
                       (rep * basis.columns - factor * basis.columns).cwiseAbs().maxCoeff());
      op = compose(SymmetryOp::pi_rot2(), op);
    }
  }
  return worst;
}

double check_jacobian_commutation() {
  std::mt19937 rng(105);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  const int n = 8;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RingParams params{n, ua(rng), ub(rng), 2.0, 0.0};
    const Eigen::MatrixXd j = jacobian_analytic(params, up(rng)).entries;
    SymmetryOp op = SymmetryOp::pi_rot2();
    for (int m = 1; m < n / 2; ++m) {
      const Eigen::MatrixXd rep = tangent_representation(op, n);
      worst = std::max(worst, (rep * j - j * rep).cwiseAbs().maxCoeff());
      op = compose(SymmetryOp::pi_rot2(), op);
    }
  }
  return worst;
}

double check_block_structure() {
  std::mt19937 rng(106);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (const int n : {8, 16}) {
    const Eigen::MatrixXcd u = full_symmetry_basis(n);
    for (int trial = 0; trial < 10; ++trial) {
      RingParams params{n, ua(rng), ub(rng), 2.0, 0.0};
      const Eigen::MatrixXcd conj =
          u.adjoint() * jacobian_analytic(params, up(rng)).entries * u;
      for (int bk = 0; bk < n / 2; ++bk) {
        for (int bl = 0; bl < n / 2; ++bl) {
          if (bk == bl) continue;
          worst = std::max(worst, conj.block(4 * bk, 4 * bl, 4, 4).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return worst;
}

double check_jacobian_finite_difference() {
  RingParams params{8, 0.25, 1.0, 2.0, 0.0};
  const double psi = 0.7;
  const double h = 1e-5;
  double worst = 0.0;
  for (const double theta : {0.0, 1.3}) {
    const Eigen::VectorXd y0 = to_polar_vector(decoupled_state(params, {theta, psi}));
    const Eigen::MatrixXd analytic = jacobian_analytic(params, psi).entries;
    for (int col = 0; col < y0.size(); ++col) {
      Eigen::VectorXd yp = y0;
      Eigen::VectorXd ym = y0;
      yp[col] += h;
      ym[col] -= h;
      const Eigen::VectorXd fd = (rhs_polar(params, yp) - rhs_polar(params, ym)) / (2.0 * h);
      worst = std::max(worst, (fd - analytic.col(col)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double check_closed_form_vs_numeric(int samples, const std::vector<int>& sizes, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    const int n = sizes[rng() % sizes.size()];
    RingParams params{n, ua(rng), ub(rng), 2.0, 0.0};
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const double psi = up(rng);
    worst = std::max(worst,
                     spectral_distance(eigenvalues_closed_form(params, psi, k),
                                       eigenvalues_numeric(block_dk(params, psi, k).matrix)));
  }
  return worst;
}

double check_reflection_symmetry() {
  std::mt19937 rng(108);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    RingParams params{8, ua(rng), ub(rng), 2.0, 0.0};
    const int k = static_cast<int>(rng() % 4u);
    const auto values = eigenvalues_closed_form(params, up(rng), k);
    Eigenvalues mirrored;
    for (int i = 0; i < 4; ++i) mirrored[i] = -0.5 - values[i];
    worst = std::max(worst, spectral_distance(values, mirrored));
  }
  return worst;
}

double check_psi_equivalence() {
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    RingParams params{8, ua(rng), 1.0, 2.0, 0.0};
    const double psi = up(rng);
    const int k = static_cast<int>(rng() % 4u);
    std::array<double, 4> reference;
    bool first = true;
    for (const double variant : {psi, kPi - psi, kPi + psi, 2.0 * kPi - psi}) {
      const auto values = eigenvalues_closed_form(params, variant, k);
      std::array<double, 4> reals;
      for (int i = 0; i < 4; ++i) reals[i] = values[i].real();
      std::sort(reals.rbegin(), reals.rend());
      if (first) {
        reference = reals;
        first = false;
      } else {
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(reals[i] - reference[i]));
      }
    }
  }
  return worst;
}

double check_conjugation_closure() {
  std::mt19937 rng(110);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RingParams params{8, ua(rng), 1.0, 2.0, 0.0};
    const double psi = up(rng);
    std::vector<std::complex<double>> all;
    for (int k = 0; k < params.pairs(); ++k) {
      const auto values = eigenvalues_closed_form(params, psi, k);
      all.insert(all.end(), values.begin(), values.end());
    }
    std::vector<std::complex<double>> conjugated(all.size());
    std::transform(all.begin(), all.end(), conjugated.begin(),
                   [](const std::complex<double>& v) { return std::conj(v); });
    const auto order = [](const std::complex<double>& a, const std::complex<double>& b) {
      if (a.real() != b.real()) return a.real() > b.real();
      return a.imag() > b.imag();
    };
    std::sort(all.begin(), all.end(), order);
    std::sort(conjugated.begin(), conjugated.end(), order);
    for (std::size_t i = 0; i < all.size(); ++i) {
      worst = std::max(worst, std::abs(all[i] - conjugated[i]));
    }
  }
  return worst;
}

double check_floquet_constant_limit() {
  RingParams params{8, 0.5, 1.0, 2.0, 0.2};
  const double period = 2.0 * kPi / params.detuning;
  double worst = 0.0;
  for (int k = 0; k < params.pairs(); ++k) {
    const double frozen_psi = 0.8;
    const auto fn = [&](double) { return block_dk(params, frozen_psi, k).matrix; };
    const auto exponents =
        floquet_exponents(monodromy(fn, period, 1000), period);
    const auto values = eigenvalues_closed_form(params, frozen_psi, k);
    std::array<double, 4> reals;
    for (int i = 0; i < 4; ++i) reals[i] = values[i].real();
    std::sort(reals.rbegin(), reals.rend());
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(exponents[i] - reals[i]));
  }
  return worst;
}

double check_floquet_k0() {
  // Detunings well away from the long-period regime, where |mu| for the
  // -1/2 pair underflows past what dense eigensolves resolve.
  double worst = 0.0;
  for (const double detuning : {0.2, 0.5, 2.0}) {
    RingParams params{8, 0.37, 1.2, 2.0, detuning};
    const auto exponents = floquet_block(params, 0, 0.4, 1000);
    const std::array<double, 4> expected = {0.0, 0.0, -0.5, -0.5};
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(exponents[i] - expected[i]));
  }
  return worst;
}

double check_phase_only_trace() {
  const PhaseOnlyModel cosine{[](double x) { return std::cos(x); },
                              [](double x) { return -std::sin(x); }};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double psi = 2.0 * kPi * i / 100.0;
    worst = std::max(worst, std::abs(phase_only_check(cosine, 8, psi).trace));
  }
  return worst;
}

double check_phase_only_sin_rejected() {
  const PhaseOnlyModel sine{[](double x) { return std::sin(x); },
                            [](double x) { return std::cos(x); }};
  try {
    phase_only_check(sine, 8, 0.7);
  } catch (const InadmissibleCoupling&) {
    return 0.0;
  }
  return 1.0;
}

}  // namespace

std::vector<VerifyResult> run_verification() {
  std::vector<VerifyResult> results;
  const auto add = [&results](const std::string& name, double measured, double tolerance) {
    results.push_back({name, measured, tolerance, measured <= tolerance});
  };

  add("model_chain_rule", check_chain_rule(), 1e-10);
  add("model_synchrony_coupling_zero", check_synchrony_coupling_zero(), 0.0);
  add("model_radial_fixed_point", check_radial_fixed_point(), 1e-14);
  add("model_omega_enters_phase_only", check_omega_shift(), 1e-12);
  add("rk4_order_ratio_minus_16", check_rk4_order(), 4.0);
  add("integrate_determinism", check_integrate_determinism(), 0.0);
  add("monodromy_composition", check_monodromy_composition(), 1e-9);
  add("symmetry_group_law", check_group_law(), 1e-14);
  add("invariant_set_closure", check_invariant_set_closure(), 1e-8);
  add("basis_orthonormality", check_basis_orthonormality(), 1e-14);
  add("basis_completeness", check_basis_completeness(), 1e-10);
  add("basis_eigenvector_property", check_basis_eigenvector_property(), 1e-12);
  add("jacobian_commutation", check_jacobian_commutation(), 1e-10);
  add("jacobian_block_structure", check_block_structure(), 1e-12);
  add("jacobian_finite_difference", check_jacobian_finite_difference(), 1e-6);
  add("closed_form_vs_numeric", check_closed_form_vs_numeric(500, {8, 12, 16}, 107), 1e-9);
  add("spectrum_reflection_symmetry", check_reflection_symmetry(), 1e-9);
  add("spectrum_psi_equivalence", check_psi_equivalence(), 1e-12);
  add("spectrum_conjugation_closure", check_conjugation_closure(), 1e-12);
  add("floquet_constant_limit", check_floquet_constant_limit(), 1e-6);
  add("floquet_k0_exponents", check_floquet_k0(), 1e-6);
  add("phase_only_cos_trace", check_phase_only_trace(), 1e-12);
  add("phase_only_sin_rejected", check_phase_only_sin_rejected(), 0.5);
  add("blocks_n256_smoke", check_closed_form_vs_numeric(128, {256}, 111), 1e-9);
  return results;
}

int cmd_verify(std::ostream& out) {
  const auto results = run_verification();
  int failures = 0;
  for (const auto& result : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%s,%.6e,%.6e,%s", result.name.c_str(), result.measured,
                  result.tolerance, result.passed ? "PASS" : "FAIL");
    out << line << "\n";
    if (!result.passed) ++failures;
  }
  return failures;
}

}  // namespace ringdyn::cli
