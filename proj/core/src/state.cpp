#include "ringdyn/state.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ringdyn {

namespace {

void require_form(const RingState& state, StateForm form) {
  if (state.form() != form) {
    throw Error("state accessed in the wrong representation");
  }
}

}  // namespace

RingState RingState::from_complex(std::vector<std::complex<double>> amplitudes) {
  RingState s;
  s.form_ = StateForm::kComplex;
  s.size_ = static_cast<int>(amplitudes.size());
  s.complex_ = std::move(amplitudes);
  return s;
}

RingState RingState::from_polar(std::vector<double> amplitudes, std::vector<double> phases) {
  if (amplitudes.size() != phases.size()) {
    throw Error("polar state needs matching amplitude and phase lengths");
  }
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    if (amplitudes[j] < 0.0) {
      throw Error("polar amplitudes must be nonnegative");
    }
  }
  RingState s;
  s.form_ = StateForm::kPolar;
  s.size_ = static_cast<int>(amplitudes.size());
  s.amp_ = std::move(amplitudes);
  s.phase_ = std::move(phases);
  return s;
}

const std::vector<std::complex<double>>& RingState::complex_amplitudes() const {
  require_form(*this, StateForm::kComplex);
  return complex_;
}

const std::vector<double>& RingState::amplitudes() const {
  require_form(*this, StateForm::kPolar);
  return amp_;
}

const std::vector<double>& RingState::phases() const {
  require_form(*this, StateForm::kPolar);
  return phase_;
}

double reduce_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod can land exactly on two_pi after the correction when phi is a
  // tiny negative number.
  if (r >= two_pi) r = 0.0;
  return r;
}

RingState to_polar(const RingState& state) {
  if (state.form() == StateForm::kPolar) return state;
  const auto& a = state.complex_amplitudes();
  std::vector<double> amp(a.size());
  std::vector<double> phase(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double mag = std::abs(a[j]);
    if (mag <= kAmplitudeEpsilon) {
      throw AmplitudeUnderflow(static_cast<int>(j), mag);
    }
    amp[j] = mag;
    phase[j] = reduce_phase(std::arg(a[j]));
  }
  return RingState::from_polar(std::move(amp), std::move(phase));
}

RingState to_complex(const RingState& state) {
  if (state.form() == StateForm::kComplex) return state;
  const auto& amp = state.amplitudes();
  const auto& phase = state.phases();
  std::vector<std::complex<double>> a(amp.size());
  for (std::size_t j = 0; j < amp.size(); ++j) {
    a[j] = std::polar(amp[j], phase[j]);
  }
  return RingState::from_complex(std::move(a));
}

Eigen::VectorXd to_polar_vector(const RingState& state) {
  const RingState polar = to_polar(state);
  const int n = polar.size();
  Eigen::VectorXd y(2 * n);
  for (int j = 0; j < n; ++j) {
    y[amp_index(j)] = polar.amplitudes()[j];
    y[phase_index(j)] = polar.phases()[j];
  }
  return y;
}

RingState from_polar_vector(const Eigen::VectorXd& y) {
  if (y.size() % 2 != 0) throw Error("interleaved polar vector needs even length");
  const int n = static_cast<int>(y.size() / 2);
  std::vector<double> amp(n);
  std::vector<double> phase(n);
  for (int j = 0; j < n; ++j) {
    amp[j] = y[amp_index(j)];
    phase[j] = y[phase_index(j)];
  }
  return RingState::from_polar(std::move(amp), std::move(phase));
}

}  // namespace ringdyn
