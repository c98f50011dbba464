#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ringdyn/errors.hpp"

namespace ringdyn {

/// Amplitudes at or below this bound raise AmplitudeUnderflow instead of
/// producing near-singular derivatives.
inline constexpr double kAmplitudeEpsilon = 1e-8;

enum class StateForm { kComplex, kPolar };

/// Oscillator states of the ring, held either as complex amplitudes A_j
/// or as polar pairs (a_j, phi_j) with A_j = a_j e^{i phi_j}. Complex is
/// the canonical form for symmetry operations, polar for linearization
/// and integration. Phases are not reduced modulo 2pi unless produced by
/// to_polar.
class RingState {
 public:
  static RingState from_complex(std::vector<std::complex<double>> amplitudes);
  static RingState from_polar(std::vector<double> amplitudes, std::vector<double> phases);

  StateForm form() const { return form_; }
  int size() const { return size_; }

  // Valid only in the matching form.
  const std::vector<std::complex<double>>& complex_amplitudes() const;
  const std::vector<double>& amplitudes() const;
  const std::vector<double>& phases() const;

 private:
  RingState() = default;
  StateForm form_ = StateForm::kComplex;
  int size_ = 0;
  std::vector<std::complex<double>> complex_;
  std::vector<double> amp_;
  std::vector<double> phase_;
};

/// Polar form of a state; output phases lie in [0, 2pi).
/// Throws AmplitudeUnderflow when any |A_j| <= kAmplitudeEpsilon.
RingState to_polar(const RingState& state);

/// Complex form of a state.
RingState to_complex(const RingState& state);

/// Reduce an angle into [0, 2pi).
double reduce_phase(double phi);

// 2N-real tangent/coordinate layout: index 2j holds the amplitude
// component of node j, index 2j+1 the phase component.
inline int amp_index(int node) { return 2 * node; }
inline int phase_index(int node) { return 2 * node + 1; }

/// Interleaved polar coordinates (a_0, phi_0, a_1, phi_1, ...) of a state.
Eigen::VectorXd to_polar_vector(const RingState& state);

/// State from interleaved polar coordinates; phases kept as given.
RingState from_polar_vector(const Eigen::VectorXd& y);

}  // namespace ringdyn
