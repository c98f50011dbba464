#pragma once

#include <cmath>

#include "ringdyn/errors.hpp"

namespace ringdyn {

/// Scalar parameters of the oscillator ring.
///
/// n oscillators (must be a positive multiple of 4) with Duffing
/// coefficient alpha, reactive nearest-neighbor coupling beta, mean
/// natural frequency omega and detuning: even nodes run at
/// omega - detuning/2 and odd nodes at omega + detuning/2. A detuning of
/// zero is the uniform-frequency ring.
struct RingParams {
  int n = 8;
  double alpha = 0.0;
  double beta = 0.0;
  double omega = 0.0;
  double detuning = 0.0;

  friend bool operator==(const RingParams&, const RingParams&) = default;

  void validate() const {
    if (n <= 0 || n % 4 != 0) throw BadRingSize(n);
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(omega) ||
        !std::isfinite(detuning)) {
      throw Error("ring parameters must be finite");
    }
  }

  bool uniform() const { return detuning == 0.0; }
  int pairs() const { return n / 2; }  // adjacent (even, odd) pairs
  int quads() const { return n / 4; }  // M in n = 4M
};

/// Natural frequency of one node: omega -/+ detuning/2 for even/odd index.
inline double natural_frequency(const RingParams& params, int node) {
  params.validate();
  if (node < 0 || node >= params.n) {
    throw std::out_of_range("node index " + std::to_string(node) + " outside ring of size " +
                            std::to_string(params.n));
  }
  return params.omega + (node % 2 == 0 ? -0.5 : 0.5) * params.detuning;
}

}  // namespace ringdyn
