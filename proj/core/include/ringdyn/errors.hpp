#pragma once

#include <stdexcept>
#include <string>

namespace ringdyn {

/// Base class for all ringdyn errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ring size is not a positive multiple of four. The antiphase-cluster
/// state closes around the ring only when N = 4M.
class BadRingSize : public Error {
 public:
  explicit BadRingSize(int n)
      : Error("ring size must be a positive multiple of 4, got " + std::to_string(n)), n_(n) {}
  int size() const { return n_; }

 private:
  int n_;
};

/// An oscillator amplitude at or below the underflow bound: the phase
/// representation (A/|A|, the 1/a factors) is singular there.
class AmplitudeUnderflow : public Error {
 public:
  AmplitudeUnderflow(int node, double magnitude, long step = -1)
      : Error(message(node, magnitude, step)), node_(node), magnitude_(magnitude), step_(step) {}
  int node() const { return node_; }
  double magnitude() const { return magnitude_; }
  long step() const { return step_; }  // -1 when not raised inside an integration

 private:
  static std::string message(int node, double magnitude, long step) {
    std::string m = "amplitude underflow at node " + std::to_string(node) + " (|A| = " +
                    std::to_string(magnitude) + ")";
    if (step >= 0) m += " during integration step " + std::to_string(step);
    return m;
  }
  int node_;
  double magnitude_;
  long step_;
};

class WavenumberOutOfRange : public Error {
 public:
  WavenumberOutOfRange(int k, int n)
      : Error("wavenumber " + std::to_string(k) + " outside [0, " + std::to_string(n / 2) +
              ") for ring size " + std::to_string(n)) {}
};

/// Static eigenvalues are requested for a detuned ring, where the cluster
/// phase difference drifts and Floquet analysis applies instead.
class DetunedSystem : public Error {
 public:
  explicit DetunedSystem(double detuning)
      : Error("operation requires zero detuning, got " + std::to_string(detuning)) {}
};

/// Floquet analysis is requested with zero detuning, where there is no
/// drift period; static eigenvalues apply instead.
class ZeroDetuning : public Error {
 public:
  ZeroDetuning() : Error("operation requires nonzero detuning") {}
};

/// Phase-only coupling function violates g(x) + g(pi - x) = 0, so the
/// antiphase-cluster pattern is not a solution of the phase-only ring.
class InadmissibleCoupling : public Error {
 public:
  explicit InadmissibleCoupling(double residual)
      : Error("coupling function fails the parity condition g(x) + g(pi - x) = 0 "
              "(max residual " + std::to_string(residual) + ")") {}
};

class EigensolveFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ringdyn
