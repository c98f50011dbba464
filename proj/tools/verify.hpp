#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringdyn::cli {

struct VerifyResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs the library's invariant suite (model identities, integrator
/// order, symmetry algebra, spectra cross-checks, Floquet limits, the
/// phase-only contrast and an N=256 scaling smoke check).
std::vector<VerifyResult> run_verification();

/// Prints one CSV line per invariant (name,measured,tolerance,status)
/// and returns the number of failures.
int cmd_verify(std::ostream& out);

}  // namespace ringdyn::cli
