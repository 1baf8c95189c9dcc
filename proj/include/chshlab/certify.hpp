#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chshlab {

/// One line of the bound certification table.
struct CertificationRow {
  std::string check;
  double bound = 0.0;      // the bound being certified (0 for residual checks)
  double attained = 0.0;   // worst or saturating value observed
  double tolerance = 0.0;
  bool passed = false;
};

/// Classical enumeration, Tsirelson spectral check over `samples` random
/// settings (plus saturation on the canonical singlet settings), the C^2
/// identity on the same settings, PR-box saturation and no-signaling, and the
/// l^p / degenerate-norm endpoints.
std::vector<CertificationRow> certify(std::uint64_t seed, std::uint64_t samples);

}  // namespace chshlab
