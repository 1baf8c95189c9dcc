#include "chshlab/certify.hpp"

#include <algorithm>
#include <cmath>

#include "chshlab/behavior.hpp"
#include "chshlab/errors.hpp"
#include "chshlab/lhv.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/superquantum.hpp"

namespace chshlab {

std::vector<CertificationRow> certify(std::uint64_t seed, std::uint64_t samples) {
  if (samples == 0) throw RangeError("certify needs at least one random setting");
  std::vector<CertificationRow> rows;

  const auto classical = classical_max();
  rows.push_back({"classical-enumeration", kClassicalBound, static_cast<double>(classical.value), 0.0,
                  classical.value == 2 && classical.maximizers.size() == 16});

  Rng rng(seed);
  double worst_norm = 0.0;
  double worst_residual = 0.0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto settings = random_settings(rng);
    worst_norm = std::max(worst_norm, spectral_norm(chat(settings)));
    worst_residual = std::max(worst_residual, chat_squared_identity(settings));
  }
  rows.push_back({"tsirelson-spectral-norm", kTsirelsonBound, worst_norm, 1e-9, worst_norm <= kTsirelsonBound + 1e-9});

  const QuantumStrategy canonical{singlet_state(), canonical_maximal_settings()};
  const auto report = spectral_report(canonical);
  const double saturation = std::abs(report.chsh_expectation);
  rows.push_back({"tsirelson-singlet-saturation", kTsirelsonBound, saturation, 1e-12,
                  std::abs(saturation - kTsirelsonBound) <= 1e-12});
  worst_residual = std::max(worst_residual, report.identity_residual);
  rows.push_back({"chat-squared-identity", 0.0, worst_residual, 1e-12, worst_residual < 1e-12});

  const auto pr = pr_box();
  const double pr_value = chsh_value(correlations(pr));
  rows.push_back({"pr-box-saturation", kAlgebraicBound, pr_value, 0.0,
                  pr_value == kAlgebraicBound && no_signaling_check(pr).pass});

  const double p1 = pnorm_chsh_bound(PNormSpace(1.0));
  const double p2 = pnorm_chsh_bound(PNormSpace(2.0));
  const double pinf = pnorm_chsh_bound(PNormSpace::infinity());
  rows.push_back({"pnorm-p1", kAlgebraicBound, p1, 1e-12, std::abs(p1 - kAlgebraicBound) <= 1e-12});
  rows.push_back({"pnorm-p2", kTsirelsonBound, p2, 1e-12, std::abs(p2 - kTsirelsonBound) <= 1e-12});
  rows.push_back({"pnorm-pinf", kClassicalBound, pinf, 1e-12, std::abs(pinf - kClassicalBound) <= 1e-12});

  const auto degenerate = hbar_infinity_norm_check();
  rows.push_back({"degenerate-norm-chain", kAlgebraicBound, degenerate.degenerate_bound, 1e-12,
                  std::abs(degenerate.degenerate_bound - kAlgebraicBound) <= 1e-12 &&
                      std::abs(degenerate.difference) <= 1e-12});
  return rows;
}

}  // namespace chshlab
