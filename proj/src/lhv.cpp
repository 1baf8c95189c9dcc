#include "chshlab/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "chshlab/errors.hpp"
#include "chshlab/random.hpp"

namespace chshlab {

void LhvModel::validate() const {
  if (weights.empty()) throw ValidationError("LHV model has no hidden states");
  if (weights.size() != responses.size()) {
    throw ValidationError("LHV model needs exactly one response table per weight");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw ValidationError("LHV weights must be finite and nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kConstructionTolerance) {
    throw ValidationError("LHV weights must sum to 1");
  }
}

Behavior lhv_to_behavior(const LhvModel& model) {
  model.validate();
  Behavior::Table t{};
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    const auto& r = model.responses[l];
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        t[Behavior::index(a, b, r.alice[a], r.bob[b])] += model.weights[l];
      }
    }
  }
  return Behavior(t);
}

Behavior lhv_sample(const LhvModel& model, std::uint64_t n, std::uint64_t seed) {
  model.validate();
  if (n == 0) throw RangeError("lhv_sample needs at least one draw");

  std::vector<double> cdf(model.weights.size());
  double acc = 0.0;
  for (std::size_t l = 0; l < cdf.size(); ++l) {
    acc += model.weights[l];
    cdf[l] = acc;
  }

  Behavior::Table counts{};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      Rng rng(seed, a * 2 + b);
      for (std::uint64_t k = 0; k < n; ++k) {
        // Scale by the accumulated total so rounding in the weights never
        // leaves a gap at the top of the CDF.
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t l = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
        const auto& r = model.responses[l];
        counts[Behavior::index(a, b, r.alice[a], r.bob[b])] += 1.0;
      }
    }
  }
  for (double& c : counts) c /= static_cast<double>(n);
  return Behavior(counts);
}

int chsh_of_strategy(const DeterministicStrategy& s) noexcept {
  const int A = value_of(s.A), Ap = value_of(s.A_prime), B = value_of(s.B), Bp = value_of(s.B_prime);
  return A * B + A * Bp + Ap * B - Ap * Bp;
}

std::vector<DeterministicStrategy> all_strategies() {
  std::vector<DeterministicStrategy> out;
  out.reserve(16);
  for (std::size_t code = 0; code < 16; ++code) {
    out.push_back({outcome_at((code >> 3) & 1), outcome_at((code >> 2) & 1), outcome_at((code >> 1) & 1),
                   outcome_at(code & 1)});
  }
  return out;
}

ClassicalMax classical_max() {
  ClassicalMax result;
  const auto strategies = all_strategies();
  for (const auto& s : strategies) result.value = std::max(result.value, std::abs(chsh_of_strategy(s)));
  for (const auto& s : strategies) {
    if (std::abs(chsh_of_strategy(s)) == result.value) result.maximizers.push_back(s);
  }
  return result;
}

Behavior strategy_behavior(const DeterministicStrategy& s) noexcept {
  return deterministic_behavior(s.A, s.A_prime, s.B, s.B_prime);
}

}  // namespace chshlab
