#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chshlab/behavior.hpp"

namespace chshlab {

/// Local responses of one hidden state: A(a, lambda) and B(b, lambda).
struct LocalResponse {
  std::array<Outcome, 2> alice{Outcome::plus, Outcome::plus};
  std::array<Outcome, 2> bob{Outcome::plus, Outcome::plus};

  friend bool operator==(const LocalResponse&, const LocalResponse&) = default;
};

/// Finite hidden-variable ensemble: weights rho(lambda) with one deterministic
/// response table per hidden state.
struct LhvModel {
  std::vector<double> weights;
  std::vector<LocalResponse> responses;

  /// Weights nonnegative and summing to one within 1e-12; one response per weight.
  void validate() const;
};

/// The four classical +/-1 variables A, A', B, B'.
struct DeterministicStrategy {
  Outcome A = Outcome::plus;
  Outcome A_prime = Outcome::plus;
  Outcome B = Outcome::plus;
  Outcome B_prime = Outcome::plus;

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

Behavior lhv_to_behavior(const LhvModel& model);

/// Empirical behavior from n draws of lambda for each setting pair. Each
/// setting pair (a,b) draws from its own stream (seed, 2a+b).
Behavior lhv_sample(const LhvModel& model, std::uint64_t n, std::uint64_t seed);

/// AB + AB' + A'B - A'B'; always +2 or -2.
int chsh_of_strategy(const DeterministicStrategy& s) noexcept;

/// All 16 deterministic strategies, in lexicographic (A, A', B, B') order with +1 first.
std::vector<DeterministicStrategy> all_strategies();

struct ClassicalMax {
  int value = 0;
  std::vector<DeterministicStrategy> maximizers;  // every strategy with |C| == value
};

ClassicalMax classical_max();

Behavior strategy_behavior(const DeterministicStrategy& s) noexcept;

}  // namespace chshlab
