#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace chshlab {

/// Dichotomic measurement outcome. The numeric value is the physical +1/-1.
enum class Outcome : std::int8_t { plus = 1, minus = -1 };

constexpr int value_of(Outcome o) noexcept { return static_cast<int>(o); }
constexpr std::size_t index_of(Outcome o) noexcept { return o == Outcome::plus ? 0 : 1; }
constexpr Outcome outcome_at(std::size_t i) noexcept { return i == 0 ? Outcome::plus : Outcome::minus; }

/// Maps a protocol bit to an outcome: A = 1 - 2*bit.
constexpr Outcome outcome_from_bit(bool bit) noexcept { return bit ? Outcome::minus : Outcome::plus; }
constexpr bool bit_from_outcome(Outcome o) noexcept { return o == Outcome::minus; }

inline constexpr double kClassicalBound = 2.0;
inline constexpr double kTsirelsonBound = 2.8284271247461903;  // 2*sqrt(2)
inline constexpr double kAlgebraicBound = 4.0;

inline constexpr double kConstructionTolerance = 1e-12;
inline constexpr double kValidationTolerance = 1e-9;
inline constexpr double kNoSignalingTolerance = 1e-9;

/// Full conditional distribution P(A,B|a,b) of the (2,2,2) CHSH scenario.
///
/// Entries are stored densely in lexicographic order (a, b, A, B) with the
/// outcomes ordered (+1, -1), so P(A,B|a,b) lives at a*8 + b*4 + iA*2 + iB.
/// The constructor stores the table as given; operations that need a valid
/// distribution call validate() and report the offending setting pair.
class Behavior {
 public:
  static constexpr std::size_t kSize = 16;
  using Table = std::array<double, kSize>;

  constexpr Behavior() noexcept : probs_{} {}
  explicit constexpr Behavior(const Table& probs) noexcept : probs_(probs) {}

  static constexpr std::size_t index(std::size_t a, std::size_t b, Outcome A, Outcome B) noexcept {
    return a * 8 + b * 4 + index_of(A) * 2 + index_of(B);
  }

  double operator()(std::size_t a, std::size_t b, Outcome A, Outcome B) const noexcept {
    return probs_[index(a, b, A, B)];
  }

  const Table& probs() const noexcept { return probs_; }

  /// Throws ValidationError if an entry leaves [0,1] or a setting pair is not
  /// normalized within `tolerance`.
  void validate(double tolerance = kValidationTolerance) const;

  friend bool operator==(const Behavior&, const Behavior&) = default;

 private:
  Table probs_;
};

/// Which setting index plays the role of a, a', b, b' in the CHSH combination.
struct ChshLabels {
  std::size_t a = 0;
  std::size_t a_prime = 1;
  std::size_t b = 0;
  std::size_t b_prime = 1;

  friend bool operator==(const ChshLabels&, const ChshLabels&) = default;
};

/// Expectation values E(a,b) = <A*B> for the four setting pairs.
struct CorrelationTable {
  std::array<double, 4> E{};  // index a*2 + b
  ChshLabels labels{};

  double operator()(std::size_t a, std::size_t b) const noexcept { return E[a * 2 + b]; }
};

enum class Regime { classical_compatible, quantum_compatible, super_quantum, maximal };

std::string to_string(Regime r);

struct ChshReport {
  double value = 0.0;
  Regime regime = Regime::classical_compatible;
  // Signed distances value - threshold.
  double margin_classical = 0.0;
  double margin_quantum = 0.0;
  double margin_algebraic = 0.0;
};

enum class Side { alice, bob };

struct SignalingWitness {
  Side side = Side::alice;
  std::size_t setting = 0;           // the setting of the marginal's own party
  std::array<double, 2> marginal_0{};  // P(outcome | own setting, other setting 0)
  std::array<double, 2> marginal_1{};  // P(outcome | own setting, other setting 1)
  double discrepancy = 0.0;          // L1 distance between the two marginals
};

struct NoSignalingResult {
  bool pass = true;
  std::optional<SignalingWitness> witness;
};

CorrelationTable correlations(const Behavior& behavior, const ChshLabels& labels = {});

/// E(a,b) + E(a,b') + E(a',b) - E(a',b'), before taking the absolute value.
double signed_chsh(const CorrelationTable& corr) noexcept;
double chsh_value(const CorrelationTable& corr) noexcept;

/// Convenience: signed combination straight from a behavior with default labels.
double signed_chsh(const Behavior& behavior);

ChshReport classify(double value);

NoSignalingResult no_signaling_check(const Behavior& behavior,
                                     double tolerance = kNoSignalingTolerance);

/// Entrywise q*first + (1-q)*second.
Behavior mix(double q, const Behavior& first, const Behavior& second);

/// P(A,B|a,b) = 1/4 everywhere.
Behavior uniform_noise() noexcept;

/// Point-mass behavior of a deterministic local strategy.
Behavior deterministic_behavior(Outcome A0, Outcome A1, Outcome B0, Outcome B1) noexcept;

/// Batched signed CHSH combination (default labels) over contiguous behavior
/// tables, 16 doubles per behavior. Uses the active SIMD kernel.
void signed_chsh_batch(std::span<const double> tables, std::span<double> out);

}  // namespace chshlab
