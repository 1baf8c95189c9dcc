#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "chshlab/behavior.hpp"
#include "chshlab/random.hpp"

namespace chshlab {

using Bits = std::vector<bool>;

/// n independent uses of noisy_box(X); every use is a fresh draw.
struct BoxEnsemble {
  std::size_t n = 0;
  double X = 4.0;
  std::uint64_t seed = 0;
};

/// One use of a box: Alice feeds x, Bob feeds y, each receives one bit.
struct BoxOutput {
  bool alpha = false;
  bool beta = false;
};

/// Samples P(A,B | a=x, b=y) of `box`, reporting outcomes as bits (A = 1 - 2*alpha).
BoxOutput use_box(const Behavior& box, bool x, bool y, Rng& rng);

/// Everything Bob holds when producing his answer. `message` is the single
/// bit Alice communicates; nothing else in this view depends on Alice's input.
struct BobView {
  Bits y;
  Bits outcomes;
  bool message = false;
};

/// Alice's one-bit message: the parity of her box outcomes.
bool alice_message(const Bits& alice_outcomes) noexcept;

/// Bob's answer: parity of his outcomes XOR the received bit.
bool bob_output(const BobView& view) noexcept;

struct ProtocolRun {
  Bits x;
  Bits y;
  bool transcript = false;  // the communicated bit
  bool output = false;
  bool correct = false;
};

/// <x, y> mod 2.
bool inner_product_mod2(const Bits& x, const Bits& y);

/// Inner-product protocol with one box per index. The ensemble seed and the
/// trial index select the random stream.
ProtocolRun vandam_inner_product(const Bits& x, const Bits& y, const BoxEnsemble& ensemble,
                                 std::uint64_t trial = 0);

/// Same protocol with an explicit box behavior and caller-owned stream.
ProtocolRun run_inner_product(const Bits& x, const Bits& y, const Behavior& box, Rng& rng);

/// Per-use failure probability of alpha XOR beta = x AND y under noisy_box(X): (4 - X)/8.
double box_error_probability(double X);

/// Success probability of the protocol with n noisy boxes: 1/2 (1 + (1 - 2 eps)^n).
double predicted_success(std::size_t n, double X);

struct CurveRow {
  double X = 0.0;
  double empirical = 0.0;
  double predicted = 0.0;
  std::uint64_t trials = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool is_threshold = false;  // the X_cc row
};

/// Empirical and predicted success on uniformly random inputs for every X in
/// the grid. A row at X_cc is added unless already present. Trials are split
/// into fixed-size chunks with one stream per (grid row, chunk).
std::vector<CurveRow> success_curve(std::size_t n, const std::vector<double>& X_grid, std::uint64_t trials,
                                    std::uint64_t seed);

inline constexpr std::uint64_t kTrialsPerChunk = 4096;

/// CSV with header "X,empirical,predicted,trials,n,seed" and a trailing
/// "# X_cc = 3.2659863237" line.
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);

}  // namespace chshlab
