#include "chshlab/commcomplexity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "chshlab/csv.hpp"
#include "chshlab/errors.hpp"
#include "chshlab/superquantum.hpp"

namespace chshlab {

BoxOutput use_box(const Behavior& box, bool x, bool y, Rng& rng) {
  const std::size_t a = x ? 1 : 0, b = y ? 1 : 0;
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t cell = 0;
  for (; cell < 3; ++cell) {
    acc += box.probs()[a * 8 + b * 4 + cell];
    if (u < acc) break;
  }
  // cell = iA*2 + iB with index 1 meaning outcome -1, i.e. bit 1.
  return {(cell & 2) != 0, (cell & 1) != 0};
}

bool alice_message(const Bits& alice_outcomes) noexcept {
  bool parity = false;
  for (bool bit : alice_outcomes) parity = parity != bit;
  return parity;
}

bool bob_output(const BobView& view) noexcept {
  bool parity = view.message;
  for (bool bit : view.outcomes) parity = parity != bit;
  return parity;
}

bool inner_product_mod2(const Bits& x, const Bits& y) {
  if (x.size() != y.size()) throw ValidationError("inner product needs equal-length inputs");
  bool parity = false;
  for (std::size_t i = 0; i < x.size(); ++i) parity = parity != (x[i] && y[i]);
  return parity;
}

ProtocolRun run_inner_product(const Bits& x, const Bits& y, const Behavior& box, Rng& rng) {
  if (x.size() != y.size()) throw ValidationError("protocol inputs x and y differ in length");
  Bits alice(x.size()), bob(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto out = use_box(box, x[i], y[i], rng);
    alice[i] = out.alpha;
    bob[i] = out.beta;
  }
  ProtocolRun run;
  run.x = x;
  run.y = y;
  run.transcript = alice_message(alice);
  run.output = bob_output(BobView{y, std::move(bob), run.transcript});
  run.correct = run.output == inner_product_mod2(x, y);
  return run;
}

ProtocolRun vandam_inner_product(const Bits& x, const Bits& y, const BoxEnsemble& ensemble, std::uint64_t trial) {
  if (x.size() != ensemble.n || y.size() != ensemble.n) {
    throw ValidationError("protocol inputs must have one bit per box in the ensemble");
  }
  const auto box = noisy_box(ensemble.X);
  Rng rng(ensemble.seed, trial);
  return run_inner_product(x, y, box.behavior, rng);
}

double box_error_probability(double X) {
  if (!(X >= 0.0 && X <= kAlgebraicBound)) throw RangeError("box strength X must lie in [0, 4]");
  return (4.0 - X) / 8.0;
}

double predicted_success(std::size_t n, double X) {
  const double bias = 1.0 - 2.0 * box_error_probability(X);
  return 0.5 * (1.0 + std::pow(bias, static_cast<double>(n)));
}

std::vector<CurveRow> success_curve(std::size_t n, const std::vector<double>& X_grid, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (n == 0) throw RangeError("success_curve needs at least one box");
  if (trials == 0) throw RangeError("success_curve needs at least one trial");
  for (double X : X_grid) {
    if (!(X >= 0.0 && X <= kAlgebraicBound)) throw RangeError("grid values of X must lie in [0, 4]");
  }

  std::vector<double> grid = X_grid;
  bool has_threshold = false;
  for (double X : grid) has_threshold = has_threshold || std::abs(X - kCommunicationThreshold) <= 1e-12;
  if (!has_threshold) {
    auto it = grid.begin();
    while (it != grid.end() && *it < kCommunicationThreshold) ++it;
    grid.insert(it, kCommunicationThreshold);
  }

  std::vector<CurveRow> rows;
  rows.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double X = grid[g];
    const auto box = noisy_box(X).behavior;
    std::uint64_t correct = 0;
    for (std::uint64_t chunk = 0, done = 0; done < trials; ++chunk) {
      Rng rng(seed, (static_cast<std::uint64_t>(g) << 32) | chunk);
      const std::uint64_t count = std::min(kTrialsPerChunk, trials - done);
      Bits x(n), y(n);
      for (std::uint64_t t = 0; t < count; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = rng.bit();
          y[i] = rng.bit();
        }
        correct += run_inner_product(x, y, box, rng).correct ? 1 : 0;
      }
      done += count;
    }
    CurveRow row;
    row.X = X;
    row.empirical = static_cast<double>(correct) / static_cast<double>(trials);
    row.predicted = predicted_success(n, X);
    row.trials = trials;
    row.n = n;
    row.seed = seed;
    row.is_threshold = std::abs(X - kCommunicationThreshold) <= 1e-12;
    rows.push_back(row);
  }
  return rows;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "X,empirical,predicted,trials,n,seed\n";
  for (const auto& r : rows) {
    os << format_g17(r.X) << ',' << format_g17(r.empirical) << ',' << format_g17(r.predicted) << ',' << r.trials
       << ',' << r.n << ',' << r.seed << '\n';
  }
  os << "# X_cc = 3.2659863237\n";
}

}  // namespace chshlab
