#include <algorithm>
#include <cmath>
#include <numbers>

#include "chshlab/errors.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/random.hpp"

namespace chshlab {

namespace {

using Angles = std::array<double, 4>;

// Correlation tensor restricted to the x-z plane: T[i][j] = <psi| s_i (x) s_j |psi>,
// i, j in {x, z}. For coplanar settings E(alpha, beta) = n(alpha)^T T n(beta).
struct PlanarCorrelations {
  double xx, xz, zx, zz;

  explicit PlanarCorrelations(const TwoQubitState& state) {
    const std::vector<cplx> psi(state.begin(), state.end());
    const auto sx = observable({1.0, 0.0, 0.0});
    const auto sz = observable({0.0, 0.0, 1.0});
    xx = std::real(expectation(kron(sx, sx), psi));
    xz = std::real(expectation(kron(sx, sz), psi));
    zx = std::real(expectation(kron(sz, sx), psi));
    zz = std::real(expectation(kron(sz, sz), psi));
  }

  // T * (sin b, cos b) as (x, z) components.
  std::array<double, 2> apply(double sx, double cz) const { return {xx * sx + xz * cz, zx * sx + zz * cz}; }

  double correlation(double alpha, double beta) const {
    const auto v = apply(std::sin(beta), std::cos(beta));
    return std::sin(alpha) * v[0] + std::cos(alpha) * v[1];
  }

  double chsh(const Angles& t) const {
    return ((correlation(t[0], t[2]) + correlation(t[0], t[3])) + correlation(t[1], t[2])) -
           correlation(t[1], t[3]);
  }
};

double wrap(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

struct NelderMeadRun {
  Angles best{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Maximizes f by minimizing -f with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
template <class F>
NelderMeadRun nelder_mead(F&& f, const Angles& start, double step, int max_iterations, double tolerance) {
  constexpr std::size_t n = 4;
  std::array<Angles, n + 1> simplex;
  std::array<double, n + 1> cost;
  simplex[0] = start;
  for (std::size_t k = 0; k < n; ++k) {
    simplex[k + 1] = start;
    simplex[k + 1][k] += step;
  }
  for (std::size_t k = 0; k <= n; ++k) cost[k] = -f(simplex[k]);

  auto point = [](const Angles& base, const Angles& dir, double t) {
    Angles out;
    for (std::size_t k = 0; k < n; ++k) out[k] = base[k] + t * (dir[k] - base[k]);
    return out;
  };

  NelderMeadRun run;
  for (run.iterations = 0; run.iterations < max_iterations; ++run.iterations) {
    std::array<std::size_t, n + 1> order;
    for (std::size_t k = 0; k <= n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cost[x] < cost[y]; });
    const std::size_t lo = order[0], hi = order[n], second = order[n - 1];

    if (cost[hi] - cost[lo] <= tolerance) {
      run.converged = true;
      break;
    }

    Angles centroid{};
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == hi) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[k][d] / n;
    }

    const Angles reflected = point(centroid, simplex[hi], -1.0);
    const double fr = -f(reflected);
    if (fr < cost[lo]) {
      const Angles expanded = point(centroid, simplex[hi], -2.0);
      const double fe = -f(expanded);
      if (fe < fr) {
        simplex[hi] = expanded;
        cost[hi] = fe;
      } else {
        simplex[hi] = reflected;
        cost[hi] = fr;
      }
      continue;
    }
    if (fr < cost[second]) {
      simplex[hi] = reflected;
      cost[hi] = fr;
      continue;
    }
    const bool outside = fr < cost[hi];
    const Angles contracted = outside ? point(centroid, reflected, 0.5) : point(centroid, simplex[hi], 0.5);
    const double fc = -f(contracted);
    if (fc < std::min(fr, cost[hi])) {
      simplex[hi] = contracted;
      cost[hi] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == lo) continue;
      simplex[k] = point(simplex[lo], simplex[k], 0.5);
      cost[k] = -f(simplex[k]);
    }
  }

  const auto best = std::min_element(cost.begin(), cost.end()) - cost.begin();
  run.best = simplex[best];
  run.value = -cost[best];
  return run;
}

}  // namespace

GridOptimum coplanar_grid_search(const TwoQubitState& state, double step_degrees) {
  validate_state(state);
  if (!(step_degrees > 0.0) || step_degrees > 180.0) throw RangeError("grid step must lie in (0, 180] degrees");
  const PlanarCorrelations T(state);
  const auto count = static_cast<std::size_t>(std::llround(360.0 / step_degrees));
  std::vector<double> angle(count), s(count), c(count);
  for (std::size_t k = 0; k < count; ++k) {
    angle[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    s[k] = std::sin(angle[k]);
    c[k] = std::cos(angle[k]);
  }

  // The combination is n(a).T(b + b') + n(a').T(b - b'), so for each (b, b')
  // the best grid a and a' are found independently. The result equals an
  // exhaustive scan of all four angles on the grid.
  auto best_alice = [&](const std::array<double, 2>& u) {
    std::size_t arg = 0;
    double val = -INFINITY;
    for (std::size_t k = 0; k < count; ++k) {
      const double v = s[k] * u[0] + c[k] * u[1];
      if (v > val) {
        val = v;
        arg = k;
      }
    }
    return std::pair{arg, val};
  };

  GridOptimum best;
  best.value = -INFINITY;
  for (std::size_t ib = 0; ib < count; ++ib) {
    const auto tb = T.apply(s[ib], c[ib]);
    for (std::size_t ibp = 0; ibp < count; ++ibp) {
      const auto tbp = T.apply(s[ibp], c[ibp]);
      const auto [ia, va] = best_alice({tb[0] + tbp[0], tb[1] + tbp[1]});
      const auto [iap, vap] = best_alice({tb[0] - tbp[0], tb[1] - tbp[1]});
      if (va + vap > best.value) {
        best.value = va + vap;
        best.angles = {angle[ia], angle[iap], angle[ib], angle[ibp]};
      }
    }
  }
  best.value = T.chsh(best.angles);
  return best;
}

OptimizeResult optimize_settings(const TwoQubitState& state, std::uint64_t seed, const OptimizeOptions& options) {
  validate_state(state);
  if (options.max_iterations < 1 || options.restarts < 0 || !(options.simplex_tolerance > 0.0)) {
    throw RangeError("invalid optimizer options");
  }
  const PlanarCorrelations T(state);
  const auto grid = coplanar_grid_search(state, options.grid_step_degrees);
  const double step = options.grid_step_degrees * std::numbers::pi / 180.0;
  auto objective = [&](const Angles& t) { return T.chsh(t); };

  // Restarts are independent; selection is max by value, ties broken by the
  // lexicographically smaller angle vector, so the outcome does not depend on
  // evaluation order.
  Rng rng(seed);
  NelderMeadRun chosen;
  bool have = false;
  for (int r = 0; r <= options.restarts; ++r) {
    Angles start = grid.angles;
    if (r > 0) {
      for (double& x : start) x += (2.0 * rng.uniform() - 1.0) * step;
    }
    auto run = nelder_mead(objective, start, step, options.max_iterations, options.simplex_tolerance);
    for (double& x : run.best) x = wrap(x);
    if (!have || run.value > chosen.value || (run.value == chosen.value && run.best < chosen.best)) {
      chosen = run;
      have = true;
    }
  }

  OptimizeResult result;
  if (chosen.value < grid.value) {
    chosen.best = grid.angles;
    chosen.value = grid.value;
  }
  result.converged = chosen.converged;
  result.angles = chosen.best;
  result.settings = coplanar_settings(chosen.best[0], chosen.best[1], chosen.best[2], chosen.best[3]);
  result.value = chsh_expectation({state, result.settings});
  result.grid_value = grid.value;
  result.iterations = chosen.iterations;
  return result;
}

}  // namespace chshlab
