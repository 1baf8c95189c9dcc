#include "chshlab/superquantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chshlab/errors.hpp"

namespace chshlab {

Behavior pr_box() noexcept {
  Behavior::Table t{};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const bool target = (a & b) != 0;
      for (bool alpha : {false, true}) {
        const bool beta = alpha != target;
        t[Behavior::index(a, b, outcome_from_bit(alpha), outcome_from_bit(beta))] = 0.5;
      }
    }
  }
  return Behavior(t);
}

NoisyPrBox noisy_box(double X) {
  if (!(X >= 0.0 && X <= kAlgebraicBound)) throw RangeError("noisy box strength X must lie in [0, 4]");
  return {X, mix(X / 4.0, pr_box(), uniform_noise())};
}

PNormSpace::PNormSpace(double p) : p_(p) {
  if (std::isnan(p) || p < 1.0) throw ValidationError("l^p is a norm only for p >= 1");
  if (std::isinf(p)) p_.reset();
}

double PNormSpace::p() const {
  if (!p_) throw ValidationError("p is infinite");
  return *p_;
}

double pnorm(const PNormSpace& space, const PVector& v) {
  if (!std::isfinite(v.alpha) || !std::isfinite(v.beta)) throw ValidationError("pnorm: non-finite coefficient");
  const double x = std::abs(v.alpha), y = std::abs(v.beta);
  if (space.is_infinite()) return std::max(x, y);
  const double p = space.p();
  if (p == 1.0) return x + y;
  if (p == 2.0) return std::hypot(x, y);
  // Factor out the larger magnitude to avoid overflow in the powers.
  const double m = std::max(x, y);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(x / m, p) + std::pow(y / m, p), 1.0 / p);
}

double pnorm_chsh_bound(const PNormSpace& space) {
  if (space.is_infinite()) return 2.0;
  return 2.0 * std::exp2(1.0 / space.p());
}

double pnorm_chain(const PNormSpace& space, const PVector& b, const PVector& b_prime) {
  return pnorm(space, {b.alpha + b_prime.alpha, b.beta + b_prime.beta}) +
         pnorm(space, {b.alpha - b_prime.alpha, b.beta - b_prime.beta});
}

DegenerateNormReport hbar_infinity_norm_check() {
  const PVector e1{1.0, 0.0}, e2{0.0, 1.0};
  const PNormSpace l1(1.0), l2(2.0);

  DegenerateNormReport r;
  // ||B +/- B'|| replaced by ||B|| + ||B'|| for unit B, B', both terms of the chain.
  const double unit = 1.0;
  r.degenerate_bound = (unit + unit) + (unit + unit);
  r.p1_bound = pnorm_chain(l1, e1, e2);
  r.difference = r.degenerate_bound - r.p1_bound;
  r.euclidean_chain = pnorm_chain(l2, e1, e2);

  const double h = std::numbers::sqrt2 / 2.0;
  r.l1_rotated_chain = pnorm_chain(l1, {h, h}, {-h, h});
  r.rotation_discrepancy = r.p1_bound - r.l1_rotated_chain;
  return r;
}

}  // namespace chshlab
