#include <doctest.h>

#include <cmath>
#include <limits>

#include "chshlab/errors.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/random.hpp"
#include "chshlab/superquantum.hpp"

using namespace chshlab;

namespace {

// Oracle: the PR box written out cell by cell from alpha XOR beta = a AND b.
double pr_cell(int a, int b, int alpha, int beta) { return ((alpha ^ beta) == (a & b)) ? 0.5 : 0.0; }

}  // namespace

TEST_CASE("pr_box") {
  const auto pr = pr_box();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
          CHECK(pr(a, b, outcome_from_bit(alpha), outcome_from_bit(beta)) == pr_cell(a, b, alpha, beta));

  const auto c = correlations(pr);
  CHECK(c(0, 0) == 1.0);
  CHECK(c(0, 1) == 1.0);
  CHECK(c(1, 0) == 1.0);
  CHECK(c(1, 1) == -1.0);
  CHECK(chsh_value(c) == 4.0);
  CHECK(classify(4.0).regime == Regime::maximal);
  CHECK(no_signaling_check(pr, 1e-9).pass);

  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(pr(a, b, Outcome::plus, Outcome::plus) + pr(a, b, Outcome::plus, Outcome::minus) == 0.5);
      CHECK(pr(a, b, Outcome::plus, Outcome::plus) + pr(a, b, Outcome::minus, Outcome::plus) == 0.5);
    }
}

TEST_CASE("noisy_box") {
  CHECK(noisy_box(4.0).behavior == pr_box());
  CHECK(noisy_box(0.0).behavior == uniform_noise());

  const auto cc = noisy_box(kCommunicationThreshold);
  CHECK(std::abs(kCommunicationThreshold - 4.0 * std::sqrt(2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(chsh_value(correlations(cc.behavior)) - kCommunicationThreshold) < 1e-12);
  CHECK(cc.X == kCommunicationThreshold);

  // Brute-force mixture oracle: each cell is q * PR + (1 - q) / 4.
  for (int k = 0; k <= 400; ++k) {
    const double X = k / 100.0;
    const auto box = noisy_box(X);
    const double q = X / 4.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int alpha = 0; alpha < 2; ++alpha)
          for (int beta = 0; beta < 2; ++beta)
            REQUIRE(std::abs(box.behavior(a, b, outcome_from_bit(alpha), outcome_from_bit(beta)) -
                             (q * pr_cell(a, b, alpha, beta) + (1.0 - q) * 0.25)) < 1e-15);
    REQUIRE(std::abs(chsh_value(correlations(box.behavior)) - X) < 1e-12);
    REQUIRE(no_signaling_check(box.behavior).pass);
  }

  CHECK_THROWS_AS(noisy_box(-0.01), RangeError);
  CHECK_THROWS_AS(noisy_box(4.0001), RangeError);
  CHECK_THROWS_AS(noisy_box(std::numeric_limits<double>::quiet_NaN()), RangeError);
}

TEST_CASE("PNormSpace") {
  CHECK(PNormSpace(1.0).p() == 1.0);
  CHECK(PNormSpace::infinity().is_infinite());
  CHECK(PNormSpace(std::numeric_limits<double>::infinity()).is_infinite());
  CHECK_THROWS_AS(PNormSpace(0.5), ValidationError);
  CHECK_THROWS_AS(PNormSpace(0.999), ValidationError);
  CHECK_THROWS_AS(PNormSpace(std::numeric_limits<double>::quiet_NaN()), ValidationError);
  CHECK_THROWS(PNormSpace::infinity().p());
}

TEST_CASE("pnorm") {
  CHECK(pnorm(PNormSpace(2), {3, 4}) == 5.0);
  CHECK(pnorm(PNormSpace(1), {1, 1}) == 2.0);
  CHECK(pnorm(PNormSpace::infinity(), {1, 1}) == 1.0);
  CHECK(pnorm(PNormSpace(1), {-1, 2}) == 3.0);
  CHECK(pnorm(PNormSpace::infinity(), {-5, 2}) == 5.0);
  CHECK(std::abs(pnorm(PNormSpace(3), {1, 1}) - std::cbrt(2.0)) < 1e-15);
  CHECK(pnorm(PNormSpace(3), {0, 0}) == 0.0);
  CHECK_THROWS_AS(pnorm(PNormSpace(2), {std::numeric_limits<double>::infinity(), 0}), ValidationError);

  // Large p approaches the max norm.
  CHECK(std::abs(pnorm(PNormSpace(200), {0.9, 1.0}) - 1.0) < 1e-9);
}

TEST_CASE("property: norm axioms on 10^4 random pairs per exponent") {
  Rng rng(11);
  const std::vector<PNormSpace> spaces{PNormSpace(1), PNormSpace(1.5), PNormSpace(2), PNormSpace(3), PNormSpace(10),
                                       PNormSpace::infinity()};
  for (const auto& space : spaces) {
    for (int k = 0; k < 10000; ++k) {
      const PVector u{rng.normal() * 3, rng.normal() * 3}, v{rng.normal() * 3, rng.normal() * 3};
      const double lam = rng.normal();
      const double nu = pnorm(space, u), nv = pnorm(space, v);
      REQUIRE(nu >= 0.0);
      REQUIRE(pnorm(space, {u.alpha + v.alpha, u.beta + v.beta}) <= nu + nv + 1e-12 * (nu + nv));
      REQUIRE(std::abs(pnorm(space, {lam * u.alpha, lam * u.beta}) - std::abs(lam) * nu) <= 1e-12 * (1 + nu));
    }
  }
}

TEST_CASE("p = 1/2 would violate the triangle inequality") {
  // The functional computed directly in test code, since the library refuses p < 1.
  const auto f = [](double a, double b) { return std::pow(std::sqrt(std::abs(a)) + std::sqrt(std::abs(b)), 2.0); };
  CHECK(f(1, 1) > f(1, 0) + f(0, 1));
  CHECK_THROWS_AS(PNormSpace(0.5), ValidationError);
}

TEST_CASE("pnorm_chsh_bound") {
  CHECK(pnorm_chsh_bound(PNormSpace(1)) == 4.0);
  CHECK(std::abs(pnorm_chsh_bound(PNormSpace(2)) - 2.8284271247461903) < 1e-12);
  CHECK(std::abs(pnorm_chsh_bound(PNormSpace(3)) - 2.5198421) < 1e-7);
  CHECK(pnorm_chsh_bound(PNormSpace::infinity()) == 2.0);

  // Matches the explicit chain on the basis vectors.
  for (double p : {1.0, 1.25, 2.0, 3.0, 7.5, 40.0})
    CHECK(std::abs(pnorm_chain(PNormSpace(p), {1, 0}, {0, 1}) - pnorm_chsh_bound(PNormSpace(p))) < 1e-12);
  CHECK(pnorm_chain(PNormSpace::infinity(), {1, 0}, {0, 1}) == 2.0);

  double prev = pnorm_chsh_bound(PNormSpace(1));
  for (int k = 1; k <= 1000; ++k) {
    const double cur = pnorm_chsh_bound(PNormSpace(1.0 + 0.05 * k));
    REQUIRE(cur < prev);
    prev = cur;
  }
  CHECK(std::abs(pnorm_chsh_bound(PNormSpace(1.0 + 1e-9)) - 4.0) < 1e-8);
  CHECK(std::abs(pnorm_chsh_bound(PNormSpace(1e9)) - 2.0) < 1e-8);
  CHECK(pnorm_chsh_bound(PNormSpace(1e9)) > pnorm_chsh_bound(PNormSpace::infinity()));
}

TEST_CASE("p = 2 bound agrees with the quantum optimizer") {
  const auto r = optimize_settings(singlet_state(), 5);
  CHECK(std::abs(pnorm_chsh_bound(PNormSpace(2)) - r.value) < 1e-9);
}

TEST_CASE("hbar_infinity_norm_check") {
  const auto r = hbar_infinity_norm_check();
  CHECK(r.degenerate_bound == 4.0);
  CHECK(std::abs(r.p1_bound - 4.0) < 1e-12);
  CHECK(std::abs(r.difference) < 1e-12);
  CHECK(std::abs(r.euclidean_chain - 2.0 * std::sqrt(2.0)) < 1e-12);
  CHECK(r.degenerate_bound > r.euclidean_chain);
  CHECK(std::abs(r.l1_rotated_chain - 2.0 * std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r.rotation_discrepancy - (4.0 - 2.0 * std::sqrt(2.0))) < 1e-12);
}
