#include "chshlab/behavior.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "chshlab/errors.hpp"
#include "chshlab/kernels.hpp"

namespace chshlab {

namespace {

std::string cell_name(std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << "(a=" << a << ", b=" << b << ")";
  return os.str();
}

}  // namespace

void Behavior::validate(double tolerance) const {
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const double p = probs_[a * 8 + b * 4 + k];
        if (!std::isfinite(p) || p < -tolerance || p > 1.0 + tolerance) {
          throw ValidationError("behavior entry out of [0,1] in cell " + cell_name(a, b));
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > tolerance) {
        std::ostringstream os;
        os << "behavior not normalized in cell " << cell_name(a, b) << ": sum = " << sum;
        throw ValidationError(os.str());
      }
    }
  }
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::classical_compatible:
      return "classical-compatible";
    case Regime::quantum_compatible:
      return "quantum-compatible";
    case Regime::super_quantum:
      return "super-quantum";
    case Regime::maximal:
      return "maximal";
  }
  return "unknown";
}

CorrelationTable correlations(const Behavior& behavior, const ChshLabels& labels) {
  behavior.validate(kValidationTolerance);
  if (labels.a > 1 || labels.a_prime > 1 || labels.b > 1 || labels.b_prime > 1 ||
      labels.a == labels.a_prime || labels.b == labels.b_prime) {
    throw ValidationError("CHSH labels must assign distinct settings {0,1} to each party");
  }
  CorrelationTable table;
  table.labels = labels;
  const auto& p = behavior.probs();
  for (std::size_t cell = 0; cell < 4; ++cell) {
    const double* q = p.data() + cell * 4;
    table.E[cell] = ((q[0] - q[1]) - q[2]) + q[3];
  }
  return table;
}

double signed_chsh(const CorrelationTable& corr) noexcept {
  const auto& l = corr.labels;
  return ((corr(l.a, l.b) + corr(l.a, l.b_prime)) + corr(l.a_prime, l.b)) - corr(l.a_prime, l.b_prime);
}

double chsh_value(const CorrelationTable& corr) noexcept { return std::abs(signed_chsh(corr)); }

double signed_chsh(const Behavior& behavior) { return signed_chsh(correlations(behavior)); }

ChshReport classify(double value) {
  constexpr double tol = kValidationTolerance;
  if (!std::isfinite(value) || value < -tol || value > kAlgebraicBound + tol) {
    std::ostringstream os;
    os.precision(17);
    os << "CHSH value " << value << " outside [0, 4]";
    throw ImpossibleValueError(os.str());
  }
  ChshReport report;
  report.value = value;
  report.margin_classical = value - kClassicalBound;
  report.margin_quantum = value - kTsirelsonBound;
  report.margin_algebraic = value - kAlgebraicBound;
  if (value <= kClassicalBound + tol) {
    report.regime = Regime::classical_compatible;
  } else if (value <= kTsirelsonBound + tol) {
    report.regime = Regime::quantum_compatible;
  } else if (value < kAlgebraicBound - tol) {
    report.regime = Regime::super_quantum;
  } else {
    report.regime = Regime::maximal;
  }
  return report;
}

NoSignalingResult no_signaling_check(const Behavior& behavior, double tolerance) {
  NoSignalingResult result;
  for (Side side : {Side::alice, Side::bob}) {
    for (std::size_t own = 0; own < 2; ++own) {
      SignalingWitness w;
      w.side = side;
      w.setting = own;
      double worst = 0.0;
      for (std::size_t o = 0; o < 2; ++o) {
        const Outcome mine = outcome_at(o);
        for (std::size_t other = 0; other < 2; ++other) {
          double m = 0.0;
          for (std::size_t t = 0; t < 2; ++t) {
            const Outcome theirs = outcome_at(t);
            m += side == Side::alice ? behavior(own, other, mine, theirs)
                                     : behavior(other, own, theirs, mine);
          }
          (other == 0 ? w.marginal_0 : w.marginal_1)[o] = m;
        }
        const double diff = std::abs(w.marginal_0[o] - w.marginal_1[o]);
        worst = std::max(worst, diff);
        w.discrepancy += diff;
      }
      if (worst > tolerance) {
        result.pass = false;
        result.witness = w;
        return result;
      }
    }
  }
  return result;
}

Behavior mix(double q, const Behavior& first, const Behavior& second) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw RangeError("mixing weight must lie in [0, 1]");
  }
  Behavior::Table out{};
  kernels::active().mix(first.probs().data(), second.probs().data(), out.data(), Behavior::kSize, q);
  return Behavior(out);
}

Behavior uniform_noise() noexcept {
  Behavior::Table t;
  t.fill(0.25);
  return Behavior(t);
}

Behavior deterministic_behavior(Outcome A0, Outcome A1, Outcome B0, Outcome B1) noexcept {
  const std::array<Outcome, 2> alice{A0, A1};
  const std::array<Outcome, 2> bob{B0, B1};
  Behavior::Table t{};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      t[Behavior::index(a, b, alice[a], bob[b])] = 1.0;
    }
  }
  return Behavior(t);
}

void signed_chsh_batch(std::span<const double> tables, std::span<double> out) {
  if (tables.size() != out.size() * Behavior::kSize) {
    throw ValidationError("signed_chsh_batch: expected 16 entries per output");
  }
  kernels::active().signed_chsh(tables.data(), out.data(), out.size());
}

}  // namespace chshlab
