#include "chshlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chshlab/errors.hpp"

namespace chshlab {

namespace {

double length(const BlochVector& n) { return std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]); }

void require_unit(const BlochVector& n, const char* what) {
  for (double x : n) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + ": non-finite Bloch vector");
  }
  if (std::abs(length(n) - 1.0) > kUnitTolerance) {
    throw ValidationError(std::string(what) + ": Bloch vector is not of unit length");
  }
}

std::vector<cplx> as_vector(const TwoQubitState& s) { return {s.begin(), s.end()}; }

ComplexMatrix projector(const BlochVector& n, Outcome o) {
  ComplexMatrix p = observable(n) * cplx(value_of(o));
  p += ComplexMatrix::identity(2);
  return p * cplx(0.5);
}

void require_dichotomic(const ComplexMatrix& m, const char* what) {
  if (m.dim() == 0 || !all_finite(m)) throw ValidationError(std::string(what) + ": empty or non-finite operator");
  if (!is_hermitian(m, kValidationTolerance)) throw ValidationError(std::string(what) + ": operator is not Hermitian");
  if (frobenius_norm(m * m - ComplexMatrix::identity(m.dim())) > kValidationTolerance) {
    throw ValidationError(std::string(what) + ": operator does not square to the identity");
  }
}

}  // namespace

void MeasurementSettings::validate() const {
  require_unit(a, "setting a");
  require_unit(a_prime, "setting a'");
  require_unit(b, "setting b");
  require_unit(b_prime, "setting b'");
}

void validate_state(const TwoQubitState& state) {
  double n2 = 0.0;
  for (const auto& x : state) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw ValidationError("state has a non-finite amplitude");
    n2 += std::norm(x);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > kUnitTolerance) throw ValidationError("state is not normalized");
}

void QuantumStrategy::validate() const {
  validate_state(state);
  settings.validate();
}

BlochVector random_bloch_vector(Rng& rng) {
  while (true) {
    BlochVector v{rng.normal(), rng.normal(), rng.normal()};
    const double len = length(v);
    if (len < 1e-6) continue;
    for (double& x : v) x /= len;
    return v;
  }
}

MeasurementSettings random_settings(Rng& rng) {
  MeasurementSettings s;
  s.a = random_bloch_vector(rng);
  s.a_prime = random_bloch_vector(rng);
  s.b = random_bloch_vector(rng);
  s.b_prime = random_bloch_vector(rng);
  return s;
}

BlochVector coplanar_direction(double angle) noexcept { return {std::sin(angle), 0.0, std::cos(angle)}; }

MeasurementSettings coplanar_settings(double a, double a_prime, double b, double b_prime) noexcept {
  return {coplanar_direction(a), coplanar_direction(a_prime), coplanar_direction(b), coplanar_direction(b_prime)};
}

TwoQubitState singlet_state() noexcept {
  const double h = std::numbers::sqrt2 / 2.0;
  return {cplx(0.0), cplx(h), cplx(-h), cplx(0.0)};
}

MeasurementSettings canonical_maximal_settings() noexcept {
  const double h = std::numbers::sqrt2 / 2.0;
  return {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {-h, 0.0, -h}, {h, 0.0, -h}};
}

ComplexMatrix observable(const BlochVector& n) {
  require_unit(n, "observable");
  return ComplexMatrix(2, {cplx(n[2], 0.0), cplx(n[0], -n[1]), cplx(n[0], n[1]), cplx(-n[2], 0.0)});
}

OperatorQuadruple tensor_operators(const MeasurementSettings& settings) {
  settings.validate();
  const auto id = ComplexMatrix::identity(2);
  return {kron(observable(settings.a), id), kron(observable(settings.a_prime), id),
          kron(id, observable(settings.b)), kron(id, observable(settings.b_prime))};
}

ComplexMatrix chat(const MeasurementSettings& settings) {
  settings.validate();
  const auto A = observable(settings.a), Ap = observable(settings.a_prime);
  const auto B = observable(settings.b), Bp = observable(settings.b_prime);
  return kron(A, B) + kron(A, Bp) + kron(Ap, B) - kron(Ap, Bp);
}

double chat_squared_identity(const MeasurementSettings& settings) {
  const auto c = chat(settings);
  const auto A = observable(settings.a), Ap = observable(settings.a_prime);
  const auto B = observable(settings.b), Bp = observable(settings.b_prime);
  const auto rhs = ComplexMatrix::identity(4) * cplx(4.0) - kron(commutator(A, Ap), commutator(B, Bp));
  return frobenius_norm(c * c - rhs);
}

Behavior quantum_behavior(const QuantumStrategy& strategy) {
  strategy.validate();
  const auto psi = as_vector(strategy.state);
  const std::array<BlochVector, 2> alice{strategy.settings.a, strategy.settings.a_prime};
  const std::array<BlochVector, 2> bob{strategy.settings.b, strategy.settings.b_prime};
  Behavior::Table t{};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (Outcome A : {Outcome::plus, Outcome::minus}) {
        for (Outcome B : {Outcome::plus, Outcome::minus}) {
          const double p = std::real(expectation(kron(projector(alice[a], A), projector(bob[b], B)), psi));
          // Projector expectations are nonnegative up to rounding.
          t[Behavior::index(a, b, A, B)] = std::clamp(p, 0.0, 1.0);
        }
      }
    }
  }
  return Behavior(t);
}

double chsh_expectation(const QuantumStrategy& strategy) {
  strategy.validate();
  return std::real(expectation(chat(strategy.settings), as_vector(strategy.state)));
}

SpectralReport spectral_report(const QuantumStrategy& strategy) {
  strategy.validate();
  SpectralReport r;
  const auto c = chat(strategy.settings);
  r.chat_norm = spectral_norm(c);
  r.chsh_expectation = std::real(expectation(c, as_vector(strategy.state)));
  r.identity_residual = chat_squared_identity(strategy.settings);
  return r;
}

ComplexMatrix symmetrized_chat(const OperatorQuadruple& ops) {
  require_dichotomic(ops.A, "A");
  require_dichotomic(ops.A_prime, "A'");
  require_dichotomic(ops.B, "B");
  require_dichotomic(ops.B_prime, "B'");
  const std::size_t n = ops.A.dim();
  if (ops.A_prime.dim() != n || ops.B.dim() != n || ops.B_prime.dim() != n) {
    throw ValidationError("symmetrized_chat: operators must share one dimension");
  }
  auto c = anticommutator(ops.A, ops.B) + anticommutator(ops.A, ops.B_prime) +
           anticommutator(ops.A_prime, ops.B) - anticommutator(ops.A_prime, ops.B_prime);
  return c * cplx(0.5);
}

}  // namespace chshlab
