#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "chshlab/errors.hpp"
#include "chshlab/linalg.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/random.hpp"

using namespace chshlab;

namespace {

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = cplx(rng.normal(), rng.normal());
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

std::vector<double> eigen_oracle(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) e(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

void check_decomposition(const ComplexMatrix& m) {
  const auto eig = hermitian_eigen(m);
  CHECK(reconstruction_residual(m, eig) < 1e-10);
  // Eigenvectors orthonormal.
  CHECK(frobenius_norm(eig.vectors.adjoint() * eig.vectors - ComplexMatrix::identity(m.dim())) < 1e-10);
  const auto oracle = eigen_oracle(m);
  const auto values = hermitian_eigenvalues(m);
  for (std::size_t k = 0; k < m.dim(); ++k) {
    CHECK(std::abs(eig.values[k] - oracle[k]) < 1e-11);
    CHECK(std::abs(values[k] - oracle[k]) < 1e-11);
  }
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const ComplexMatrix sx(2, {0.0, 1.0, 1.0, 0.0});
  const ComplexMatrix sy(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0});
  const ComplexMatrix sz(2, {1.0, 0.0, 0.0, -1.0});
  CHECK(frobenius_norm(commutator(sx, sy) - sz * cplx(0, 2)) == 0.0);
  CHECK(frobenius_norm(anticommutator(sx, sy)) == 0.0);
  CHECK(trace(kron(sz, sz)) == cplx(0.0));
  CHECK(kron(sx, sz).dim() == 4);
  CHECK(kron(sx, sz)(0, 2) == cplx(1.0));
  CHECK(kron(sx, sz)(1, 3) == cplx(-1.0));
  CHECK(is_hermitian(sy, 0.0));
  CHECK_FALSE(is_hermitian(sy * cplx(0, 1), 1e-12));
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0, 3.0}), ValidationError);
  CHECK_THROWS_AS(sx + ComplexMatrix(4), ValidationError);
}

TEST_CASE("real symmetric Jacobi") {
  const std::vector<double> a{4, 1, 2, 1, 3, 0, 2, 0, 1};
  const auto eig = jacobi_symmetric(a, 3);
  CHECK(eig.off_diagonal < 1e-14 * 6);
  // A v = lambda v for each row of `vectors`.
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t r = 0; r < 3; ++r) {
      double av = 0.0;
      for (std::size_t c = 0; c < 3; ++c) av += a[r * 3 + c] * eig.vectors[k * 3 + c];
      CHECK(std::abs(av - eig.values[k] * eig.vectors[k * 3 + r]) < 1e-12);
    }
  }
  CHECK(eig.values[0] <= eig.values[1]);
  CHECK(eig.values[1] <= eig.values[2]);
  CHECK(eig.values[0] + eig.values[1] + eig.values[2] == doctest::Approx(8.0));

  const auto diag = jacobi_symmetric({2, 0, 0, -1}, 2);
  CHECK(diag.sweeps == 0);
  CHECK(diag.values == std::vector<double>{-1, 2});
  CHECK_THROWS_AS(jacobi_symmetric({1, 2, 3}, 2), ValidationError);
  CHECK_THROWS_AS(jacobi_symmetric({1, NAN, NAN, 1}, 2), ValidationError);
}

TEST_CASE("Hermitian eigen-decomposition agrees with an independent solver") {
  Rng rng(17);
  for (int k = 0; k < 500; ++k) check_decomposition(random_hermitian(rng, 4));
  for (int k = 0; k < 100; ++k) check_decomposition(random_hermitian(rng, 2));
}

TEST_CASE("degenerate spectra are decomposed") {
  check_decomposition(ComplexMatrix::identity(4));
  check_decomposition(ComplexMatrix(4));
  // C at the maximal settings has the repeated eigenvalue 0.
  check_decomposition(chat(canonical_maximal_settings()));
  const auto c = coplanar_settings(0.0, 0.0, 0.3, 0.3);
  check_decomposition(chat(c));
  // Doubly degenerate complex eigenspaces.
  const ComplexMatrix sy(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0});
  check_decomposition(kron(sy, ComplexMatrix::identity(2)));
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(ComplexMatrix(2, {3.0, 0.0, 0.0, -5.0})) == doctest::Approx(5.0));
  CHECK(spectral_norm(chat(canonical_maximal_settings())) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(spectral_norm(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), ValidationError);
}

TEST_CASE("expectation") {
  const ComplexMatrix sz(2, {1.0, 0.0, 0.0, -1.0});
  CHECK(expectation(sz, {1.0, 0.0}) == cplx(1.0));
  CHECK(expectation(sz, {0.0, 1.0}) == cplx(-1.0));
  CHECK_THROWS_AS(expectation(sz, {1.0}), ValidationError);
}
