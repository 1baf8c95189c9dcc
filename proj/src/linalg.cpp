#include "chshlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>

#include "chshlab/errors.hpp"
#include "chshlab/kernels.hpp"

namespace chshlab {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries)
    : dim_(dim), data_(entries) {
  if (data_.size() != dim * dim) throw ValidationError("ComplexMatrix: entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ValidationError("ComplexMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ValidationError("ComplexMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw ValidationError("ComplexMatrix: dimension mismatch");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx x = lhs(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += x * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t n = lhs.dim(), m = rhs.dim();
  ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = lhs(i, j) * rhs(k, l);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y + y * x; }

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

cplx trace(const ComplexMatrix& m) {
  cplx t = 0.0;
  for (std::size_t k = 0; k < m.dim(); ++k) t += m(k, k);
  return t;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tolerance) return false;
    }
  }
  return true;
}

bool all_finite(const ComplexMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

cplx expectation(const ComplexMatrix& m, const std::vector<cplx>& v) {
  if (v.size() != m.dim()) throw ValidationError("expectation: vector length does not match matrix");
  cplx acc = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    cplx row = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) row += m(r, c) * v[c];
    acc += std::conj(v[r]) * row;
  }
  return acc;
}

namespace {

double off_diagonal_mass(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) s += a[r * n + c] * a[r * n + c];
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_symmetric(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw ValidationError("jacobi_symmetric: matrix size mismatch");
  for (double x : a) {
    if (!std::isfinite(x)) throw ValidationError("jacobi_symmetric: non-finite entry");
  }
  const auto& kern = kernels::active();

  std::vector<double> w(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) w[k * n + k] = 1.0;

  const double scale = std::max(1.0, std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0)));
  SymmetricEigen out;
  out.off_diagonal = off_diagonal_mass(a, n);
  while (out.off_diagonal >= kJacobiTolerance * scale && out.sweeps < kJacobiMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Rows of J^T A; columns follow by symmetry, then the pivot block is
        // set from the closed form.
        kern.rotate_rows(&a[p * n], &a[q * n], n, c, s);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a[k * n + p] = a[p * n + k];
          a[k * n + q] = a[q * n + k];
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        kern.rotate_rows(&w[p * n], &w[q * n], n, c, s);
      }
    }
    ++out.sweeps;
    out.off_diagonal = off_diagonal_mass(a, n);
  }
  if (out.off_diagonal >= kJacobiTolerance * scale) {
    throw std::runtime_error("jacobi_symmetric: no convergence within the sweep cap");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a[order[k] * n + order[k]];
    std::copy_n(&w[order[k] * n], n, &out.vectors[k * n]);
  }
  return out;
}

namespace {

std::vector<double> embed(const ComplexMatrix& m) {
  const std::size_t n = m.dim(), N = 2 * n;
  std::vector<double> r(N * N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx x = m(i, j);
      r[i * N + j] = x.real();
      r[i * N + j + n] = -x.imag();
      r[(i + n) * N + j] = x.imag();
      r[(i + n) * N + j + n] = x.real();
    }
  }
  return r;
}

SymmetricEigen embedded_eigen(const ComplexMatrix& m) {
  if (!all_finite(m)) throw ValidationError("hermitian_eigen: non-finite entry");
  if (!is_hermitian(m, 1e-12 * std::max(1.0, frobenius_norm(m)))) {
    throw ValidationError("hermitian_eigen: matrix is not Hermitian");
  }
  return jacobi_symmetric(embed(m), 2 * m.dim());
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

double norm(const std::vector<cplx>& x) { return std::sqrt(std::real(inner(x, x))); }

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const auto eig = embedded_eigen(m);
  std::vector<double> values(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) values[k] = 0.5 * (eig.values[2 * k] + eig.values[2 * k + 1]);
  return values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  const std::size_t n = m.dim(), N = 2 * n;
  const auto eig = embedded_eigen(m);

  std::vector<std::vector<cplx>> candidates(N, std::vector<cplx>(n));
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < n; ++i) candidates[k][i] = {eig.vectors[k * N + i], eig.vectors[k * N + i + n]};
  }

  // Greedy complex Gram-Schmidt: always take the candidate with the largest
  // component outside the span accepted so far. Each complex eigenspace of
  // dimension d shows up as 2d real eigenvectors, so the images span C^n.
  std::vector<std::vector<cplx>> accepted;
  std::vector<bool> used(N, false);
  while (accepted.size() < n) {
    std::size_t best = N;
    double best_norm = -1.0;
    std::vector<cplx> best_vec;
    for (std::size_t k = 0; k < N; ++k) {
      if (used[k]) continue;
      auto v = candidates[k];
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : accepted) {
          const cplx proj = inner(u, v);
          for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
        }
      }
      const double r = norm(v);
      if (r > best_norm) {
        best_norm = r;
        best = k;
        best_vec = std::move(v);
      }
    }
    used[best] = true;
    for (auto& x : best_vec) x /= best_norm;
    accepted.push_back(std::move(best_vec));
  }

  std::vector<double> rayleigh(n);
  for (std::size_t k = 0; k < n; ++k) rayleigh[k] = std::real(expectation(m, accepted[k]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rayleigh[x] < rayleigh[y]; });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = rayleigh[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = accepted[order[k]][i];
  }
  return out;
}

double spectral_norm(const ComplexMatrix& hermitian) {
  const auto values = hermitian_eigenvalues(hermitian);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

double reconstruction_residual(const ComplexMatrix& m, const HermitianEigen& eig) {
  const std::size_t n = m.dim();
  ComplexMatrix diag(n);
  for (std::size_t k = 0; k < n; ++k) diag(k, k) = eig.values[k];
  return frobenius_norm(eig.vectors * diag * eig.vectors.adjoint() - m);
}

}  // namespace chshlab
