#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace chshlab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Used at dimensions 2 and 4.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }
  const std::vector<cplx>& data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);

double frobenius_norm(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tolerance);
bool all_finite(const ComplexMatrix& m);

/// <v| M |v>
cplx expectation(const ComplexMatrix& m, const std::vector<cplx>& v);

/// Eigen-decomposition of a real symmetric n x n matrix by cyclic Jacobi
/// rotations. `vectors` holds the eigenvectors as rows (row k pairs with
/// values[k]); values are sorted ascending.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // n x n, row-major, row k = eigenvector k
  int sweeps = 0;
  double off_diagonal = 0.0;  // Frobenius mass of the off-diagonal part at exit
};

/// Stops once the off-diagonal Frobenius mass drops below
/// kJacobiTolerance * max(1, ||A||_F).
inline constexpr double kJacobiTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 64;

SymmetricEigen jacobi_symmetric(std::vector<double> matrix, std::size_t n);

/// Eigen-decomposition of a Hermitian matrix through its real symmetric
/// embedding [[Re, -Im], [Im, Re]]. Each eigenvalue appears twice in the
/// embedding; the complex eigenvectors are recovered from the embedded ones by
/// complex Gram-Schmidt.
struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k = eigenvector for values[k]
};

HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only (ascending).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Largest |eigenvalue| of a Hermitian matrix.
double spectral_norm(const ComplexMatrix& hermitian);

/// || V diag(values) V^dagger - M ||_F
double reconstruction_residual(const ComplexMatrix& m, const HermitianEigen& eig);

}  // namespace chshlab
