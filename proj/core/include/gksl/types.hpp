#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace gksl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

inline Matrix identity(int n) { return Matrix::Identity(n, n); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

// Frobenius norm of X - X^dagger.
inline double hermiticity_residual(const Matrix& x) { return (x - x.adjoint()).norm(); }

// ||a - b||_F / ||b||_F, with 0/0 taken as 0.
inline double relative_residual(const Matrix& a, const Matrix& b) {
  const double diff = (a - b).norm();
  const double ref = b.norm();
  if (ref == 0.0) return diff;
  return diff / ref;
}

// Removes the (Tr X / n) identity component.
inline Matrix traceless_part(const Matrix& x) {
  const auto n = x.rows();
  return x - (x.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
}

void require_square(const Matrix& m, int n, std::string_view what);

}  // namespace gksl
