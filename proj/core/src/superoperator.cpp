#include "gksl/superoperator.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "gksl/errors.hpp"

namespace gksl {

namespace {

int side_of_square_length(Eigen::Index len) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(len))));
  if (n * n != len) throw ShapeMismatch("vector length " + std::to_string(len) + " is not a perfect square");
  return static_cast<int>(n);
}

}  // namespace

Vector vectorize(const Matrix& x) {
  if (x.rows() != x.cols()) throw ShapeMismatch("vectorize expects a square matrix");
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix devectorize(const Vector& v) {
  const int n = side_of_square_length(v.size());
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Superoperator::Superoperator(int n, Matrix m) : n_(n), m_(std::move(m)) {
  if (m_.rows() != n_ * n_ || m_.cols() != n_ * n_) {
    throw ShapeMismatch("superoperator matrix must be N^2 x N^2");
  }
}

Superoperator Superoperator::zero(int n) { return {n, Matrix::Zero(n * n, n * n)}; }

Superoperator Superoperator::identity(int n) { return {n, Matrix::Identity(n * n, n * n)}; }

Superoperator Superoperator::sandwich(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.rows());
  require_square(a, n, "sandwich left factor");
  require_square(b, n, "sandwich right factor");
  return {n, Eigen::kroneckerProduct(b.transpose(), a).eval()};
}

Superoperator Superoperator::left(const Matrix& a) {
  return sandwich(a, Matrix::Identity(a.rows(), a.rows()));
}

Superoperator Superoperator::right(const Matrix& b) {
  return sandwich(Matrix::Identity(b.rows(), b.rows()), b);
}

Superoperator Superoperator::commutator(const Matrix& a) { return left(a) - right(a); }

Superoperator Superoperator::anticommutator(const Matrix& a) { return left(a) + right(a); }

Matrix Superoperator::apply(const Matrix& rho) const {
  require_square(rho, n_, "superoperator argument");
  return devectorize(m_ * vectorize(rho));
}

Superoperator Superoperator::adjoint() const { return {n_, m_.adjoint()}; }

Superoperator& Superoperator::operator+=(const Superoperator& o) {
  if (o.n_ != n_) throw ShapeMismatch("superoperator dimensions differ");
  m_ += o.m_;
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& o) {
  if (o.n_ != n_) throw ShapeMismatch("superoperator dimensions differ");
  m_ -= o.m_;
  return *this;
}

Superoperator& Superoperator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  if (a.n_ != b.n_) throw ShapeMismatch("superoperator dimensions differ");
  return {a.n_, a.m_ * b.m_};
}

double relative_residual(const Superoperator& a, const Superoperator& b) {
  return relative_residual(a.matrix(), b.matrix());
}

}  // namespace gksl
