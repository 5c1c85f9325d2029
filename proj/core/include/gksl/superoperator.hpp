#pragma once

#include "gksl/types.hpp"

namespace gksl {

// Column-stacking vectorization: vec(X)_{i + N j} = X_{ij}, so that
// vec(A X B) = (B^T (x) A) vec(X).
Vector vectorize(const Matrix& x);
Matrix devectorize(const Vector& v);

// Linear map on N x N operators, stored as the N^2 x N^2 matrix acting on
// column-stacked vectors.
class Superoperator {
 public:
  Superoperator() = default;
  Superoperator(int n, Matrix m);

  static Superoperator zero(int n);
  static Superoperator identity(int n);
  // X -> A X B
  static Superoperator sandwich(const Matrix& a, const Matrix& b);
  static Superoperator left(const Matrix& a);
  static Superoperator right(const Matrix& b);
  // X -> [A, X]
  static Superoperator commutator(const Matrix& a);
  // X -> {A, X}
  static Superoperator anticommutator(const Matrix& a);

  int dim() const noexcept { return n_; }
  const Matrix& matrix() const noexcept { return m_; }

  Matrix apply(const Matrix& rho) const;

  // Hilbert-Schmidt adjoint: <S*(A), B> = <A, S(B)> with <B, A> = Tr(B^dagger A).
  // In the column-stacked representation this is the conjugate transpose.
  Superoperator adjoint() const;

  double norm() const { return m_.norm(); }

  Superoperator& operator+=(const Superoperator& o);
  Superoperator& operator-=(const Superoperator& o);
  Superoperator& operator*=(Complex s);

  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  friend Superoperator operator*(Complex s, Superoperator a) { return a *= s; }
  friend Superoperator operator*(double s, Superoperator a) { return a *= Complex(s); }
  friend Superoperator operator-(Superoperator a) { return a *= Complex(-1.0); }
  // Composition: (a * b)(X) = a(b(X)).
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);

 private:
  int n_ = 0;
  Matrix m_;
};

inline Superoperator hs_adjoint(const Superoperator& s) { return s.adjoint(); }
inline Matrix apply(const Superoperator& s, const Matrix& rho) { return s.apply(rho); }

// ||a - b||_F / ||b||_F on the superoperator matrices.
double relative_residual(const Superoperator& a, const Superoperator& b);

}  // namespace gksl
