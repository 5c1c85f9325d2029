#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gksl/types.hpp"

namespace gksl {

// Dense real rank-3 tensor with cubic shape (n, n, n), row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int extent() const noexcept { return n_; }
  double operator()(int i, int j, int l) const { return data_[index(i, j, l)]; }
  double& operator()(int i, int j, int l) { return data_[index(i, j, l)]; }

  struct Entry {
    int i, j, l;
    double value;
  };
  // Entries with |value| > cutoff, in (i, j, l) lexicographic order.
  std::vector<Entry> nonzeros(double cutoff = 1e-14) const;

 private:
  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }
  int n_ = 0;
  std::vector<double> data_;
};

struct StructureConstants {
  Tensor3 f;  // totally antisymmetric
  Tensor3 d;  // totally symmetric
};

// Orthogonal Hermitian operator basis of B(H), dim H = N:
//   T_0 = sqrt(2/N) 1,   T_i (i = 1..N^2-1) traceless Hermitian,
//   Tr(T_nu T_mu) = 2 delta_{nu mu},
//   T_i T_j = (2/N) delta_ij 1 + sum_l (i f_ijl + d_ijl) T_l.
//
// Generalized Gell-Mann ordering used by build(): first the symmetric members
// E_ab + E_ba, then the antisymmetric members -i(E_ab - E_ba), each over a < b
// in lexicographic (a, b) order, then the diagonal members
//   sqrt(2 / (m (m + 1))) diag(1, ..., 1, -m, 0, ..., 0),  m = 1..N-1.
// N = 2 gives (sigma_1, sigma_2, sigma_3). N = 3 gives the Gell-Mann matrices
// in the order (l1, l4, l6, l2, l5, l7, l3, l8).
//
// Storage uses the C++ convention: generators()[k] is T_{k+1}, and the tensors
// f(k, m, p), d(k, m, p) and adjoint()[p] are indexed from zero over the
// traceless members only.
class SuNBasis {
 public:
  // Throws InvalidDimension for n < 2.
  static SuNBasis build(int n);

  // Wraps an arbitrary traceless Hermitian family (for example a rotated
  // basis) and recomputes its tensors. Throws InconsistentBasis if the family
  // fails the orthogonality or Hermiticity checks.
  static SuNBasis from_generators(std::vector<Matrix> generators);

  int dim() const noexcept { return n_; }
  int size() const noexcept { return n_ * n_ - 1; }

  const Matrix& t0() const noexcept { return t0_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  // nu = 0 is T_0, nu >= 1 is T_nu.
  const Matrix& element(int nu) const;

  const Tensor3& f() const noexcept { return constants_.f; }
  const Tensor3& d() const noexcept { return constants_.d; }
  // Adjoint-representation generators (f^l)_{ij} = -i f_{lij}.
  const std::vector<Matrix>& adjoint() const noexcept { return adjoint_; }

  // alpha_nu = Tr(T_nu X) / 2, nu = 0..N^2-1.
  Vector expand(const Matrix& x) const;
  Matrix reconstruct(const Vector& alpha) const;

  // max_{i,j} || T_i T_j - (2/N) delta_ij 1 - sum_l (i f_ijl + d_ijl) T_l ||_F
  double closure_residual() const;

 private:
  SuNBasis(int n, std::vector<Matrix> generators);

  int n_ = 0;
  Matrix t0_;
  std::vector<Matrix> generators_;
  StructureConstants constants_;
  std::vector<Matrix> adjoint_;
};

// f_ijl = Tr([T_i, T_j] T_l) / (4i),  d_ijl = Tr({T_i, T_j} T_l) / 4.
StructureConstants structure_constants(std::span<const Matrix> generators);

std::vector<Matrix> adjoint_generators(const Tensor3& f);

}  // namespace gksl
