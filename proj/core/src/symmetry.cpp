#include "gksl/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gksl/errors.hpp"

namespace gksl {

namespace {

Matrix mixing_or_identity(const SymmetryTransform& t, int k) {
  if (t.w.size() == 0) return Matrix::Identity(k, k);
  if (t.w.rows() != k || t.w.cols() != k) {
    throw ShapeMismatch("W must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  if ((t.w.adjoint() * t.w - Matrix::Identity(k, k)).norm() > kUnitaryTol * std::max(1.0, std::sqrt(double(k)))) {
    throw DomainError("W is not unitary");
  }
  return t.w;
}

Vector shift_or_zero(const SymmetryTransform& t, int k) {
  if (t.beta.size() == 0) return Vector::Zero(k);
  if (t.beta.size() != k) throw ShapeMismatch("beta must have length " + std::to_string(k));
  return t.beta;
}

std::vector<Matrix> mix(const std::vector<Matrix>& jumps, const Matrix& w, int n) {
  const int k = static_cast<int>(jumps.size());
  std::vector<Matrix> out(k, Matrix::Zero(n, n));
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < k; ++j)
      if (w(a, j) != Complex{}) out[a] += w(a, j) * jumps[j];
  return out;
}

double superop_distance(const Superoperator& a, const Superoperator& b) { return (a.matrix() - b.matrix()).norm(); }

double spec_matrix_scale(const LindbladSpec& s) {
  double acc = s.hamiltonian.norm();
  for (const Matrix& l : s.jumps) acc += l.squaredNorm();
  return std::max(1.0, acc);
}

}  // namespace

SymmetryTransform SymmetryTransform::identity(int channels) {
  return {Matrix::Identity(channels, channels), Vector::Zero(channels), 0.0};
}

SymmetryTransform compose(const SymmetryTransform& second, const SymmetryTransform& first) {
  const auto k = std::max({second.w.rows(), first.w.rows(), second.beta.size(), first.beta.size()});
  const int kk = static_cast<int>(k);
  const Matrix w1 = first.w.size() ? first.w : Matrix::Identity(kk, kk);
  const Matrix w2 = second.w.size() ? second.w : Matrix::Identity(kk, kk);
  const Vector b1 = first.beta.size() ? first.beta : Vector::Zero(kk);
  const Vector b2 = second.beta.size() ? second.beta : Vector::Zero(kk);

  SymmetryTransform out;
  out.w = w2 * w1;
  out.beta = w2 * b1 + b2;
  out.b = first.b + second.b + (b2.adjoint() * w2 * b1)(0, 0).imag();
  return out;
}

LindbladSpec apply_transform(const LindbladSpec& spec, const SymmetryTransform& t) {
  const LindbladSpec s = validated(spec);
  const int k = s.channels();
  const int n = s.n;
  const Matrix w = mixing_or_identity(t, k);
  const Vector beta = shift_or_zero(t, k);

  LindbladSpec out = s;
  out.jumps = mix(s.jumps, w, n);

  Matrix h_shift = t.b * Matrix::Identity(n, n);
  for (int a = 0; a < k; ++a) {
    const Matrix& l = out.jumps[a];
    h_shift += (std::conj(beta(a)) * l - beta(a) * l.adjoint()) / (2.0 * kI);
  }
  for (int a = 0; a < k; ++a) out.jumps[a] += beta(a) * Matrix::Identity(n, n);
  out.hamiltonian = s.hamiltonian + h_shift;
  return validated(std::move(out));
}

SymmetryTransform random_transform(int channels, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  SymmetryTransform t;
  t.w = haar_unitary(channels, rng);
  t.beta = Vector(channels);
  for (int k = 0; k < channels; ++k) {
    const double r = std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    t.beta(k) = std::polar(r, phi);
  }
  t.b = sym(rng);
  return t;
}

BlockShifts predicted_block_shifts(const LindbladSpec& spec, const SymmetryTransform& t, const SuNBasis& basis) {
  const LindbladSpec s = validated(spec);
  const int k = s.channels();
  const int n = s.n;
  const int m = basis.size();
  const Matrix w = mixing_or_identity(t, k);
  const Vector beta = shift_or_zero(t, k);
  LindbladSpec mixed = s;
  mixed.jumps = mix(s.jumps, w, n);
  const CoefficientMatrix a = coefficient_matrix(mixed, basis);

  const double c = std::sqrt(n / 2.0);
  BlockShifts out;
  out.d_vec = RealVector::Zero(m);
  out.c_vec = RealVector::Zero(m);
  double trace_shift = t.b;
  for (int q = 0; q < k; ++q) {
    const Complex a0 = a.columns(0, q);
    out.d00 += (n / 2.0) * std::norm(beta(q)) + 2.0 * c * (beta(q) * std::conj(a0)).real();
    for (int i = 0; i < m; ++i) {
      const Complex z = c * beta(q) * std::conj(a.columns(i + 1, q));
      out.d_vec(i) += z.real();
      out.c_vec(i) += z.imag();
    }
    trace_shift -= std::sqrt(2.0 / n) * (beta(q) * std::conj(a0)).imag();
  }
  out.d00 *= s.hbar;
  out.d_vec *= s.hbar;
  out.h_prime_trace = trace_shift;
  return out;
}

double AuditReport::worst_invariant_ratio() const {
  const double mat = std::max({d_block, c_block, h_prime}) / (tol.invariant * matrix_scale);
  const double sup = std::max({lu_prime, l1, l2, l3p, total, direct}) / (tol.invariant * superop_scale);
  return std::max(mat, sup);
}

double AuditReport::worst_shift_ratio() const {
  return std::max({d00_shift, d_vec_shift, c_vec_shift, h_prime_trace_shift}) / (tol.shift * matrix_scale);
}

AuditReport audit(const LindbladSpec& spec, const SymmetryTransform& t, const SuNBasis& basis,
                  const AuditTolerances& tol) {
  const LindbladSpec s = validated(spec);
  const LindbladSpec s2 = apply_transform(s, t);
  const FdDecomposition before = decompose(s, basis);
  const FdDecomposition after = decompose(s2, basis);
  const Superoperator direct_before = liouvillian_direct(s);
  const Superoperator direct_after = liouvillian_direct(s2);

  AuditReport r;
  r.tol = tol;
  r.matrix_scale = std::max({spec_matrix_scale(s), spec_matrix_scale(s2), before.blocks.scale(), after.blocks.scale()});
  r.superop_scale = std::max({1.0, direct_before.norm(), direct_after.norm()});

  r.d_block = (after.blocks.d_block - before.blocks.d_block).norm();
  r.c_block = (after.blocks.c_block - before.blocks.c_block).norm();
  r.h_prime = (traceless_part(after.h_prime) - traceless_part(before.h_prime)).norm();
  r.h_prime_trace_delta = ((after.h_prime - before.h_prime).trace() / static_cast<double>(s.n)).real();
  r.lu_prime = superop_distance(after.lu_prime, before.lu_prime);
  r.l1 = superop_distance(after.l1, before.l1);
  r.l2 = superop_distance(after.l2, before.l2);
  r.l3p = superop_distance(after.l3p, before.l3p);
  r.total = superop_distance(after.total(), before.total());
  r.direct = superop_distance(direct_after, direct_before);
  r.gamma = (after.blocks.gamma - before.blocks.gamma).norm();

  r.predicted = predicted_block_shifts(s, t, basis);
  r.observed.d00 = after.blocks.d00 - before.blocks.d00;
  r.observed.d_vec = after.blocks.d_vec - before.blocks.d_vec;
  r.observed.c_vec = after.blocks.c_vec - before.blocks.c_vec;
  r.observed.h_prime_trace = r.h_prime_trace_delta;
  r.d00_shift = std::abs(r.observed.d00 - r.predicted.d00);
  r.d_vec_shift = (r.observed.d_vec - r.predicted.d_vec).norm();
  r.c_vec_shift = (r.observed.c_vec - r.predicted.c_vec).norm();
  r.h_prime_trace_shift = std::abs(r.observed.h_prime_trace - r.predicted.h_prime_trace);

  r.pass = std::isfinite(r.worst_invariant_ratio()) && std::isfinite(r.worst_shift_ratio()) &&
           r.worst_invariant_ratio() <= 1.0 && r.worst_shift_ratio() <= 1.0;
  return r;
}

AuditReport audit(const LindbladSpec& spec, const SymmetryTransform& t, const AuditTolerances& tol) {
  return audit(spec, t, SuNBasis::build(spec.n), tol);
}

GammaBlocks change_operator_basis(const GammaBlocks& blocks, const RealMatrix& o) {
  const auto m = blocks.d_block.rows();
  if (o.rows() != m || o.cols() != m) throw ShapeMismatch("O must be (N^2-1)x(N^2-1)");
  if ((o.transpose() * o - RealMatrix::Identity(m, m)).norm() > 1e-12 * std::max(1.0, std::sqrt(double(m)))) {
    throw DomainError("O is not orthogonal");
  }
  GammaBlocks out = blocks;
  out.d_block = o.transpose() * blocks.d_block * o;
  out.c_block = o.transpose() * blocks.c_block * o;
  out.d_vec = o.transpose() * blocks.d_vec;
  out.c_vec = o.transpose() * blocks.c_vec;
  Matrix full = Matrix::Identity(m + 1, m + 1);
  full.bottomRightCorner(m, m) = o.cast<Complex>();
  out.gamma = full.transpose() * blocks.gamma * full;
  return out;
}

SuNBasis transform_basis(const SuNBasis& basis, const RealMatrix& o) {
  const int m = basis.size();
  if (o.rows() != m || o.cols() != m) throw ShapeMismatch("O must be (N^2-1)x(N^2-1)");
  const int n = basis.dim();
  std::vector<Matrix> gens(m, Matrix::Zero(n, n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (o(j, i) != 0.0) gens[i] += o(j, i) * basis.generators()[j];
  return SuNBasis::from_generators(std::move(gens));
}

}  // namespace gksl
