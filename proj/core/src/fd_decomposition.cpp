#include "gksl/fd_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "gksl/errors.hpp"

namespace gksl {

namespace {

constexpr double kPsdTol = 1e-11;
constexpr double kClassifyTol = 1e-10;

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  if (h.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  const RealVector ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

int dim_from_block_size(Eigen::Index m) {
  const auto n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m + 1))));
  if (n < 2 || static_cast<Eigen::Index>(n) * n - 1 != m) {
    throw ShapeMismatch("block size " + std::to_string(m) + " is not N^2 - 1 for any N >= 2");
  }
  return n;
}

void require_compatible(const GammaBlocks& blocks, const SuNBasis& basis) {
  if (blocks.d_block.rows() != basis.size()) {
    throw ShapeMismatch("blocks are for N = " + std::to_string(blocks.dim()) + ", basis has N = " +
                        std::to_string(basis.dim()));
  }
}

}  // namespace

int GammaBlocks::dim() const { return dim_from_block_size(d_block.rows()); }

double GammaBlocks::scale() const { return std::max(1.0, gamma.norm()); }

CoefficientMatrix coefficient_matrix(const LindbladSpec& spec, const SuNBasis& basis) {
  if (spec.n != basis.dim()) {
    throw ShapeMismatch("spec has N = " + std::to_string(spec.n) + ", basis has N = " + std::to_string(basis.dim()));
  }
  const int n2 = spec.n * spec.n;
  CoefficientMatrix a{Matrix(n2, spec.channels())};
  for (int k = 0; k < spec.channels(); ++k) a.columns.col(k) = basis.expand(spec.jumps[k]);
  return a;
}

GammaBlocks gamma_blocks(const CoefficientMatrix& coeffs, double hbar) {
  const auto n2 = coeffs.columns.rows();
  const int m = static_cast<int>(n2) - 1;
  dim_from_block_size(m);

  GammaBlocks g;
  g.hbar = hbar;
  Matrix gamma = coeffs.columns * coeffs.columns.adjoint();
  g.gamma = 0.5 * (gamma + gamma.adjoint());

  const RealMatrix dt = hbar * g.gamma.real();
  const RealMatrix ct = g.gamma.imag();
  g.d00 = dt(0, 0);
  g.d_vec = dt.row(0).tail(m).transpose();
  g.c_vec = ct.row(0).tail(m).transpose();
  g.d_block = dt.bottomRightCorner(m, m);
  g.c_block = ct.bottomRightCorner(m, m);
  return g;
}

GammaBlocks blocks_from_matrices(const RealMatrix& diffusion, const RealMatrix& dissipation, double hbar) {
  if (diffusion.rows() != diffusion.cols() || dissipation.rows() != dissipation.cols() ||
      diffusion.rows() != dissipation.rows()) {
    throw ShapeMismatch("diffusion and dissipation blocks must be square and of equal size");
  }
  const auto m = diffusion.rows();
  dim_from_block_size(m);
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if ((diffusion - diffusion.transpose()).norm() > 1e-13 * std::max(1.0, diffusion.norm())) {
    throw DomainError("diffusion block is not symmetric");
  }
  if ((dissipation + dissipation.transpose()).norm() > 1e-13 * std::max(1.0, dissipation.norm())) {
    throw DomainError("dissipation block is not antisymmetric");
  }

  GammaBlocks g;
  g.hbar = hbar;
  g.d00 = 0.0;
  g.d_vec = RealVector::Zero(m);
  g.c_vec = RealVector::Zero(m);
  g.d_block = 0.5 * (diffusion + diffusion.transpose());
  g.c_block = 0.5 * (dissipation - dissipation.transpose());
  g.gamma = Matrix::Zero(m + 1, m + 1);
  g.gamma.bottomRightCorner(m, m) = g.d_block.cast<Complex>() / hbar + kI * g.c_block.cast<Complex>();
  return g;
}

Matrix hamiltonian_hc_from_blocks(const GammaBlocks& blocks, const SuNBasis& basis) {
  require_compatible(blocks, basis);
  const int n = basis.dim();
  Matrix h = Matrix::Zero(n, n);
  for (int i = 0; i < basis.size(); ++i) h += blocks.c_vec(i) * basis.generators()[i];
  return std::sqrt(2.0 / n) * h;
}

Matrix hamiltonian_hc(const LindbladSpec& spec, const GammaBlocks& blocks, const SuNBasis& basis) {
  const Matrix from_blocks = hamiltonian_hc_from_blocks(blocks, basis);

  const int n = spec.n;
  Matrix from_traces = Matrix::Zero(n, n);
  for (const Matrix& l : spec.jumps) {
    const Complex tr = l.trace();
    from_traces += std::conj(tr) * l - tr * l.adjoint();
  }
  from_traces *= -1.0 / (2.0 * kI * static_cast<double>(n));

  const double residual = (from_blocks - from_traces).norm();
  if (residual > kCrossCheckTol * blocks.scale()) {
    throw InternalConsistencyError("H_C vector form and trace form disagree", residual);
  }
  return from_blocks;
}

RealVector dissipation_traces(const GammaBlocks& blocks, const SuNBasis& basis) {
  require_compatible(blocks, basis);
  const Matrix ic = kI * blocks.c_block.cast<Complex>();
  RealVector t(basis.size());
  for (int l = 0; l < basis.size(); ++l) t(l) = (ic * basis.adjoint()[l]).trace().real();
  return t;
}

FdSuperoperators fd_superoperators(const GammaBlocks& blocks, const SuNBasis& basis) {
  require_compatible(blocks, basis);
  const int n = basis.dim();
  const int m = basis.size();
  const double hbar = blocks.hbar;
  const auto& gens = basis.generators();

  std::vector<Superoperator> comms;
  comms.reserve(m);
  for (const Matrix& t : gens) comms.push_back(Superoperator::commutator(t));

  // sum_ij D_ij [T_i,[T_j, .]] = sum_i [T_i, .] o (sum_j D_ij [T_j, .])
  Superoperator l1 = Superoperator::zero(n);
  for (int i = 0; i < m; ++i) {
    Superoperator inner = Superoperator::zero(n);
    for (int j = 0; j < m; ++j)
      if (blocks.d_block(i, j) != 0.0) inner += blocks.d_block(i, j) * comms[j];
    l1 += comms[i] * inner;
  }
  l1 *= Complex(-1.0 / (2.0 * hbar * hbar));

  // Pair-sum form of L2: G = sum_ij i C_ij T_i T_j
  Matrix g = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (blocks.c_block(i, j) != 0.0) g += (kI * blocks.c_block(i, j)) * (gens[i] * gens[j]);
  Superoperator l2 = (1.0 / (2.0 * hbar)) * Superoperator::anticommutator(g);

  // Adjoint-representation form of L2.
  const RealVector traces = dissipation_traces(blocks, basis);
  Matrix g_adj = Matrix::Zero(n, n);
  for (int l = 0; l < m; ++l) g_adj += traces(l) * gens[l];
  const Superoperator l2_adj = (1.0 / (2.0 * hbar)) * Superoperator::anticommutator(g_adj);

  const double residual = (l2.matrix() - l2_adj.matrix()).norm();
  if (residual > kCrossCheckTol * std::max(1.0, l2.norm())) {
    throw InternalConsistencyError("pair-sum and adjoint-representation forms of L2 disagree", residual);
  }

  // sum_ij i C_ij T_i X T_j = sum_j (T_j^T (x) sum_i i C_ij T_i) vec(X)
  Matrix l3 = Matrix::Zero(n * n, n * n);
  for (int j = 0; j < m; ++j) {
    Matrix left = Matrix::Zero(n, n);
    for (int i = 0; i < m; ++i)
      if (blocks.c_block(i, j) != 0.0) left += (kI * blocks.c_block(i, j)) * gens[i];
    l3 += Eigen::kroneckerProduct(gens[j].transpose(), left).eval();
  }
  l3 /= hbar;

  return {std::move(l1), std::move(l2), Superoperator(n, std::move(l3))};
}

FdDecomposition decompose(const LindbladSpec& spec, const SuNBasis& basis, const DecomposeOptions& options) {
  const LindbladSpec s = validated(spec);
  FdDecomposition out;
  out.blocks = gamma_blocks(coefficient_matrix(s, basis), s.hbar);
  out.h_c = hamiltonian_hc(s, out.blocks, basis);
  out.h_prime = s.hamiltonian + out.h_c;
  if (options.traceless_h_prime) out.h_prime = traceless_part(out.h_prime);

  FdSuperoperators fd = fd_superoperators(out.blocks, basis);
  out.l1 = std::move(fd.l1);
  out.l2 = std::move(fd.l2);
  out.l3p = std::move(fd.l3p);
  out.lu_prime = unitary_part(out.h_prime, s.hbar);
  out.l_fluc = out.l1;
  out.l_diss = out.l2 + out.l3p;
  out.l_nu_prime = out.l_fluc + out.l_diss;

  const Superoperator direct = liouvillian_direct(s);
  out.reconstruction_residual = relative_residual(out.total(), direct);
  if (out.reconstruction_residual > options.reconstruction_tol) {
    throw InternalConsistencyError("LU' + L_NU' does not reproduce the Lindblad generator",
                                   out.reconstruction_residual);
  }
  return out;
}

FdDecomposition decompose(const LindbladSpec& spec, const DecomposeOptions& options) {
  return decompose(spec, SuNBasis::build(spec.n), options);
}

PositivityReport positivity_report(const GammaBlocks& blocks) {
  PositivityReport r;
  const Matrix dc = blocks.d_block.cast<Complex>() + kI * blocks.hbar * blocks.c_block.cast<Complex>();
  r.tolerance = kPsdTol * std::max({1.0, blocks.gamma.norm(), dc.norm()});

  r.gamma_eigenvalues = hermitian_eigenvalues(blocks.gamma);
  r.dc_eigenvalues = hermitian_eigenvalues(0.5 * (dc + dc.adjoint()));
  r.min_gamma_eigenvalue = r.gamma_eigenvalues.empty() ? 0.0 : r.gamma_eigenvalues.front();
  r.min_dc_eigenvalue = r.dc_eigenvalues.empty() ? 0.0 : r.dc_eigenvalues.front();
  r.gamma_psd = r.min_gamma_eigenvalue >= -r.tolerance;
  r.dc_psd = r.min_dc_eigenvalue >= -r.tolerance;

  r.diffusion_norm = blocks.d_block.norm();
  r.dissipation_norm = blocks.c_block.norm();
  r.diffusion_implication = !(r.diffusion_norm <= r.tolerance && r.dissipation_norm > r.tolerance);
  r.realizable = r.gamma_psd && r.dc_psd && r.diffusion_implication;

  if (r.realizable) {
    r.verdict = "realizable";
  } else if (!r.diffusion_implication) {
    r.verdict = "not realizable by any QDS: dissipation without diffusion";
  } else {
    r.verdict = "not realizable by any QDS: negative eigenvalue";
  }
  return r;
}

ClassificationReport classify(const GammaBlocks& blocks, const SuNBasis& basis, double tol) {
  ClassificationReport r;
  r.tolerance = tol > 0.0 ? tol : kClassifyTol * blocks.scale();

  const FdSuperoperators fd = fd_superoperators(blocks, basis);
  const int n = basis.dim();
  r.unitality_residual = (fd.l1 + fd.l2 + fd.l3p).apply(Matrix::Identity(n, n)).norm();
  r.unital = r.unitality_residual <= r.tolerance;

  r.dissipation_traces = dissipation_traces(blocks, basis);
  r.max_dissipation_trace = r.dissipation_traces.size() ? r.dissipation_traces.cwiseAbs().maxCoeff() : 0.0;
  r.l2_zero = r.max_dissipation_trace <= r.tolerance;

  r.dissipation_norm = blocks.c_block.norm();
  r.diffusion_norm = blocks.d_block.norm();
  r.dissipation_zero = r.dissipation_norm <= r.tolerance;
  r.trivial = r.dissipation_zero && r.diffusion_norm <= r.tolerance;

  if (r.dissipation_zero) {
    r.type = "type-ii";
  } else if (r.l2_zero) {
    r.type = "type-i";
  } else {
    r.type = "non-QMS-candidate";
  }
  r.positivity = positivity_report(blocks);
  return r;
}

}  // namespace gksl
