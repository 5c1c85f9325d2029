#include <cmath>

#include "doctest.h"
#include "gksl/catalog.hpp"
#include "gksl/errors.hpp"
#include "gksl/fd_decomposition.hpp"
#include "test_util.hpp"

using namespace gksl;
using gksl::testing::max_abs;
using gksl::testing::pauli;

namespace {

const Complex kImag{0.0, 1.0};

Matrix sigma_plus() { return 0.5 * (pauli(1) + kImag * pauli(2)); }

GammaBlocks blocks_of(const LindbladSpec& s, const SuNBasis& b) {
  return gamma_blocks(coefficient_matrix(s, b), s.hbar);
}

Superoperator commutator_part(const Matrix& h, double hbar) { return Complex(0.0, -1.0 / hbar) * Superoperator::commutator(h); }

}  // namespace

TEST_CASE("coefficient matrix columns") {
  const SuNBasis b = SuNBasis::build(2);
  const double gamma = 0.36;

  CoefficientMatrix a = coefficient_matrix(make_spec(Matrix::Zero(2, 2), {Matrix::Identity(2, 2)}), b);
  Vector e0 = Vector::Zero(4);
  e0(0) = 1.0;
  CHECK((a.columns.col(0) - e0).norm() <= 1e-15);

  a = coefficient_matrix(make_spec(Matrix::Zero(2, 2), {std::sqrt(gamma) * sigma_plus()}), b);
  Vector expect(4);
  expect << 0.0, std::sqrt(gamma) / 2.0, kImag * std::sqrt(gamma) / 2.0, 0.0;
  CHECK((a.columns.col(0) - expect).norm() <= 1e-15);

  a = coefficient_matrix(make_spec(Matrix::Zero(2, 2), {}), b);
  CHECK(a.channels() == 0);
  const GammaBlocks g = gamma_blocks(a, 1.0);
  CHECK(g.gamma.rows() == 4);
  CHECK(g.gamma.norm() == 0.0);
  CHECK(g.d_block.norm() == 0.0);
  CHECK(g.c_block.norm() == 0.0);

  CHECK_THROWS_AS(coefficient_matrix(make_spec(Matrix::Zero(3, 3), {}), b), ShapeMismatch);
}

TEST_CASE("qubit worked example: infinite temperature and depolarizing give identical blocks") {
  const SuNBasis b = SuNBasis::build(2);
  for (double gamma : {1.0, 0.3}) {
    RealMatrix expect = RealMatrix::Zero(3, 3);
    expect(0, 0) = expect(1, 1) = gamma / 2.0;
    const GammaBlocks inf = blocks_of(catalog::qubit_infinite_temperature(gamma), b);
    const GammaBlocks dep = blocks_of(catalog::qubit_depolarizing(gamma), b);
    CHECK(max_abs(inf.d_block - expect) <= 1e-13);
    CHECK(max_abs(inf.c_block) <= 1e-13);
    CHECK(max_abs(dep.d_block - expect) <= 1e-13);
    CHECK(max_abs(dep.c_block) <= 1e-13);
    CHECK(max_abs(inf.d_block - dep.d_block) <= 1e-13);
  }
}

TEST_CASE("single decay channel: C_12 = +Gamma/4, independent of n_th") {
  // alpha(sqrt(G) sigma_-) = (0, sqrt(G)/2, -i sqrt(G)/2, 0), so
  // Gamma_12 = alpha_1 conj(alpha_2) = i G/4 and C_12 = Im Gamma_12 = +G/4.
  const SuNBasis b = SuNBasis::build(2);
  const double g = 0.8;
  for (double nth : {0.0, 0.5, 3.0}) {
    CAPTURE(nth);
    const GammaBlocks blk = blocks_of(catalog::qubit_thermal(g, nth), b);
    CHECK(std::abs(blk.c_block(0, 1) - g / 4.0) <= 1e-15);
    CHECK(std::abs(blk.c_block(1, 0) + g / 4.0) <= 1e-15);
    CHECK(std::abs(blk.c_block(0, 2)) + std::abs(blk.c_block(1, 2)) <= 1e-15);
    CHECK(std::abs(blk.d_block(0, 0) - g * (2.0 * nth + 1.0) / 4.0) <= 1e-14);
    CHECK(std::abs(blk.d_block(2, 2)) <= 1e-15);
  }
  const GammaBlocks zero = blocks_of(catalog::qubit_thermal(0.0, 1.0), b);
  CHECK(zero.gamma.norm() == 0.0);
}

TEST_CASE("hbar scales the diffusion but not the dissipation blocks") {
  const SuNBasis b = SuNBasis::build(2);
  LindbladSpec s = catalog::qubit_thermal(0.5, 0.2);
  const GammaBlocks one = blocks_of(s, b);
  s.hbar = 3.0;
  const GammaBlocks three = blocks_of(s, b);
  CHECK(max_abs(three.d_block - 3.0 * one.d_block) <= 1e-15);
  CHECK(max_abs(three.c_block - one.c_block) == 0.0);
}

TEST_CASE("H_C from the trace components") {
  const SuNBasis b = SuNBasis::build(2);
  const double gamma = 0.49, beta = 0.3;

  const LindbladSpec traceless = catalog::qubit_thermal(gamma, 0.4);
  CHECK(hamiltonian_hc(traceless, blocks_of(traceless, b), b).norm() <= 1e-15);

  const LindbladSpec empty = make_spec(Matrix::Zero(2, 2), {});
  CHECK(hamiltonian_hc(empty, blocks_of(empty, b), b).norm() == 0.0);

  const LindbladSpec shifted =
      make_spec(Matrix::Zero(2, 2), {std::sqrt(gamma) * sigma_plus() + beta * Matrix::Identity(2, 2)});
  const Matrix hc = hamiltonian_hc(shifted, blocks_of(shifted, b), b);
  CHECK(max_abs(hc + (beta * std::sqrt(gamma) / 2.0) * pauli(2)) <= 1e-15);

  const FdDecomposition fd = decompose(shifted, b);
  CHECK(max_abs(fd.h_prime + (beta * std::sqrt(gamma) / 2.0) * pauli(2)) <= 1e-15);
  CHECK(fd.h_prime.norm() > 0.1);
}

TEST_CASE("superoperators from the blocks") {
  const SuNBasis b = SuNBasis::build(2);
  const double gamma = 0.7;
  const FdSuperoperators fd = fd_superoperators(blocks_of(catalog::qubit_depolarizing(gamma), b), b);
  CHECK(fd.l2.norm() <= 1e-15);
  CHECK(fd.l3p.norm() <= 1e-15);

  const Superoperator c1 = Superoperator::commutator(pauli(1));
  const Superoperator c2 = Superoperator::commutator(pauli(2));
  const Superoperator expect = Complex(-gamma / 4.0) * (c1 * c1 + c2 * c2);
  CHECK((fd.l1.matrix() - expect.matrix()).norm() <= 1e-14);

  const GammaBlocks zero_c = blocks_from_matrices(RealMatrix::Identity(3, 3), RealMatrix::Zero(3, 3), 1.0);
  const FdSuperoperators z = fd_superoperators(zero_c, b);
  CHECK(z.l2.norm() == 0.0);
  CHECK(z.l3p.norm() == 0.0);
}

TEST_CASE("block superoperators equal the cartesian oracle minus the H_C commutator") {
  const SuNBasis b = SuNBasis::build(3);
  for (int t = 0; t < 10; ++t) {
    Rng rng = split_stream(23, t);
    const LindbladSpec s = random_spec(3, 3, rng, t % 2 ? 1.0 : 1.3);
    const GammaBlocks blk = blocks_of(s, b);
    const FdSuperoperators fd = fd_superoperators(blk, b);
    const CartesianParts c = cartesian_parts(s);
    const Matrix hc = hamiltonian_hc(s, blk, b);
    // L3 = -(i/hbar)[H_C, .] + L3'
    const Superoperator lhs = fd.l1 + fd.l2 + fd.l3p;
    const Superoperator rhs = c.total() - commutator_part(hc, s.hbar);
    CHECK(relative_residual(lhs, rhs) <= 1e-11);
    CHECK(relative_residual(fd.l1, c.l1) <= 1e-11);
    CHECK(relative_residual(fd.l2, c.l2) <= 1e-11);
  }
}

TEST_CASE("decompose") {
  const SuNBasis b2 = SuNBasis::build(2);
  const LindbladSpec empty = make_spec(pauli(3), {});
  const FdDecomposition fd0 = decompose(empty, b2);
  CHECK(fd0.l_nu_prime.norm() == 0.0);
  CHECK(max_abs(fd0.h_prime - pauli(3)) == 0.0);

  for (int t = 0; t < 20; ++t) {
    Rng rng = split_stream(29, t);
    const int n = 2 + t % 3;
    const LindbladSpec s = random_traceless_spec(n, n, rng);
    const FdDecomposition fd = decompose(s);
    CHECK(max_abs(fd.h_prime - s.hamiltonian) <= 1e-12 * std::max(1.0, s.hamiltonian.norm()));
    CHECK(relative_residual(fd.lu_prime, unitary_part(s.hamiltonian, s.hbar)) <= 1e-12);
    CHECK(relative_residual(fd.l_nu_prime, dissipative_part(s)) <= 1e-11);
    CHECK(fd.reconstruction_residual <= 1e-11);
    CHECK((fd.l_fluc.matrix() - fd.l1.matrix()).norm() == 0.0);
    CHECK((fd.l_diss.matrix() - (fd.l2 + fd.l3p).matrix()).norm() == 0.0);
  }

  Rng rng = split_stream(31, 0);
  LindbladSpec s = random_spec(3, 2, rng);
  DecomposeOptions opt;
  opt.traceless_h_prime = true;
  CHECK(std::abs(decompose(s, opt).h_prime.trace()) <= 1e-13);
}

TEST_CASE("reconstruction over a random corpus") {
  double worst = 0.0;
  for (const auto& e : testing::random_corpus(60, 37)) worst = std::max(worst, decompose(e.spec).reconstruction_residual);
  CHECK(worst <= 1e-11);
}

TEST_CASE("adjointness of the block superoperators") {
  for (const auto& e : testing::random_corpus(24, 41)) {
    const SuNBasis b = SuNBasis::build(e.n);
    const FdDecomposition fd = decompose(e.spec, b);
    const Superoperator l3 = fd.l3p + commutator_part(fd.h_c, e.spec.hbar);
    const double sc = std::max(1.0, liouvillian_direct(e.spec).norm());
    CHECK((hs_adjoint(fd.l1).matrix() - fd.l1.matrix()).norm() <= 1e-12 * sc);
    CHECK((hs_adjoint(fd.l2).matrix() - fd.l2.matrix()).norm() <= 1e-12 * sc);
    CHECK((hs_adjoint(l3).matrix() + l3.matrix()).norm() <= 1e-12 * sc);
  }
}

TEST_CASE("positivity") {
  for (const auto& e : testing::random_corpus(40, 43)) {
    const PositivityReport p = positivity_report(blocks_of(e.spec, SuNBasis::build(e.n)));
    CHECK(p.gamma_psd);
    CHECK(p.dc_psd);
    CHECK(p.realizable);
  }

  // Operators proportional to the identity: D = 0 forces C = 0.
  for (int t = 0; t < 10; ++t) {
    Rng rng = split_stream(47, t);
    const int n = 2 + t % 3;
    const Vector c = random_gaussian_matrix(3, 1, rng);
    const LindbladSpec s = make_spec(random_hermitian(n, rng), {c(0) * identity(n), c(1) * identity(n), c(2) * identity(n)});
    const GammaBlocks blk = blocks_of(s, SuNBasis::build(n));
    CHECK(blk.d_block.norm() <= 1e-14);
    CHECK(blk.c_block.norm() <= 1e-14);
    CHECK(positivity_report(blk).diffusion_implication);
    CHECK(blk.d00 > 0.0);
  }

  RealMatrix c = RealMatrix::Zero(3, 3);
  c(0, 1) = 0.5;
  c(1, 0) = -0.5;
  const PositivityReport bad = positivity_report(blocks_from_matrices(RealMatrix::Zero(3, 3), c, 1.0));
  CHECK_FALSE(bad.realizable);
  CHECK_FALSE(bad.diffusion_implication);
  CHECK(bad.min_dc_eigenvalue < -0.1);
  CHECK(bad.verdict.rfind("not realizable by any QDS", 0) == 0);

  RealMatrix asym = RealMatrix::Identity(3, 3);
  asym(0, 1) = 0.2;
  CHECK_THROWS_AS(blocks_from_matrices(asym, RealMatrix::Zero(3, 3), 1.0), DomainError);
}

TEST_CASE("qubit dissipation matrices have zero determinant") {
  for (int t = 0; t < 50; ++t) {
    Rng rng = split_stream(53, t);
    const LindbladSpec s = random_spec(2, 1 + t % 4, rng);
    const GammaBlocks blk = blocks_of(s, SuNBasis::build(2));
    CHECK(std::abs(blk.c_block.determinant()) <= 1e-10 * blk.scale());
  }
}

TEST_CASE("classification") {
  const SuNBasis b2 = SuNBasis::build(2);
  const ClassificationReport dep = classify(blocks_of(catalog::qubit_depolarizing(1.0), b2), b2);
  CHECK(dep.type == "type-ii");
  CHECK(dep.unital);
  CHECK(dep.l2_zero);
  CHECK_FALSE(dep.trivial);

  const ClassificationReport triv = classify(blocks_of(make_spec(pauli(1), {}), b2), b2);
  CHECK(triv.trivial);
  CHECK(triv.type == "type-ii");

  const ClassificationReport decay = classify(blocks_of(catalog::qubit_thermal(1.0, 0.0), b2), b2);
  CHECK(decay.type == "non-QMS-candidate");
  CHECK_FALSE(decay.unital);
  CHECK_FALSE(decay.l2_zero);

  for (int t = 0; t < 50; ++t) {
    Rng rng = split_stream(59, t);
    const ClassificationReport r = classify(blocks_of(random_spec(2, 1 + t % 4, rng), b2), b2);
    CHECK(r.type != "type-i");
    CHECK(r.unital == r.l2_zero);
  }
}

TEST_CASE("a qutrit dissipation block orthogonal to every adjoint generator is type-i") {
  const SuNBasis b = SuNBasis::build(3);
  const int m = b.size();
  // Constraint matrix of the linear map C -> (tr(i C f^l))_l over the
  // antisymmetric basis E_ab - E_ba.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c) pairs.emplace_back(a, c);
  RealMatrix constraint(m, static_cast<int>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    RealMatrix c = RealMatrix::Zero(m, m);
    c(pairs[p].first, pairs[p].second) = 1.0;
    c(pairs[p].second, pairs[p].first) = -1.0;
    constraint.col(static_cast<int>(p)) = dissipation_traces(blocks_from_matrices(RealMatrix::Zero(m, m), c, 1.0), b);
  }
  const Eigen::JacobiSVD<RealMatrix> svd(constraint, Eigen::ComputeFullV);
  const RealVector null = svd.matrixV().col(static_cast<int>(pairs.size()) - 1);
  RealMatrix c = RealMatrix::Zero(m, m);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    c(pairs[p].first, pairs[p].second) = null(static_cast<int>(p));
    c(pairs[p].second, pairs[p].first) = -null(static_cast<int>(p));
  }
  const ClassificationReport r = classify(blocks_from_matrices(4.0 * RealMatrix::Identity(m, m), c, 1.0), b);
  CHECK(r.l2_zero);
  CHECK_FALSE(r.dissipation_zero);
  CHECK(r.type == "type-i");
}
