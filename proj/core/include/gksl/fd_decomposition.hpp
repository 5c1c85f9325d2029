#pragma once

#include <string>
#include <vector>

#include "gksl/generator.hpp"
#include "gksl/sun_basis.hpp"
#include "gksl/superoperator.hpp"
#include "gksl/types.hpp"

namespace gksl {

// Column k holds the expansion coefficients alpha_k of L_k in the basis
// {T_nu}: an N^2 x K matrix.
struct CoefficientMatrix {
  Matrix columns;

  int channels() const noexcept { return static_cast<int>(columns.cols()); }
};

CoefficientMatrix coefficient_matrix(const LindbladSpec& spec, const SuNBasis& basis);

// Gamma = A A^dag, split as Gamma = D~/hbar + i C~ with
//   D~ = [[D00, D^T], [D, DD]],   C~ = [[0, C^T], [-C, CC]].
// `d_vec` and `c_vec` are the first row of D~ and C~ beyond column 0;
// `d_block` (diffusion) and `c_block` (dissipation) the lower-right blocks.
struct GammaBlocks {
  Matrix gamma;
  double d00 = 0.0;
  RealVector d_vec;
  RealVector c_vec;
  RealMatrix d_block;
  RealMatrix c_block;
  double hbar = 1.0;

  int dim() const;
  // max(1, ||Gamma||_F)
  double scale() const;
};

GammaBlocks gamma_blocks(const CoefficientMatrix& coeffs, double hbar);

// Blocks supplied directly (diffusion D symmetric, dissipation C antisymmetric),
// with D00, D and C vectors set to zero. Realizability is not assumed: check it
// with positivity_report(). Throws ShapeMismatch or DomainError on malformed input.
GammaBlocks blocks_from_matrices(const RealMatrix& diffusion, const RealMatrix& dissipation, double hbar);

inline constexpr double kCrossCheckTol = 1e-12;
inline constexpr double kReconstructionTol = 1e-10;

// H_C = sqrt(2/N) sum_i C_i T_i, cross-checked against the trace form
//   -(1/(2 i N)) sum_k (Tr(L_k)^* L_k - Tr(L_k) L_k^dag)
// Throws InternalConsistencyError if the two disagree beyond 1e-12 * scale.
Matrix hamiltonian_hc(const LindbladSpec& spec, const GammaBlocks& blocks, const SuNBasis& basis);

// The vector form alone (no cross-check); usable for hand-built blocks.
Matrix hamiltonian_hc_from_blocks(const GammaBlocks& blocks, const SuNBasis& basis);

// tr(i C f^l) for l = 1..N^2-1 (zero-indexed). Real by construction.
RealVector dissipation_traces(const GammaBlocks& blocks, const SuNBasis& basis);

struct FdSuperoperators {
  Superoperator l1;   // -(1/(2 hbar^2)) sum_ij D_ij [T_i,[T_j, .]]
  Superoperator l2;   // (1/hbar) sum_ij i C_ij {T_i T_j, .}/2
  Superoperator l3p;  // (1/hbar) sum_ij i C_ij T_i . T_j
};

// L2 is computed from the pair-sum form and from the adjoint-representation
// form (1/(2 hbar)) sum_l tr(i C f^l) {T_l, .}; throws InternalConsistencyError
// if they disagree beyond 1e-12 * max(1, ||L2||_F).
FdSuperoperators fd_superoperators(const GammaBlocks& blocks, const SuNBasis& basis);

struct DecomposeOptions {
  // Report H' with its (Tr H'/N) 1 component removed.
  bool traceless_h_prime = false;
  double reconstruction_tol = kReconstructionTol;
};

struct FdDecomposition {
  GammaBlocks blocks;
  Matrix h_c;
  Matrix h_prime;
  Superoperator lu_prime;
  Superoperator l1, l2, l3p;
  Superoperator l_fluc;
  Superoperator l_diss;
  Superoperator l_nu_prime;
  // ||LU' + L_NU' - L_direct||_F / ||L_direct||_F
  double reconstruction_residual = 0.0;

  Superoperator total() const { return lu_prime + l_nu_prime; }
};

// Throws InternalConsistencyError if the reconstruction residual exceeds
// options.reconstruction_tol.
FdDecomposition decompose(const LindbladSpec& spec, const SuNBasis& basis, const DecomposeOptions& options = {});
FdDecomposition decompose(const LindbladSpec& spec, const DecomposeOptions& options = {});

struct PositivityReport {
  std::vector<double> gamma_eigenvalues;       // ascending
  std::vector<double> dc_eigenvalues;          // of D + i hbar C, ascending
  double min_gamma_eigenvalue = 0.0;
  double min_dc_eigenvalue = 0.0;
  double tolerance = 0.0;
  double diffusion_norm = 0.0;
  double dissipation_norm = 0.0;
  bool gamma_psd = true;
  bool dc_psd = true;
  // ||D|| <= tol implies ||C|| <= tol
  bool diffusion_implication = true;
  bool realizable = true;
  std::string verdict;
};

// PSD slack is 1e-11 * max(1, ||Gamma||_F).
PositivityReport positivity_report(const GammaBlocks& blocks);

struct ClassificationReport {
  double tolerance = 0.0;
  double unitality_residual = 0.0;  // ||L(1)||_F
  bool unital = false;
  RealVector dissipation_traces;    // tr(i C f^l)
  double max_dissipation_trace = 0.0;
  bool l2_zero = false;
  double dissipation_norm = 0.0;
  double diffusion_norm = 0.0;
  bool dissipation_zero = false;
  bool trivial = false;             // D = 0 and C = 0
  std::string type;                 // "type-i", "type-ii" or "non-QMS-candidate"
  PositivityReport positivity;
};

// Default tolerance 1e-10 * blocks.scale(). Unitality is evaluated on
// L1 + L2 + L3' built from the blocks; the commutator part annihilates 1, so
// this equals ||L_direct(1)|| for spec-derived blocks.
ClassificationReport classify(const GammaBlocks& blocks, const SuNBasis& basis, double tol = -1.0);

}  // namespace gksl
