#pragma once

#include <string>

#include "gksl/fd_decomposition.hpp"
#include "gksl/generator.hpp"
#include "gksl/random.hpp"
#include "gksl/sun_basis.hpp"

namespace gksl {

// Element of the symmetry group of a Lindblad generator:
//   L_k -> sum_j W_kj L_j                        (unitary mixing)
//   L_k -> L_k + beta_k 1,  H -> H + H'',        (inhomogeneous shift)
//   H'' = (1/(2i)) sum_k (beta_k^* L_k - beta_k L_k^dag) + b 1,
// where the shift acts on the already-mixed operators.
//
// Composition (second o first), applying `first` then `second`:
//   W    = W2 W1
//   beta = W2 beta1 + beta2
//   b    = b1 + b2 + Im(beta2^dag W2 beta1)
struct SymmetryTransform {
  Matrix w;      // K x K unitary; empty means identity
  Vector beta;   // length K; empty means zero
  double b = 0.0;

  static SymmetryTransform identity(int channels);
};

inline constexpr double kUnitaryTol = 1e-12;

SymmetryTransform compose(const SymmetryTransform& second, const SymmetryTransform& first);

// Throws DomainError if W is not unitary within 1e-12 and ShapeMismatch if
// W or beta do not match the number of channels.
LindbladSpec apply_transform(const LindbladSpec& spec, const SymmetryTransform& t);

// Haar W, beta_k uniform in the unit disk, b uniform in [-1, 1].
SymmetryTransform random_transform(int channels, Rng& rng);

struct BlockShifts {
  double d00 = 0.0;
  RealVector d_vec;
  RealVector c_vec;
  // Shift of Tr(H')/N predicted for the trace part of H' (gauge only):
  //   b - sqrt(2/N) sum_k Im(beta_k alpha_0^(k)*)
  double h_prime_trace = 0.0;
};

// Shifts of the non-invariant sectors D00, D, C, with alpha taken after the
// unitary mixing:
//   dD00/hbar = sum_k (N/2)|beta_k|^2 + 2 sum_k sqrt(N/2) Re(beta_k alpha_0^(k)*)
//   dD_i/hbar = sum_k sqrt(N/2) Re(beta_k alpha_i^(k)*)
//   dC_i      = sum_k sqrt(N/2) Im(beta_k alpha_i^(k)*)
BlockShifts predicted_block_shifts(const LindbladSpec& spec, const SymmetryTransform& t, const SuNBasis& basis);

struct AuditTolerances {
  double invariant = 1e-11;
  double shift = 1e-12;
};

// Residuals are absolute Frobenius norms; PASS compares them against
// tol * matrix_scale (blocks, Hamiltonians, shifts) or tol * superop_scale
// (superoperators).
struct AuditReport {
  double d_block = 0.0;
  double c_block = 0.0;
  double h_prime = 0.0;         // after removing (Tr/N) 1 from both sides
  double h_prime_trace_delta = 0.0;  // raw Tr(H'_new - H')/N
  double lu_prime = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double l3p = 0.0;
  double total = 0.0;           // decomposed generator, original vs transformed
  double direct = 0.0;          // direct Liouvillian, original vs transformed
  double gamma = 0.0;           // ||Gamma' - Gamma||, only invariant for beta = 0

  BlockShifts predicted;
  BlockShifts observed;
  double d00_shift = 0.0;       // |observed - predicted|
  double d_vec_shift = 0.0;
  double c_vec_shift = 0.0;
  double h_prime_trace_shift = 0.0;

  double matrix_scale = 1.0;
  double superop_scale = 1.0;
  AuditTolerances tol;
  bool pass = false;

  double worst_invariant_ratio() const;  // max residual / (tol * scale)
  double worst_shift_ratio() const;
};

AuditReport audit(const LindbladSpec& spec, const SymmetryTransform& t, const SuNBasis& basis,
                  const AuditTolerances& tol = {});
AuditReport audit(const LindbladSpec& spec, const SymmetryTransform& t, const AuditTolerances& tol = {});

// D' = O^T D O, C' = O^T C O (and D, C vectors -> O^T D, O^T C, Gamma
// conjugated accordingly). Throws DomainError if O is not orthogonal within 1e-12.
GammaBlocks change_operator_basis(const GammaBlocks& blocks, const RealMatrix& o);

// T'_i = sum_j (O^T)_ij T_j, with tensors recomputed for the new family.
SuNBasis transform_basis(const SuNBasis& basis, const RealMatrix& o);

}  // namespace gksl
