#pragma once

#include <vector>

#include "gksl/superoperator.hpp"
#include "gksl/types.hpp"

namespace gksl {

inline constexpr double kHermiticityTol = 1e-12;

// A Lindblad generator in Schroedinger picture:
//   L(rho) = -(i/hbar)[H, rho] + (1/(2 hbar)) sum_k (2 L_k rho L_k^dag - {L_k^dag L_k, rho}).
// The 1/(2 hbar) prefactor is kept verbatim, so jump operators carry units of
// sqrt(energy * hbar). A dissipator written as gamma (A rho A^dag - {A^dag A, rho}/2)
// with gamma in 1/time corresponds to L_k = sqrt(hbar * gamma) A.
struct LindbladSpec {
  int n = 0;
  Matrix hamiltonian;
  std::vector<Matrix> jumps;
  double hbar = 1.0;

  int channels() const noexcept { return static_cast<int>(jumps.size()); }
};

// Checks shapes, hbar > 0 and Hermiticity of H (relative Frobenius 1e-12).
// Returns a copy with H replaced by (H + H^dag)/2. Throws InvalidSpec naming
// the offending field.
LindbladSpec validated(LindbladSpec spec);

LindbladSpec make_spec(Matrix hamiltonian, std::vector<Matrix> jumps, double hbar = 1.0);

// -(i/hbar)(1 (x) H - H^T (x) 1)
Superoperator unitary_part(const Matrix& hamiltonian, double hbar);

// (1/(2 hbar)) sum_k [2 conj(L_k) (x) L_k - 1 (x) L_k^dag L_k - (L_k^dag L_k)^T (x) 1]
Superoperator dissipative_part(const LindbladSpec& spec);

Superoperator liouvillian_direct(const LindbladSpec& spec);

// Cartesian split L_k = A_k + i B_k with A_k, B_k Hermitian and
//   L1 = -(1/(2 hbar)) sum_k ([A_k,[A_k, .]] + [B_k,[B_k, .]])
//   L2 =  (1/(2 hbar)) sum_k (1/2) {[L_k, L_k^dag], .}
//   L3 =  (1/(2 hbar)) sum_k (L_k . L_k^dag - L_k^dag . L_k)
// Built from the operators only, independently of any operator basis.
struct CartesianParts {
  std::vector<Matrix> a_ops;
  std::vector<Matrix> b_ops;
  Superoperator l1, l2, l3;
  double hbar = 1.0;

  Superoperator total() const { return l1 + l2 + l3; }

  // Quantum Langevin forces sqrt(hbar) A_k followed by sqrt(hbar) B_k.
  std::vector<Matrix> langevin_forces() const;
};

CartesianParts cartesian_parts(const LindbladSpec& spec);

}  // namespace gksl
