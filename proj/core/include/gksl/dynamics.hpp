#pragma once

#include <span>
#include <vector>

#include "gksl/superoperator.hpp"
#include "gksl/types.hpp"

namespace gksl {

class DensityMatrix {
 public:
  // Hermitian within 1e-12 (Frobenius), unit trace within 1e-12, min
  // eigenvalue >= -1e-10. Throws DomainError otherwise.
  static DensityMatrix checked(Matrix rho);
  // No validation; used for propagated states, whose deviations are reported
  // by physicality_report() rather than thrown.
  static DensityMatrix unchecked(Matrix rho) { return DensityMatrix(std::move(rho)); }

  const Matrix& matrix() const noexcept { return rho_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }

 private:
  explicit DensityMatrix(Matrix rho) : rho_(std::move(rho)) {}
  Matrix rho_;
};

// exp(t M) via Pade scaling and squaring.
Matrix propagator(const Superoperator& s, double t);

// vec^-1(exp(t M) vec(rho0)). Throws DomainError for t < 0.
DensityMatrix propagate(const Superoperator& s, const DensityMatrix& rho0, double t);

// States at each of `times` (ascending, nonnegative), stepping with
// exp(dt M) from one time to the next starting at t = 0.
std::vector<DensityMatrix> trajectory(const Superoperator& s, const DensityMatrix& rho0, std::span<const double> times);

struct Physicality {
  double trace_deviation = 0.0;       // |Tr rho - 1|
  double hermiticity_residual = 0.0;  // ||rho - rho^dag||_F
  double min_eigenvalue = 0.0;        // of the Hermitian part
};

Physicality physicality_report(const Matrix& rho);
inline Physicality physicality_report(const DensityMatrix& rho) { return physicality_report(rho.matrix()); }

// Choi matrix sum_ij E_ij (x) Phi(E_ij) of the map with superoperator matrix
// `map` (N^2 x N^2). Phi is completely positive iff this is PSD.
Matrix choi_matrix(const Superoperator& map);
double min_choi_eigenvalue(const Superoperator& map);

}  // namespace gksl
