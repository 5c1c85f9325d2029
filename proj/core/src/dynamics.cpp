#include "gksl/dynamics.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "gksl/errors.hpp"

namespace gksl {

namespace {

double min_hermitian_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix DensityMatrix::checked(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw DomainError("density matrix must be square and non-empty");
  const Physicality p = physicality_report(rho);
  if (p.hermiticity_residual > 1e-12) throw DomainError("density matrix is not Hermitian");
  if (p.trace_deviation > 1e-12) throw DomainError("density matrix trace differs from 1");
  if (p.min_eigenvalue < -1e-10) {
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(p.min_eigenvalue));
  }
  return DensityMatrix(std::move(rho));
}

Matrix propagator(const Superoperator& s, double t) {
  if (!(t >= 0.0)) throw DomainError("propagation time must be >= 0");
  if (t == 0.0) return Matrix::Identity(s.matrix().rows(), s.matrix().cols());
  const Matrix scaled = t * s.matrix();
  return scaled.exp();
}

DensityMatrix propagate(const Superoperator& s, const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0)) throw DomainError("propagation time must be >= 0");
  require_square(rho0.matrix(), s.dim(), "initial state");
  if (t == 0.0) return rho0;
  return DensityMatrix::unchecked(devectorize(propagator(s, t) * vectorize(rho0.matrix())));
}

std::vector<DensityMatrix> trajectory(const Superoperator& s, const DensityMatrix& rho0, std::span<const double> times) {
  require_square(rho0.matrix(), s.dim(), "initial state");
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  double now = 0.0;
  Vector state = vectorize(rho0.matrix());
  double cached_dt = -1.0;
  Matrix cached;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    if (!(t >= 0.0)) throw DomainError("trajectory times must be nonnegative");
    if (t < now) throw DomainError("trajectory times must be ascending");
    const double dt = t - now;
    if (dt > 0.0) {
      if (dt != cached_dt) {
        cached = propagator(s, dt);
        cached_dt = dt;
      }
      state = cached * state;
    }
    now = t;
    out.push_back(DensityMatrix::unchecked(devectorize(state)));
  }
  return out;
}

Physicality physicality_report(const Matrix& rho) {
  Physicality p;
  p.trace_deviation = std::abs(rho.trace() - Complex(1.0));
  p.hermiticity_residual = hermiticity_residual(rho);
  p.min_eigenvalue = min_hermitian_eigenvalue(rho);
  return p;
}

Matrix choi_matrix(const Superoperator& map) {
  const int n = map.dim();
  Matrix choi = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      choi += Eigen::kroneckerProduct(e, map.apply(e)).eval();
    }
  return choi;
}

double min_choi_eigenvalue(const Superoperator& map) { return min_hermitian_eigenvalue(choi_matrix(map)); }

}  // namespace gksl
