#include "gksl/generator.hpp"

#include <cmath>
#include <string>

#include "gksl/errors.hpp"

namespace gksl {

LindbladSpec validated(LindbladSpec spec) {
  if (spec.n < 1) throw InvalidSpec("N", "dimension must be positive");
  if (!(spec.hbar > 0.0) || !std::isfinite(spec.hbar)) throw InvalidSpec("hbar", "must be positive and finite");
  if (spec.hamiltonian.rows() != spec.n || spec.hamiltonian.cols() != spec.n) {
    throw InvalidSpec("H", "expected " + std::to_string(spec.n) + "x" + std::to_string(spec.n) + " matrix");
  }
  if (!spec.hamiltonian.allFinite()) throw InvalidSpec("H", "non-finite entry");
  const double herm = hermiticity_residual(spec.hamiltonian);
  if (herm > kHermiticityTol * spec.hamiltonian.norm()) {
    throw InvalidSpec("H", "not Hermitian (||H - H^dag||_F = " + std::to_string(herm) + ")");
  }
  spec.hamiltonian = (0.5 * (spec.hamiltonian + spec.hamiltonian.adjoint())).eval();

  for (std::size_t k = 0; k < spec.jumps.size(); ++k) {
    const Matrix& l = spec.jumps[k];
    const std::string field = "L[" + std::to_string(k) + "]";
    if (l.rows() != spec.n || l.cols() != spec.n) {
      throw InvalidSpec(field, "expected " + std::to_string(spec.n) + "x" + std::to_string(spec.n) + " matrix");
    }
    if (!l.allFinite()) throw InvalidSpec(field, "non-finite entry");
  }
  return spec;
}

LindbladSpec make_spec(Matrix hamiltonian, std::vector<Matrix> jumps, double hbar) {
  LindbladSpec spec;
  spec.n = static_cast<int>(hamiltonian.rows());
  spec.hamiltonian = std::move(hamiltonian);
  spec.jumps = std::move(jumps);
  spec.hbar = hbar;
  return validated(std::move(spec));
}

Superoperator unitary_part(const Matrix& hamiltonian, double hbar) {
  return (-kI / hbar) * Superoperator::commutator(hamiltonian);
}

Superoperator dissipative_part(const LindbladSpec& spec) {
  const int n = spec.n;
  const Matrix id = Matrix::Identity(n, n);
  Matrix m = Matrix::Zero(n * n, n * n);
  for (const Matrix& l : spec.jumps) {
    const Matrix ldl = l.adjoint() * l;
    m += 2.0 * Superoperator::sandwich(l, l.adjoint()).matrix();
    m -= Superoperator::sandwich(ldl, id).matrix();
    m -= Superoperator::sandwich(id, ldl).matrix();
  }
  m /= 2.0 * spec.hbar;
  return {n, std::move(m)};
}

Superoperator liouvillian_direct(const LindbladSpec& spec) {
  const LindbladSpec s = validated(spec);
  return unitary_part(s.hamiltonian, s.hbar) + dissipative_part(s);
}

std::vector<Matrix> CartesianParts::langevin_forces() const {
  std::vector<Matrix> out;
  out.reserve(a_ops.size() + b_ops.size());
  const double s = std::sqrt(hbar);
  for (const Matrix& a : a_ops) out.push_back(s * a);
  for (const Matrix& b : b_ops) out.push_back(s * b);
  return out;
}

CartesianParts cartesian_parts(const LindbladSpec& spec) {
  const LindbladSpec s = validated(spec);
  const int n = s.n;
  CartesianParts parts;
  parts.hbar = s.hbar;
  parts.l1 = Superoperator::zero(n);
  parts.l2 = Superoperator::zero(n);
  parts.l3 = Superoperator::zero(n);

  for (const Matrix& l : s.jumps) {
    Matrix a = 0.5 * (l + l.adjoint());
    Matrix b = (l - l.adjoint()) / (2.0 * kI);
    const Superoperator ca = Superoperator::commutator(a);
    const Superoperator cb = Superoperator::commutator(b);
    parts.l1 += ca * ca + cb * cb;
    parts.l2 += 0.5 * Superoperator::anticommutator(commutator(l, l.adjoint()));
    parts.l3 += Superoperator::sandwich(l, l.adjoint()) - Superoperator::sandwich(l.adjoint(), l);
    parts.a_ops.push_back(std::move(a));
    parts.b_ops.push_back(std::move(b));
  }
  parts.l1 *= Complex(-1.0 / (2.0 * s.hbar));
  parts.l2 *= Complex(1.0 / (2.0 * s.hbar));
  parts.l3 *= Complex(1.0 / (2.0 * s.hbar));
  return parts;
}

}  // namespace gksl
