#include "gksl/sun_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gksl/errors.hpp"

namespace gksl {

namespace {

constexpr double kOrthogonalityTol = 1e-10;
constexpr double kImaginaryResidueTol = 1e-13;

// Tr(A B) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

}  // namespace

void require_square(const Matrix& m, int n, std::string_view what) {
  if (m.rows() != n || m.cols() != n) {
    throw ShapeMismatch(std::string(what) + ": expected " + std::to_string(n) + "x" +
                        std::to_string(n) + ", got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
  }
}

std::vector<Tensor3::Entry> Tensor3::nonzeros(double cutoff) const {
  std::vector<Entry> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int l = 0; l < n_; ++l) {
        const double v = (*this)(i, j, l);
        if (std::abs(v) > cutoff) out.push_back({i, j, l, v});
      }
  return out;
}

StructureConstants structure_constants(std::span<const Matrix> generators) {
  const int m = static_cast<int>(generators.size());
  if (m == 0) throw InconsistentBasis("empty generator family");
  const auto n = generators.front().rows();

  for (int i = 0; i < m; ++i) {
    require_square(generators[i], static_cast<int>(n), "basis generator");
    for (int j = i; j < m; ++j) {
      const Complex g = trace_of_product(generators[i], generators[j]);
      const double expected = (i == j) ? 2.0 : 0.0;
      if (std::abs(g - expected) > kOrthogonalityTol) {
        throw InconsistentBasis("Tr(T_" + std::to_string(i + 1) + " T_" + std::to_string(j + 1) +
                                ") deviates from 2 delta_ij");
      }
    }
  }

  StructureConstants sc{Tensor3(m), Tensor3(m)};
  std::vector<Matrix> products(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) products[i * m + j] = generators[i] * generators[j];

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Matrix comm = products[i * m + j] - products[j * m + i];
      const Matrix anti = products[i * m + j] + products[j * m + i];
      for (int l = 0; l < m; ++l) {
        const Complex fv = trace_of_product(comm, generators[l]) / (4.0 * kI);
        const Complex dv = trace_of_product(anti, generators[l]) / 4.0;
        if (std::abs(fv.imag()) > kImaginaryResidueTol || std::abs(dv.imag()) > kImaginaryResidueTol) {
          throw InconsistentBasis("structure constants are not real; generators are not Hermitian");
        }
        sc.f(i, j, l) = fv.real();
        sc.d(i, j, l) = dv.real();
      }
    }
  }
  return sc;
}

std::vector<Matrix> adjoint_generators(const Tensor3& f) {
  const int m = f.extent();
  std::vector<Matrix> out;
  out.reserve(m);
  for (int l = 0; l < m; ++l) {
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = -kI * f(l, i, j);
    out.push_back(std::move(g));
  }
  return out;
}

SuNBasis::SuNBasis(int n, std::vector<Matrix> generators)
    : n_(n), t0_(std::sqrt(2.0 / n) * Matrix::Identity(n, n)), generators_(std::move(generators)) {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const Matrix& g = generators_[k];
    if (hermiticity_residual(g) > kOrthogonalityTol || std::abs(g.trace()) > kOrthogonalityTol) {
      throw InconsistentBasis("T_" + std::to_string(k + 1) + " is not traceless Hermitian");
    }
  }
  constants_ = structure_constants(generators_);
  adjoint_ = adjoint_generators(constants_.f);
}

SuNBasis SuNBasis::build(int n) {
  if (n < 2) throw InvalidDimension("basis dimension must be >= 2, got " + std::to_string(n));

  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(n) * n - 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix s = Matrix::Zero(n, n);
      s(a, b) = 1.0;
      s(b, a) = 1.0;
      gens.push_back(std::move(s));
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix s = Matrix::Zero(n, n);
      s(a, b) = -kI;
      s(b, a) = kI;
      gens.push_back(std::move(s));
    }
  for (int m = 1; m < n; ++m) {
    Matrix s = Matrix::Zero(n, n);
    const double norm = std::sqrt(2.0 / (m * (m + 1.0)));
    for (int a = 0; a < m; ++a) s(a, a) = norm;
    s(m, m) = -m * norm;
    gens.push_back(std::move(s));
  }
  return SuNBasis(n, std::move(gens));
}

SuNBasis SuNBasis::from_generators(std::vector<Matrix> generators) {
  if (generators.empty()) throw InconsistentBasis("empty generator family");
  const auto n = generators.front().rows();
  if (static_cast<std::size_t>(n * n - 1) != generators.size()) {
    throw InconsistentBasis("family of " + std::to_string(generators.size()) +
                            " generators does not span su(" + std::to_string(n) + ")");
  }
  if (n < 2) throw InvalidDimension("basis dimension must be >= 2");
  return SuNBasis(static_cast<int>(n), std::move(generators));
}

const Matrix& SuNBasis::element(int nu) const {
  if (nu == 0) return t0_;
  return generators_.at(static_cast<std::size_t>(nu - 1));
}

Vector SuNBasis::expand(const Matrix& x) const {
  require_square(x, n_, "expand_operator");
  Vector alpha(n_ * n_);
  alpha(0) = trace_of_product(t0_, x) / 2.0;
  for (int k = 0; k < size(); ++k) alpha(k + 1) = trace_of_product(generators_[k], x) / 2.0;
  return alpha;
}

Matrix SuNBasis::reconstruct(const Vector& alpha) const {
  if (alpha.size() != n_ * n_) throw ShapeMismatch("coefficient vector must have length N^2");
  Matrix x = alpha(0) * t0_;
  for (int k = 0; k < size(); ++k) x += alpha(k + 1) * generators_[k];
  return x;
}

double SuNBasis::closure_residual() const {
  const int m = size();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Matrix r = generators_[i] * generators_[j];
      if (i == j) r -= (2.0 / n_) * Matrix::Identity(n_, n_);
      for (int l = 0; l < m; ++l) {
        const Complex c(constants_.d(i, j, l), constants_.f(i, j, l));
        if (c != Complex{}) r -= c * generators_[l];
      }
      worst = std::max(worst, r.norm());
    }
  return worst;
}

}  // namespace gksl
