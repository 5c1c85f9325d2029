#include "gksl/random.hpp"

#include <cmath>

namespace gksl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng split_stream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

Matrix random_gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(s * re, s * im);
    }
  return m;
}

Matrix random_hermitian(int n, Rng& rng) {
  const Matrix g = random_gaussian_matrix(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

Matrix haar_unitary(int n, Rng& rng) {
  const Matrix z = random_gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    const Complex phase = a > 0.0 ? r(j, j) / a : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

RealMatrix random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(z);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

Matrix random_density_matrix(int n, Rng& rng) {
  const Matrix g = random_gaussian_matrix(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

Matrix random_traceless(int n, Rng& rng) { return traceless_part(random_gaussian_matrix(n, n, rng)); }

LindbladSpec random_spec(int n, int k, Rng& rng, double hbar) {
  Matrix h = random_hermitian(n, rng);
  std::vector<Matrix> jumps;
  jumps.reserve(k);
  for (int j = 0; j < k; ++j) jumps.push_back(random_gaussian_matrix(n, n, rng));
  return make_spec(std::move(h), std::move(jumps), hbar);
}

LindbladSpec random_traceless_spec(int n, int k, Rng& rng, double hbar) {
  LindbladSpec s = random_spec(n, k, rng, hbar);
  for (Matrix& l : s.jumps) l = traceless_part(l);
  return s;
}

}  // namespace gksl
