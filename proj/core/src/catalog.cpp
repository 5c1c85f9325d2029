#include "gksl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gksl/errors.hpp"

namespace gksl::catalog {

namespace {

struct BohrGroup {
  double omega = 0.0;
  std::vector<std::pair<int, int>> pairs;  // (a, b) with e_a - e_b ~ omega
};

struct Spectrum {
  RealVector energies;
  Matrix vectors;
};

Spectrum diagonalize(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<BohrGroup> bohr_groups(const RealVector& e, double tol) {
  struct Item {
    double omega;
    int a, b;
  };
  std::vector<Item> items;
  const int n = static_cast<int>(e.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) items.push_back({e(a) - e(b), a, b});
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.omega < y.omega; });

  std::vector<BohrGroup> groups;
  double last = 0.0;
  double sum = 0.0;
  for (const Item& it : items) {
    if (groups.empty() || it.omega - last > tol) {
      if (!groups.empty()) groups.back().omega = sum / static_cast<double>(groups.back().pairs.size());
      groups.push_back({});
      sum = 0.0;
    }
    groups.back().pairs.emplace_back(it.a, it.b);
    sum += it.omega;
    last = it.omega;
  }
  if (!groups.empty()) groups.back().omega = sum / static_cast<double>(groups.back().pairs.size());
  return groups;
}

std::vector<EigenoperatorComponent> components(const Spectrum& sp, const std::vector<BohrGroup>& groups,
                                               const Matrix& x) {
  const Matrix xe = sp.vectors.adjoint() * x * sp.vectors;
  const auto n = xe.rows();
  std::vector<EigenoperatorComponent> out;
  out.reserve(groups.size());
  for (const BohrGroup& g : groups) {
    Matrix y = Matrix::Zero(n, n);
    for (const auto& [a, b] : g.pairs) y(b, a) = xe(b, a);
    out.push_back({g.omega, sp.vectors * y * sp.vectors.adjoint()});
  }
  return out;
}

void require_hermitian(const Matrix& m, const std::string& what, double tol) {
  if (m.rows() != m.cols()) throw ShapeMismatch(what + " must be square");
  if (hermiticity_residual(m) > tol * std::max(1.0, m.norm())) throw DomainError(what + " is not Hermitian");
}

double param(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

Matrix sigma1() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix sigma2() {
  Matrix m(2, 2);
  m << Complex(0.0), -kI, kI, Complex(0.0);
  return m;
}

Matrix sigma3() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix sigma_plus() { return 0.5 * (sigma1() + kI * sigma2()); }
Matrix sigma_minus() { return 0.5 * (sigma1() - kI * sigma2()); }

LindbladSpec qubit_thermal(double gamma, double n_th, const Matrix& hamiltonian, double hbar) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  if (!(n_th >= 0.0)) throw DomainError("n_th must be >= 0");
  Matrix h = hamiltonian.size() ? hamiltonian : Matrix::Zero(2, 2);
  return make_spec(std::move(h),
                   {std::sqrt(gamma * n_th) * sigma_plus(), std::sqrt(gamma * (n_th + 1.0)) * sigma_minus()}, hbar);
}

LindbladSpec qubit_infinite_temperature(double gamma, double hbar) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  return make_spec(Matrix::Zero(2, 2), {std::sqrt(gamma) * sigma_plus(), std::sqrt(gamma) * sigma_minus()}, hbar);
}

LindbladSpec qubit_depolarizing(double gamma, double hbar) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  const double a = std::sqrt(gamma / 2.0);
  return make_spec(Matrix::Zero(2, 2), {a * sigma1(), a * sigma2()}, hbar);
}

Matrix infinite_temperature_to_depolarizing() {
  Matrix w(2, 2);
  w << Complex(1.0), Complex(1.0), -kI, kI;
  return w / std::sqrt(2.0);
}

std::vector<EigenoperatorComponent> energy_eigenoperators(const Matrix& h_system, const Matrix& x, double omega_tol) {
  if (!(omega_tol > 0.0)) throw DomainError("omega_tol must be > 0");
  require_hermitian(h_system, "H_S", 1e-12);
  require_square(x, static_cast<int>(h_system.rows()), "operator");
  const Spectrum sp = diagonalize(h_system);
  return components(sp, bohr_groups(sp.energies, omega_tol), x);
}

SecularResult secular_generator(const SecularInput& input) {
  require_hermitian(input.h_system, "H_S", 1e-12);
  const int n = static_cast<int>(input.h_system.rows());
  const int nc = static_cast<int>(input.couplings.size());
  for (int i = 0; i < nc; ++i) {
    const Matrix& x = input.couplings[i];
    require_square(x, n, "coupling operator");
    require_hermitian(x, "coupling " + std::to_string(i), 1e-12);
    if (std::abs(x.trace()) > 1e-12 * std::max(1.0, x.norm())) {
      throw DomainError("coupling " + std::to_string(i) + " is not traceless");
    }
  }
  const double tol = input.omega_tol > 0.0 ? input.omega_tol : 1e-9 * std::max(1.0, input.h_system.norm());

  const Spectrum sp = diagonalize(input.h_system);
  const std::vector<BohrGroup> groups = bohr_groups(sp.energies, tol);
  std::vector<std::vector<EigenoperatorComponent>> parts;
  parts.reserve(nc);
  for (const Matrix& x : input.couplings) parts.push_back(components(sp, groups, x));

  SecularResult out;
  for (const BohrGroup& g : groups) out.bohr_frequencies.push_back(g.omega);
  Matrix h_ls = Matrix::Zero(n, n);
  std::vector<Matrix> jumps;

  for (const SecularChannel& ch : input.channels) {
    std::size_t match = groups.size();
    double best = tol;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double dist = std::abs(groups[g].omega - ch.omega);
      if (dist <= best) {
        best = dist;
        match = g;
      }
    }
    if (match == groups.size()) {
      throw DomainError("channel frequency " + std::to_string(ch.omega) + " is not a Bohr frequency of H_S");
    }
    const std::string where = "rates at omega = " + std::to_string(ch.omega);
    if (ch.rates.rows() != nc || ch.rates.cols() != nc) throw ShapeMismatch(where + " must be couplings x couplings");
    require_hermitian(ch.rates, where, 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (ch.rates + ch.rates.adjoint()));
    const double scale = std::max(1.0, ch.rates.norm());
    if (nc > 0 && solver.eigenvalues().minCoeff() < -1e-11 * scale) throw DomainError(where + " is not PSD");

    for (int k = 0; k < nc; ++k) {
      const double lambda = solver.eigenvalues()(k);
      if (lambda <= 1e-14 * scale) continue;
      Matrix l = Matrix::Zero(n, n);
      for (int i = 0; i < nc; ++i) l += solver.eigenvectors()(i, k) * parts[i][match].op;
      l *= std::sqrt(lambda);
      if (std::abs(l.trace()) > 1e-12 * std::max(1.0, l.norm())) {
        throw InternalConsistencyError("secular Lindblad operator is not traceless", std::abs(l.trace()));
      }
      jumps.push_back(std::move(l));
    }

    if (ch.lamb.size()) {
      if (ch.lamb.rows() != nc || ch.lamb.cols() != nc) throw ShapeMismatch("Lamb coefficients must be couplings x couplings");
      require_hermitian(ch.lamb, "Lamb coefficients at omega = " + std::to_string(ch.omega), 1e-12);
      for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
          if (ch.lamb(i, j) != Complex{}) h_ls += ch.lamb(i, j) * (parts[i][match].op.adjoint() * parts[j][match].op);
    }
  }
  h_ls = 0.5 * (h_ls + h_ls.adjoint());

  const double comm = commutator(h_ls, input.h_system).norm();
  if (comm > 1e-10 * std::max(1.0, h_ls.norm() * input.h_system.norm())) {
    throw InternalConsistencyError("Lamb shift does not commute with H_S; check the Bohr-frequency grouping", comm);
  }

  out.lamb_shift = h_ls;
  out.spec = make_spec(input.h_system + h_ls, std::move(jumps), input.hbar);
  return out;
}

SecularInput qubit_secular_input(double omega0, double gamma, double n_th, double s_plus, double s_minus) {
  if (!(gamma >= 0.0) || !(n_th >= 0.0)) throw DomainError("gamma and n_th must be >= 0");
  if (!(omega0 > 0.0)) throw DomainError("omega0 must be > 0");
  SecularInput in;
  in.h_system = 0.5 * omega0 * sigma3();
  in.couplings = {sigma1()};
  auto one = [](double v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  in.channels.push_back({omega0, one(gamma * (n_th + 1.0)), one(s_plus)});
  in.channels.push_back({-omega0, one(gamma * n_th), one(s_minus)});
  return in;
}

std::vector<std::string> entry_names() {
  return {"qubit-thermal", "qubit-infinite-temperature", "qubit-depolarizing", "qubit-secular"};
}

LindbladSpec entry(const std::string& name, const std::map<std::string, double>& params) {
  const double gamma = param(params, "gamma", 1.0);
  const double hbar = param(params, "hbar", 1.0);
  if (name == "qubit-thermal") return qubit_thermal(gamma, param(params, "nth", 0.0), {}, hbar);
  if (name == "qubit-infinite-temperature") return qubit_infinite_temperature(gamma, hbar);
  if (name == "qubit-depolarizing") return qubit_depolarizing(gamma, hbar);
  if (name == "qubit-secular") {
    SecularInput in = qubit_secular_input(param(params, "omega0", 1.0), gamma, param(params, "nth", 0.0),
                                          param(params, "lamb-plus", 0.0), param(params, "lamb-minus", 0.0));
    in.hbar = hbar;
    return secular_generator(in).spec;
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

}  // namespace gksl::catalog
