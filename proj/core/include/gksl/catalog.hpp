#pragma once

#include <map>
#include <string>
#include <vector>

#include "gksl/generator.hpp"
#include "gksl/types.hpp"

namespace gksl::catalog {

// Pauli matrices and sigma_pm = (sigma_1 +- i sigma_2)/2 in the basis
// {|0>, |1>} with sigma_3 = diag(1, -1). sigma_minus = |1><0|.
Matrix sigma1();
Matrix sigma2();
Matrix sigma3();
Matrix sigma_plus();
Matrix sigma_minus();

// L = { sqrt(gamma n_th) sigma_+, sqrt(gamma (n_th + 1)) sigma_- }.
// An empty `hamiltonian` means H = 0. Throws DomainError for negative inputs.
LindbladSpec qubit_thermal(double gamma, double n_th, const Matrix& hamiltonian = {}, double hbar = 1.0);

// The n_th -> infinity limit with gamma n_th -> gamma: L = { sqrt(gamma) sigma_+, sqrt(gamma) sigma_- }.
LindbladSpec qubit_infinite_temperature(double gamma, double hbar = 1.0);

// L = { sqrt(gamma/2) sigma_1, sqrt(gamma/2) sigma_2 }, H = 0.
LindbladSpec qubit_depolarizing(double gamma, double hbar = 1.0);

// The 2x2 unitary W with W {sqrt(g) s+, sqrt(g) s-} = {sqrt(g/2) s1, sqrt(g/2) s2}:
//   W = (1/sqrt 2) [[1, 1], [-i, i]]
Matrix infinite_temperature_to_depolarizing();

struct EigenoperatorComponent {
  double omega = 0.0;
  Matrix op;
};

// X(omega) = sum_{e_a - e_b = omega} |e_b><e_b| X |e_a><e_a|, so X(omega)
// lowers the energy by omega: omega > 0 components are lowering parts.
// Bohr frequencies are grouped by single-linkage clustering with absolute
// tolerance omega_tol; each group is reported at its mean frequency.
// Components come back in ascending omega; zero components are kept so that
// sum_omega X(omega) = X. Throws DomainError for omega_tol <= 0.
std::vector<EigenoperatorComponent> energy_eigenoperators(const Matrix& h_system, const Matrix& x, double omega_tol);

struct SecularChannel {
  double omega = 0.0;
  Matrix rates;  // gamma_ij(omega), PSD, couplings x couplings
  Matrix lamb;   // S_ij(omega), Hermitian; empty means zero
};

// Generator non-unitary part, with X_i(omega) the eigenoperators of coupling i:
//   (1/(2 hbar)) sum_omega sum_ij gamma_ij(omega) (2 X_i rho X_j^dag - {X_j^dag X_i, rho})
// realized by diagonalizing gamma(omega) = U diag(lambda) U^dag into
//   L_k = sqrt(lambda_k) sum_i U_ik X_i(omega).
// Lamb shift H_LS = sum_omega sum_ij S_ij(omega) X_i(omega)^dag X_j(omega).
struct SecularInput {
  Matrix h_system;
  std::vector<Matrix> couplings;  // traceless Hermitian
  std::vector<SecularChannel> channels;
  double omega_tol = -1.0;        // <= 0 means 1e-9 * max(1, ||H_S||_F)
  double hbar = 1.0;
};

struct SecularResult {
  LindbladSpec spec;  // H = H_S + H_LS
  Matrix lamb_shift;
  // Bohr frequencies found (ascending), after grouping.
  std::vector<double> bohr_frequencies;
};

// Throws DomainError for a non-PSD rate matrix, a non-Hermitian S, a
// non-traceless coupling, or a channel frequency that matches no Bohr
// frequency, and InternalConsistencyError if [H_LS, H_S] != 0 beyond 1e-10.
SecularResult secular_generator(const SecularInput& input);

// Qubit with H_S = (omega0/2) sigma_3 coupled through sigma_1, with
// gamma(+omega0) = gamma (n_th + 1), gamma(-omega0) = gamma n_th and Lamb
// coefficients S(+omega0) = s_plus, S(-omega0) = s_minus.
SecularInput qubit_secular_input(double omega0, double gamma, double n_th, double s_plus = 0.0, double s_minus = 0.0);

// Named catalog entries for the CLI: "qubit-thermal", "qubit-infinite-temperature",
// "qubit-depolarizing", "qubit-secular". Parameters are looked up by name
// (gamma, nth, omega0, lamb-plus, lamb-minus, hbar) with documented defaults.
std::vector<std::string> entry_names();
LindbladSpec entry(const std::string& name, const std::map<std::string, double>& params);

}  // namespace gksl::catalog
