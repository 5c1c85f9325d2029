#pragma once

#include <cstdint>
#include <random>

#include "gksl/generator.hpp"
#include "gksl/types.hpp"

namespace gksl {

using Rng = std::mt19937_64;

// Independent, reproducible stream for trial `index` of a run seeded with
// `seed` (splitmix64 mixing of the pair).
Rng split_stream(std::uint64_t seed, std::uint64_t index);

// Entries (x + i y)/sqrt(2) with x, y ~ N(0, 1).
Matrix random_gaussian_matrix(int rows, int cols, Rng& rng);
Matrix random_hermitian(int n, Rng& rng);
// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// diag(R) moved into Q.
Matrix haar_unitary(int n, Rng& rng);
// Haar-distributed real orthogonal matrix (same construction over the reals).
RealMatrix random_orthogonal(int n, Rng& rng);
// Full-rank density matrix G G^dag / Tr(G G^dag).
Matrix random_density_matrix(int n, Rng& rng);
Matrix random_traceless(int n, Rng& rng);

// Complex Gaussian H (Hermitized) and K jump operators.
LindbladSpec random_spec(int n, int k, Rng& rng, double hbar = 1.0);
// Same, with every jump operator projected onto its traceless part.
LindbladSpec random_traceless_spec(int n, int k, Rng& rng, double hbar = 1.0);

}  // namespace gksl
