#pragma once

#include <cmath>
#include <vector>

#include "gksl/random.hpp"
#include "gksl/types.hpp"

namespace gksl::testing {

// Hand-written oracles, independent of SuNBasis::build.

inline Matrix pauli(int k) {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  switch (k) {
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << Complex(0.0), -i, i, Complex(0.0); break;
    default: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

// Standard Gell-Mann lambda_1 .. lambda_8.
inline Matrix gell_mann(int k) {
  const Complex i{0.0, 1.0};
  const Complex o{0.0, 0.0};
  const Complex l{1.0, 0.0};
  const double r = 1.0 / std::sqrt(3.0);
  Matrix m(3, 3);
  switch (k) {
    case 1: m << o, l, o, l, o, o, o, o, o; break;
    case 2: m << o, -i, o, i, o, o, o, o, o; break;
    case 3: m << l, o, o, o, -l, o, o, o, o; break;
    case 4: m << o, o, l, o, o, o, l, o, o; break;
    case 5: m << o, o, -i, o, o, o, i, o, o; break;
    case 6: m << o, o, o, o, o, l, o, l, o; break;
    case 7: m << o, o, o, o, o, -i, o, i, o; break;
    default: m << r, o, o, o, r, o, o, o, -2.0 * r; break;
  }
  return m;
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

struct CorpusEntry {
  int n;
  int k;
  LindbladSpec spec;
};

// Deterministic random corpus cycling N over {2, 3, 4, 5} with K in 1..N^2.
inline std::vector<CorpusEntry> random_corpus(int count, std::uint64_t seed, bool traceless = false) {
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Rng rng = split_stream(seed, static_cast<std::uint64_t>(c));
    const int n = 2 + c % 4;
    std::uniform_int_distribution<int> kd(1, n * n);
    const int k = kd(rng);
    out.push_back({n, k, traceless ? random_traceless_spec(n, k, rng) : random_spec(n, k, rng)});
  }
  return out;
}

}  // namespace gksl::testing
