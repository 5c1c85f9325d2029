#include <benchmark/benchmark.h>

#include "gksl/dynamics.hpp"
#include "gksl/fd_decomposition.hpp"
#include "gksl/random.hpp"
#include "gksl/sun_basis.hpp"
#include "gksl/symmetry.hpp"

using namespace gksl;

static void BM_BuildBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SuNBasis::build(n));
}
BENCHMARK(BM_BuildBasis)->DenseRange(2, 6);

static void BM_LiouvillianDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = split_stream(1, 0);
  const LindbladSpec s = random_spec(n, n * n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(liouvillian_direct(s));
}
BENCHMARK(BM_LiouvillianDirect)->DenseRange(2, 5);

static void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = split_stream(2, 0);
  const LindbladSpec s = random_spec(n, n * n, rng);
  const SuNBasis b = SuNBasis::build(n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s, b));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 5);

static void BM_Audit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = split_stream(3, 0);
  const LindbladSpec s = random_spec(n, 3, rng);
  const SymmetryTransform t = random_transform(3, rng);
  const SuNBasis b = SuNBasis::build(n);
  for (auto _ : state) benchmark::DoNotOptimize(audit(s, t, b));
}
BENCHMARK(BM_Audit)->DenseRange(2, 4);

static void BM_Propagate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = split_stream(4, 0);
  const Superoperator m = liouvillian_direct(random_spec(n, 2, rng));
  const DensityMatrix rho0 = DensityMatrix::checked(random_density_matrix(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(m, rho0, 0.7));
}
BENCHMARK(BM_Propagate)->DenseRange(2, 5);

BENCHMARK_MAIN();
