// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "gelfand/model_hecke.hpp"
#include "gelfand/model_sn.hpp"
#include "gelfand/perm.hpp"
#include "gelfand/qpoly.hpp"

namespace {

using namespace gelfand;

PolyMatrix t_mu_matrix(int n) {
  const ModelBasis basis(n);
  return rho_q_of_word(t_mu_word(Partition::ones(n)), basis);
}

void BM_MatMulParallel(benchmark::State& state) {
  const PolyMatrix a = t_mu_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, a));
}

void BM_MatMulSerial(benchmark::State& state) {
  const PolyMatrix a = t_mu_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::mat_mul(a, a));
}

void BM_SquareRootsParallel(benchmark::State& state) {
  const Permutation id = Permutation::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(square_roots_count(id));
}

void BM_SquareRootsSerial(benchmark::State& state) {
  const Permutation id = Permutation::identity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::square_roots_count(id));
}

void BM_OracleTableParallel(benchmark::State& state) {
  const ModelBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(involutive_length_oracle_table(basis));
}

void BM_OracleTableSerial(benchmark::State& state) {
  const ModelBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::involutive_length_oracle_table(basis));
}

}  // namespace

BENCHMARK(BM_MatMulParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatMulSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareRootsParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareRootsSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleTableParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleTableSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
