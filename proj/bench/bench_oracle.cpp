// Serial reference vs OpenMP path for the oracle kernels.

#include "valext/oracle_kernels.hpp"

#include <benchmark/benchmark.h>

using namespace valext::oracle::kernels;

namespace {

// Lower-triangular lattice with last diagonal 7; with unit = true the other
// diagonals are 1 and the cover {k e_n} holds, so the whole box is scanned.
Columns lattice(std::size_t n, bool unit = false) {
  Columns g;
  g.rows = n;
  for (std::size_t j = 0; j < n; ++j) {
    Vec c(n, 0);
    c[j] = j + 1 == n ? 7 : (unit ? 1 : (j % 2 ? 3 : 2));
    for (std::size_t i = j + 1; i < n; ++i) c[i] = static_cast<std::int64_t>((i * 5 + j * 3) % 7) - 3;
    g.cols.push_back(c);
  }
  return g;
}

void min_positive(benchmark::State& state, Exec exec) {
  Columns g = lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_positive_combination(g, state.range(1), exec));
}

void cover_failure(benchmark::State& state, Exec exec) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Columns g = lattice(n, true);
  CosetKey key(g);
  std::vector<Vec> reps;
  for (std::int64_t k = 0; k < 7; ++k) {
    Vec r(n, 0);
    r.back() = k;
    reps.push_back(r);
  }
  for (auto _ : state) benchmark::DoNotOptimize(first_cover_failure(key, reps, state.range(1), exec));
}

}  // namespace

BENCHMARK_CAPTURE(min_positive, serial, Exec::Serial)->Args({3, 8})->Args({4, 5})->Args({4, 8});
BENCHMARK_CAPTURE(min_positive, parallel, Exec::Parallel)->Args({3, 8})->Args({4, 5})->Args({4, 8});
BENCHMARK_CAPTURE(cover_failure, serial, Exec::Serial)->Args({3, 16})->Args({4, 8});
BENCHMARK_CAPTURE(cover_failure, parallel, Exec::Parallel)->Args({3, 16})->Args({4, 8});

BENCHMARK_MAIN();
