/* Micro benchmarks for the hot paths: coordinate extraction, Schur
 * expansion, hyperdeterminant evaluation and the bilinear residue. */

#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "lgr/combinat.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/hyperdet.hpp"
#include "lgr/matrix.hpp"
#include "lgr/random.hpp"
#include "lgr/symfunc.hpp"
#include "lgr/tau.hpp"

namespace {

using namespace lgr;

void bm_plucker(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const Subspace w = graph_subspace(rng.symmetric(n, 9, 9));
  for (auto _ : state) benchmark::DoNotOptimize(plucker(w));
}
BENCHMARK(bm_plucker)->Arg(3)->Arg(4)->Arg(5);

void bm_schur(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  Partition lam;
  for (int rest = w; rest > 0;) {
    const int part = (rest + 1) / 2;
    lam.push_back(part);
    rest -= part;
  }
  for (auto _ : state) benchmark::DoNotOptimize(schur(lam, w));
}
BENCHMARK(bm_schur)->Arg(8)->Arg(12)->Arg(16);

void bm_cayley(benchmark::State& state) {
  Rng rng(7);
  MinorCube c;
  for (int k = 0; k <= 3; ++k)
    for (const auto& s : subsets_of(3, k))
      c.at(s) = minor_det(rng.symmetric(3, 99, 99), s, s);
  for (auto _ : state) benchmark::DoNotOptimize(cayley222(c));
}
BENCHMARK(bm_cayley);

void bm_hirota(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const TauPoly tau = tau_from_symmetric(rng.symmetric(n, 9, 9));
  const int m = tau.poly.vars();
  std::vector<Rat> t(m), dt(std::min(m, 4));
  for (auto& v : t) v = rng.rat(3, 3);
  for (auto& v : dt) v = rng.rat(3, 3);
  const int trunc = 2 * tau.poly.weighted_degree();
  for (auto _ : state)
    benchmark::DoNotOptimize(hirota_residual(tau, t, dt, trunc));
}
BENCHMARK(bm_hirota)->Arg(2)->Arg(3);

void bm_lagrange_map(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const Subspace w = from_affine(rng.symmetric(n, 9, 9));
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_map(w));
}
BENCHMARK(bm_lagrange_map)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
