#include <benchmark/benchmark.h>

#include <random>

#include "unitlab/ball.hpp"
#include "unitlab/datasets.hpp"
#include "unitlab/encode.hpp"
#include "unitlab/fib_wp.hpp"
#include "unitlab/group_ring.hpp"
#include "unitlab/h4_group.hpp"
#include "unitlab/p_group.hpp"
#include "unitlab/solve.hpp"

namespace {

using namespace unitlab;

void BM_BallP(benchmark::State& state) {
  const PGroup p;
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CayleyBall<PGroup>::build(p, r).size());
}
BENCHMARK(BM_BallP)->Arg(4)->Arg(6)->Arg(8);

void BM_BallH4(benchmark::State& state) {
  const H4Group h;
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CayleyBall<H4Group>::build(h, {H4Group::kA, H4Group::kB, H4Group::kR}, r).size());
  }
}
BENCHMARK(BM_BallH4)->Arg(3)->Arg(4);

void BM_RingMulUnitPair(benchmark::State& state) {
  const PGroup p;
  const auto [u, v] = radius4_pairs().front();
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(p, u, v).size());
}
BENCHMARK(BM_RingMulUnitPair);

void BM_RingMulRadius6Swap(benchmark::State& state) {
  const PGroup p;
  const auto s = radius6_swap_units().front();
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(p, s, s).size());
}
BENCHMARK(BM_RingMulRadius6Swap);

void BM_EncodeUnit(benchmark::State& state) {
  const PGroup p;
  const auto ball = CayleyBall<PGroup>::build(p, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(encode_unit_search(p, ball).clauses().size());
}
BENCHMARK(BM_EncodeUnit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveRadius3(benchmark::State& state) {
  const PGroup p;
  const auto c = encode_unit_search(p, CayleyBall<PGroup>::build(p, 3));
  for (auto _ : state) benchmark::DoNotOptimize(solve(c).status);
}
BENCHMARK(BM_SolveRadius3)->Unit(benchmark::kSecond)->Iterations(1);

void BM_KnNormalize(benchmark::State& state) {
  const int n = 6;
  const auto len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> gen(0, n - 1);
  std::bernoulli_distribution sign;
  GroupWord w;
  for (std::size_t i = 0; i < len; ++i) w.append(gen(rng), sign(rng) ? 1 : -1);
  for (auto _ : state) benchmark::DoNotOptimize(kn_normalize(w, n).indices.size());
}
BENCHMARK(BM_KnNormalize)->Arg(16)->Arg(256)->Arg(4096);

void BM_HnWordProblem(benchmark::State& state) {
  const GroupWord w = parse_word("x1*x2*x3*x4*x5*x1^-1*x3^2*x5^-1", numbered_alphabet("x", 5));
  for (auto _ : state) benchmark::DoNotOptimize(hn_is_identity(w, 5, 200000).answer);
}
BENCHMARK(BM_HnWordProblem);

}  // namespace
BENCHMARK_MAIN();
