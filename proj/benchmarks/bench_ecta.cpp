#include <benchmark/benchmark.h>

#include <random>

#include "ecta/enumerate.hpp"
#include "ecta/random.hpp"
#include "ecta/reduce.hpp"
#include "ecta/sat.hpp"
#include "ecta/synth.hpp"
#include "support/fixtures.hpp"

using namespace ecta;

namespace {

void BM_IntersectCold(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    std::mt19937_64 rng(7 + state.iterations());
    SymbolTable sy;
    NodeStore s(sy);
    NodeId a = random_acyclic_ecta(s, rng);
    NodeId b = random_acyclic_ecta(s, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(intersect(s, a, b));
  }
}
BENCHMARK(BM_IntersectCold);

void BM_IntersectCached(benchmark::State& state) {
  std::mt19937_64 rng(7);
  SymbolTable sy;
  NodeStore s(sy);
  std::vector<NodeId> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_acyclic_ecta(s, rng));
  size_t i = 0;
  for (auto _ : state) {
    NodeId a = pool[i % pool.size()];
    NodeId b = pool[(i * 31 + 7) % pool.size()];
    benchmark::DoNotOptimize(intersect(s, a, b));
    ++i;
  }
}
BENCHMARK(BM_IntersectCached);

void BM_ReduceFixpoint(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    SymbolTable sy;
    NodeStore s(sy);
    auto fig = testsupport::build_typed_query(s);
    state.ResumeTiming();
    benchmark::DoNotOptimize(reduce_fixpoint(s, fig.root));
  }
}
BENCHMARK(BM_ReduceFixpoint);

void BM_EnumerateEqualTree(benchmark::State& state) {
  uint32_t depth = static_cast<uint32_t>(state.range(0));
  SymbolTable sy;
  NodeStore s(sy);
  TermStore ts(sy);
  NodeId root = testsupport::build_equal_tree(s, depth);
  for (auto _ : state) {
    size_t total = 0;
    enumerate(s, root, {}, [&](const EnumState& st) {
      total += expand(s, ts, st, 100).size();
      return true;
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateEqualTree)->DenseRange(3, 8);

void BM_SatSolve(benchmark::State& state) {
  Cnf cnf = parse_dimacs(
      "p cnf 8 12\n1 2 3 0\n-1 4 0\n-2 5 0\n-3 6 0\n-4 -5 0\n-5 -6 0\n"
      "7 8 0\n-7 -8 0\n1 -6 7 0\n2 -4 8 0\n3 5 -7 0\n-1 -2 -3 0\n");
  SatOptions o;
  o.all = true;
  for (auto _ : state) {
    SymbolTable sy;
    NodeStore s(sy);
    benchmark::DoNotOptimize(sat_solve(s, cnf, o));
  }
}
BENCHMARK(BM_SatSolve);

void BM_Synthesize(benchmark::State& state) {
  SynthesisProblem p;
  p.library = parse_library(testsupport::prelude_library());
  p.query = parse_type("a -> [Maybe a] -> a");
  p.input_names = {"def", "mbs"};
  p.max_size = 5;
  for (auto _ : state) {
    SymbolTable sy;
    NodeStore s(sy);
    benchmark::DoNotOptimize(synthesize(s, p));
  }
}
BENCHMARK(BM_Synthesize);

}  // namespace

BENCHMARK_MAIN();
