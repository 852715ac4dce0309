// Microbenchmarks for the hot verification paths.

#include <benchmark/benchmark.h>

#include <string>

#include "polywin/catalog.hpp"
#include "polywin/paving.hpp"
#include "polywin/priority.hpp"
#include "polywin/proofseq.hpp"
#include "polywin/solver.hpp"
#include "polywin/stages.hpp"

using namespace polywin;

namespace {

const std::string kData = POLYWIN_DATA_DIR;

Polyform poly(const std::string& name) {
  return load_polyform(kData + "/polyforms/" + name + ".poly");
}

void BM_CanonicalForm(benchmark::State& state) {
  Polyform p = poly("p45");
  for (auto _ : state) benchmark::DoNotOptimize(canonical(p));
}
BENCHMARK(BM_CanonicalForm);

void BM_PavingScan(benchmark::State& state) {
  Paving paving = load_paving(kData + "/pavings/tri_t12.paving");
  Polyform goal = poly("t41");
  for (auto _ : state) benchmark::DoNotOptimize(defeats(paving, goal));
}
BENCHMARK(BM_PavingScan);

void BM_ProofStep(benchmark::State& state) {
  ProofSequence seq = load_proof(kData + "/proofs/t42_23.proof");
  for (auto _ : state) benchmark::DoNotOptimize(verify_step(seq, 2));
}
BENCHMARK(BM_ProofStep);

void BM_PriorityHistory(benchmark::State& state) {
  PriorityStrategy strat = load_strategy(kData + "/strategies/p45_24.strat");
  Polyform goal = poly("p45");
  for (auto _ : state) benchmark::DoNotOptimize(verify_breaker(goal, strat, 2, 4));
}
BENCHMARK(BM_PriorityHistory);

void BM_StageDiagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_diagram({{1, 2, 1}, {3, 4, 3}}));
}
BENCHMARK(BM_StageDiagram);

void BM_SolverTromino(benchmark::State& state) {
  SolveConfig cfg;
  cfg.goal = poly("p31");
  cfg.game = {1, 1, std::nullopt};
  cfg.window = default_window(BoardKind::Square);
  cfg.max_turns = 4;
  uint64_t nodes = 0;
  for (auto _ : state) {
    SolveResult res = solve(cfg);
    nodes += res.nodes;
    benchmark::DoNotOptimize(res);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SolverTromino);

}  // namespace

BENCHMARK_MAIN();
