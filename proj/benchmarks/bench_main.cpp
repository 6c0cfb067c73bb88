#include <benchmark/benchmark.h>

#include "qsim/checks.hpp"
#include "qsim/lower_bound.hpp"
#include "qsim/oracle.hpp"
#include "qsim/policies.hpp"
#include "qsim/random_instance.hpp"

using namespace qsim;

namespace {

SwitchConfig scaled_config(int m, int fat_cap) {
  SwitchConfig c;
  c.m = m;
  for (int i = 0; i < m; ++i) {
    c.values.push_back(Rational(1 << i));
    c.caps.push_back(1);
  }
  c.caps.back() = fat_cap;
  return c;
}

}  // namespace

static void BM_GreedyRun(benchmark::State& state) {
  SwitchConfig config = scaled_config(3, static_cast<int>(state.range(0)));
  EventSequence seq = generate_lower_bound_sequence(config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_greedy(config, seq));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seq.size()));
}
BENCHMARK(BM_GreedyRun)->Arg(8)->Arg(64)->Arg(512);

static void BM_Oracle(benchmark::State& state) {
  SwitchConfig config = scaled_config(3, static_cast<int>(state.range(0)));
  EventSequence seq = generate_lower_bound_sequence(config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_opt(config, seq));
  }
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(8)->Arg(32);

static void BM_SweepInstance(benchmark::State& state) {
  // one full verification step: generate, run greedy, exact oracle, checks
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Instance inst = random_instance(seed++);
    benchmark::DoNotOptimize(lemma_suite(inst.config, inst.sequence));
  }
}
BENCHMARK(BM_SweepInstance);

static void BM_LedgerSuite(benchmark::State& state) {
  Instance inst = random_instance(17);
  EventSequence drained = with_drain(inst.config, inst.sequence);
  Transcript greedy_t = run_greedy(inst.config, drained);
  OptResult opt = brute_force_opt(inst.config, drained);
  Transcript witness = optimal_transcript(inst.config, drained, opt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ledger_suite(greedy_t, witness));
  }
}
BENCHMARK(BM_LedgerSuite);

BENCHMARK_MAIN();
