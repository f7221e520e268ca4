#include <benchmark/benchmark.h>

#include "ratinf/correspondence.hpp"
#include "ratinf/defaults.hpp"
#include "ratinf/oracle.hpp"

using namespace ratinf;

namespace {

AtomEnv env_of(int atoms) {
  std::vector<std::string> names = {"a", "b", "c"};
  return AtomEnv(std::vector<std::string>(names.begin(), names.begin() + atoms));
}

void BM_RelationFromChain(benchmark::State& state) {
  AtomEnv env = env_of(static_cast<int>(state.range(0)));
  Context full = Context::full(env);
  RankedChain chain = random_chain(env, 4, 7);
  for (auto _ : state) {
    InferenceRelation rel = relation_from_chain(chain, full);
    benchmark::DoNotOptimize(rel);
  }
}
BENCHMARK(BM_RelationFromChain)->Arg(2)->Arg(3);

void BM_RationalMonotonicityCheck(benchmark::State& state) {
  AtomEnv env = env_of(static_cast<int>(state.range(0)));
  Context full = Context::full(env);
  InferenceRelation rel = relation_from_chain(random_chain(env, 4, 7), full);
  for (auto _ : state) {
    auto ces = check_postulate(rel, RuleId::rational_monotonicity);
    benchmark::DoNotOptimize(ces);
  }
}
BENCHMARK(BM_RationalMonotonicityCheck)->Arg(2)->Arg(3);

void BM_RoundTrip(benchmark::State& state) {
  AtomEnv env = env_of(static_cast<int>(state.range(0)));
  Context full = Context::full(env);
  InferenceRelation rel = relation_from_chain(random_chain(env, 4, 7), full);
  for (auto _ : state) {
    RationalOrdering ord = ordering_from_relation(rel, ConditionVariant::bold);
    InferenceRelation back = relation_from_ordering(ord, full, ConditionVariant::bold);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_RoundTrip)->Arg(2)->Arg(3);

void BM_LiberalExtension(benchmark::State& state) {
  AtomEnv env({"a", "b", "c"});
  DefaultBase base = parse_base_text(
      "atoms: a b c\n[level 1]\na -> b\n[level 2]\n!b\n[level 3]\nb -> c\n");
  Formula input = parse_formula("a", base.env());
  for (auto _ : state) {
    Extension ext = liberal_extension(base, input);
    benchmark::DoNotOptimize(ext);
  }
}
BENCHMARK(BM_LiberalExtension);

void BM_VerifyTheorems(benchmark::State& state) {
  AtomEnv env = env_of(2);
  for (auto _ : state) {
    VerifyReport report = verify_theorems(env, static_cast<int>(state.range(0)), 7);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyTheorems)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
