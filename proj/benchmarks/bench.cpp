#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "linking/decompose.hpp"
#include "linking/eval.hpp"
#include "linking/sync_c.hpp"
#include "linking/sync_m.hpp"
#include "linking/term.hpp"

using namespace linking;

namespace {

// n fan-out/fan-in pairs in sequence. In the multiset model copy;join doubles
// a weight per step, so that chain is kept to the contention model.
TermPtr ladder(int n, Generator out, Generator in) {
  TermPtr t = atom(Generator::Id);
  for (int i = 0; i < n; ++i) t = seq(t, seq(atom(out), atom(in)));
  return t;
}

void BM_EvalC(benchmark::State& state) {
  const TermPtr t = ladder(static_cast<int>(state.range(0)), Generator::Copy, Generator::Join);
  for (auto _ : state) benchmark::DoNotOptimize(eval_c(t));
}
BENCHMARK(BM_EvalC)->Arg(4)->Arg(16)->Arg(64);

void BM_EvalM(benchmark::State& state) {
  const TermPtr t = ladder(static_cast<int>(state.range(0)), Generator::Split, Generator::Join);
  for (auto _ : state) benchmark::DoNotOptimize(eval_m(t));
}
BENCHMARK(BM_EvalM)->Arg(4)->Arg(16)->Arg(64);

void BM_MinSyncsDiscrete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<IndexSet> fi, gi;
  for (std::size_t i = 0; i < n; ++i) {
    fi.push_back(IndexSet{rng() % n});
    gi.push_back(IndexSet{rng() % n});
  }
  const CRel f(CSet::discrete(n), CSet::discrete(n), fi);
  const CRel g(CSet::discrete(n), CSet::discrete(n), gi);
  for (auto _ : state) benchmark::DoNotOptimize(min_syncs(f, g));
}
BENCHMARK(BM_MinSyncsDiscrete)->Arg(4)->Arg(8)->Arg(16);

void BM_HilbertBasis(benchmark::State& state) {
  const auto k = static_cast<std::int64_t>(state.range(0));
  const std::vector<std::vector<std::int64_t>> rows{{k, -(k + 1), -1}, {1, 1, -2}};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(rows, 3));
}
BENCHMARK(BM_HilbertBasis)->Arg(2)->Arg(5)->Arg(9);

void BM_DecomposeSearch(benchmark::State& state) {
  const SpanC s = eval_c(parse_typed("(copy * id) ; (id * join)"));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_DecomposeSearch);

void BM_NormalForm(benchmark::State& state) {
  const SpanM s = eval_m(parse_typed("(copy * copy * copy) ; (id * swap * swap * id) ; (join * join * join)"));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(s));
}
BENCHMARK(BM_NormalForm);

}  // namespace
BENCHMARK_MAIN();
