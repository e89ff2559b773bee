// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "svaeq/eval.hpp"
#include "svaeq/normalize.hpp"
#include "svaeq/parser.hpp"
#include "svaeq/tcl.hpp"
#include "svaeq/verdict.hpp"
#include "svaeq/wrapper.hpp"

namespace {

using namespace svaeq;

const char *kProperty =
    "@(posedge clk) disable iff (rst) req |-> ##[1:3] (gnt && !err)[*2]";

void BM_Parse(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse(kProperty));
}
BENCHMARK(BM_Parse);

void BM_Render(benchmark::State &state) {
  AstPtr ast = parse(kProperty);
  for (auto _ : state)
    benchmark::DoNotOptimize(render(ast));
}
BENCHMARK(BM_Render);

void BM_Classify(benchmark::State &state) {
  std::string text = kProperty;
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(text));
}
BENCHMARK(BM_Classify);

void BM_NormalizeLint(benchmark::State &state) {
  SourceText src{"`TOP.u0.req |-> pkg::gnt ##[1:3] ack // tail",
                 Origin::Candidate};
  for (auto _ : state)
    benchmark::DoNotOptimize(normalize(src, Profile::Lint));
}
BENCHMARK(BM_NormalizeLint);

void BM_Wrap(benchmark::State &state) {
  SourceText src{kProperty, Origin::Candidate};
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize_wrapper(src));
}
BENCHMARK(BM_Wrap);

void BM_EvalProperty(benchmark::State &state) {
  Lowered low = lower(parse(kProperty));
  std::vector<std::string> universe = low.atoms;
  PropertyEvaluator ev(low, universe, 20);
  std::vector<uint64_t> cols(universe.size());
  uint64_t n = 0;
  for (auto _ : state) {
    ++n;
    for (std::size_t i = 0; i < cols.size(); ++i)
      cols[i] = n * 0x9E3779B97F4A7C15ull >> (i * 7) & 0xFFFFF;
    benchmark::DoNotOptimize(ev.holds(cols));
  }
}
BENCHMARK(BM_EvalProperty);

void BM_CheckEquivalence(benchmark::State &state) {
  CheckConfig cfg;
  cfg.depth_K = static_cast<int>(state.range(0));
  cfg.max_enum_bits = 24;
  SourceText cand{"a |=> b", Origin::Candidate};
  SourceText ref{"a |-> ##1 b", Origin::Reference};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_equivalence(cand, ref, cfg));
}
BENCHMARK(BM_CheckEquivalence)->Arg(6)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
