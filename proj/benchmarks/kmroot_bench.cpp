#include <benchmark/benchmark.h>

#include <random>

#include "kmroot/formula.hpp"
#include "kmroot/freelie.hpp"
#include "kmroot/peterson.hpp"
#include "kmroot/serre.hpp"
#include "kmroot/tuples.hpp"

namespace {

using namespace kmroot;

BracketExpr random_bracket(std::mt19937& rng, int length) {
  if (length == 1) return BracketExpr::leaf(std::uniform_int_distribution<int>(1, 3)(rng));
  const int left = std::uniform_int_distribution<int>(1, length - 1)(rng);
  return BracketExpr::bracket(random_bracket(rng, left), random_bracket(rng, length - left));
}

void BM_ToStandardForm(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<BracketExpr> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_bracket(rng, static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(to_standard_form(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_ToStandardForm)->DenseRange(4, 10, 2);

void BM_ExpandTensor(benchmark::State& state) {
  std::mt19937 rng(7);
  const BracketExpr x = random_bracket(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_tensor(x));
}
BENCHMARK(BM_ExpandTensor)->DenseRange(4, 10, 2);

void BM_PetersonFresh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MultiplicityTable t(paper_shape(1, 2));
    benchmark::DoNotOptimize(t.mult({n, n + 1, n}));
  }
  state.SetLabel("height " + std::to_string(3 * n + 1));
}
BENCHMARK(BM_PetersonFresh)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_QuotientFresh(benchmark::State& state) {
  const auto coords = state.range(0) ? Coordinates::kFullTensor : Coordinates::kLyndon;
  const Weight w{static_cast<int>(state.range(1)), static_cast<int>(state.range(1)) + 1,
                 static_cast<int>(state.range(1))};
  for (auto _ : state) {
    QuotientOracle oracle(paper_shape(1, 2), {10, coords});
    benchmark::DoNotOptimize(oracle.root_multiplicity(w));
  }
  state.SetLabel(std::string(state.range(0) ? "full tensor" : "lyndon") + ", height " + std::to_string(w.height()));
}
BENCHMARK(BM_QuotientFresh)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_CountCanonical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = FormulaParams::make(2, 3, n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_canonical(p));
}
BENCHMARK(BM_CountCanonical)->Arg(3)->Arg(5)->Arg(7);

void BM_TheoremDim(benchmark::State& state) {
  const auto p = FormulaParams::make(2, 3, 40, 40, 40);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_dim(p, BVariant::kGuarded));
}
BENCHMARK(BM_TheoremDim);

}  // namespace

BENCHMARK_MAIN();
