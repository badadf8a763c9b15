#include <benchmark/benchmark.h>

#include <betadix/counting.hpp>

using namespace betadix;

namespace {

CountRequest powers_of_two(std::uint64_t N, bool general_path) {
  const NumberRing z = NumberRing::create({0, 1});
  const AlgebraicInt beta = z.from_int(3);
  // A permuted digit list is not canonical, which forces the generic scan.
  DigitSet dset = general_path
                      ? DigitSet::from_elements(beta, {z.from_int(0), z.from_int(1), z.from_int(2)})
                      : digit_set_canonical(z, beta);
  return CountRequest{.alpha = z.from_int(2), .dset = dset, .b = 2, .N = N};
}

void BM_CountFastPath(benchmark::State& state) {
  const CountRequest req = powers_of_two(static_cast<std::uint64_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(count_omitting(req));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountFastPath)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CountGeneralPath(benchmark::State& state) {
  const CountRequest req = powers_of_two(static_cast<std::uint64_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(count_omitting(req));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountGeneralPath)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CountJobs(benchmark::State& state) {
  CountRequest req = powers_of_two(20000, false);
  req.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_omitting(req));
}
BENCHMARK(BM_CountJobs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GaussianBetaAdic(benchmark::State& state) {
  const NumberRing zi = NumberRing::create({1, 0, 1});
  const AlgebraicInt beta = zi.element({-1, 1});
  CountRequest req{.alpha = zi.element({2, 1}),
                   .dset = digit_set_canonical(zi, beta),
                   .b = 1,
                   .N = static_cast<std::uint64_t>(state.range(0)),
                   .mode = CountMode::beta_adic,
                   .hypotheses = HypothesisMode::exploration};
  for (auto _ : state) benchmark::DoNotOptimize(count_omitting(req));
}
BENCHMARK(BM_GaussianBetaAdic)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
