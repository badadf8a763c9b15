#include <benchmark/benchmark.h>

#include <betadix/expansion.hpp>
#include <betadix/padic.hpp>

using namespace betadix;

namespace {

void BM_RadixExpansion(benchmark::State& state) {
  const NumberRing zi = NumberRing::create({1, 0, 1});
  const AlgebraicInt beta = zi.element({-1, 1});
  const DigitSet dset = digit_set_canonical(zi, beta);
  const ResidueTable table(dset);
  const AlgebraicInt x = pow(zi.element({2, 1}), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radix_expansion(x, table, dset));
}
BENCHMARK(BM_RadixExpansion)->Arg(64)->Arg(512)->Arg(2048);

void BM_CnsCheck(benchmark::State& state) {
  const NumberRing cubic = NumberRing::create({-1, -1, 0, 1});
  const AlgebraicInt beta = cubic.element({-2, 0, 0}) + cubic.theta();
  for (auto _ : state) benchmark::DoNotOptimize(cns_check(cubic, beta));
}
BENCHMARK(BM_CnsCheck)->Unit(benchmark::kMillisecond);

void BM_PadicLog(benchmark::State& state) {
  const unsigned K = static_cast<unsigned>(state.range(0));
  const PadicInt x(64, 3, K);
  for (auto _ : state) benchmark::DoNotOptimize(padic_log(x));
}
BENCHMARK(BM_PadicLog)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
