#include <benchmark/benchmark.h>

#include "codebench/channel.hpp"
#include "codebench/codebook.hpp"
#include "codebench/gf2.hpp"

namespace {

using namespace codebench;

void BM_GaussEliminate(benchmark::State& state)
{
    const auto rows = static_cast<std::size_t>(state.range(0));
    const auto cols = 2 * rows;
    RngStream rng(1234, 0);
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.set_row(i, rng.next_bits(cols));
    for (auto _ : state) {
        auto res = gauss_eliminate(m);
        benchmark::DoNotOptimize(res.rank);
    }
}
BENCHMARK(BM_GaussEliminate)->Arg(64)->Arg(128)->Arg(256);

void BM_BchConstruct(benchmark::State& state)
{
    for (auto _ : state) {
        auto code = build_bch(8, 18);
        benchmark::DoNotOptimize(code.k);
    }
}
BENCHMARK(BM_BchConstruct);

void BM_Encode256(benchmark::State& state)
{
    const LinearCode code = extend_code(build_bch(8, 18));
    RngStream rng(5, 0);
    const BitVector msg = rng.next_bits(code.k);
    for (auto _ : state) {
        auto cw = encode(code, msg);
        benchmark::DoNotOptimize(cw.weight());
    }
}
BENCHMARK(BM_Encode256);

}  // namespace
