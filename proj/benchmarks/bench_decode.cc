#include <benchmark/benchmark.h>

#include "codebench/channel.hpp"
#include "codebench/codebook.hpp"
#include "codebench/decode_awgn.hpp"
#include "codebench/decode_bec.hpp"

namespace {

using namespace codebench;

void BM_MlErasureDecode(benchmark::State& state)
{
    const LinearCode code = extend_code(build_bch(8, 18));
    const double eps = 0.44;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream rng(99, trial++);
        const BitVector msg = rng.next_bits(code.k);
        const BecWord y = bec_transmit(encode(code, msg), eps, rng);
        auto v = ml_erasure_decode(code, y);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_MlErasureDecode);

void BM_OsdDecode(benchmark::State& state)
{
    const LinearCode code = extend_code(build_bch(7, 10));  // (128,64)
    const double sigma = sigma_from_ebn0(3.0, code_rate(code));
    OsdConfig cfg;
    cfg.order = static_cast<unsigned>(state.range(0));
    cfg.max_teps = 1'000'000;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream rng(7, trial++);
        const BitVector msg = rng.next_bits(code.k);
        const SoftWord sw = awgn_transmit(encode(code, msg), sigma, rng);
        auto out = osd_decode(code, sw, cfg);
        benchmark::DoNotOptimize(out.whd);
    }
}
BENCHMARK(BM_OsdDecode)->Arg(1)->Arg(2)->Arg(3);

void BM_PeelDecode(benchmark::State& state)
{
    const LinearCode code = build_ldpc_regular(256, 7);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream rng(13, trial++);
        const BitVector msg = rng.next_bits(code.k);
        const BecWord y = bec_transmit(encode(code, msg), 0.4, rng);
        auto v = peel_decode(code, y);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_PeelDecode);

}  // namespace
