#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "codebench/channel.hpp"
#include "codebench/codebook.hpp"
#include "codebench/decode_awgn.hpp"
#include "support/oracles.hpp"

using namespace codebench;

namespace {

SoftWord soft_from(std::vector<double> r, double sigma = 1.0) { return SoftWord{std::move(r), sigma}; }

LinearCode random_code(std::size_t k, std::size_t n, std::uint64_t seed)
{
    RngStream rng(seed, 0);
    return make_linear_code(oracles::random_full_rank(k, n, rng), "random", "random", seed);
}

}  // namespace

TEST_CASE("prepare_mrb sorts by confidence, stable on ties")
{
    const LinearCode c = build_bch(3, 1);
    const SoftWord sw = soft_from({0.9, -0.9, 0.5, -0.1, 0.3, 0.7, -0.2});
    const MrbContext ctx = prepare_mrb(c, sw);
    // pi1 sorts |r| descending; the tie between 0.9 and -0.9 keeps index order.
    CHECK(ctx.pi1[0] == 0);
    CHECK(ctx.pi1[1] == 1);
    const auto alpha = confidences(sw);
    for (std::size_t i = 1; i < ctx.pi1.size(); ++i)
        CHECK(alpha[ctx.pi1[i - 1]] >= alpha[ctx.pi1[i]]);
}

TEST_CASE("prepare_mrb records a swap when the reliable columns are dependent")
{
    const LinearCode c = build_bch(3, 1);
    // Columns {4,5,6} of the systematic (7,4) generator span only rank 3 and
    // column 2 completes their span, so this confidence ranking forces a skip.
    const SoftWord sw = soft_from({0.1, 0.2, 0.6, 0.15, 1.0, 0.9, 0.8});
    const MrbContext ctx = prepare_mrb(c, sw);
    bool moved = false;
    for (std::size_t i = 0; i < ctx.pi2.size(); ++i)
        if (ctx.pi2[i] != i) moved = true;
    CHECK(moved);

    // First k permuted positions always index an information set.
    BitMatrix cols(c.k, c.k);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.k; ++j) cols.set(i, j, c.G.get(i, ctx.perm[j]));
    CHECK(rank_of(cols) == c.k);

    // g_tilde is systematic over the permuted positions.
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.k; ++j) CHECK(ctx.g_tilde.get(i, j) == (i == j));
}

TEST_CASE("tep counts match the closed forms")
{
    auto count = [](std::size_t k, unsigned order) {
        return tep_iterate(k, order, [](std::span<const std::size_t>) { return true; });
    };
    CHECK(count(10, 0) == 1);
    CHECK(count(115, 1) == 1 + 115);
    CHECK(count(115, 2) == 1 + 115 + 115 * 114 / 2);  // 6671
    CHECK(count(10, 10) == 1024);
    CHECK(count(4, 4) == 16);
}

TEST_CASE("tep order is weight-major, lexicographic within a weight")
{
    std::vector<std::vector<std::size_t>> seen;
    tep_iterate(4, 2, [&](std::span<const std::size_t> s) {
        seen.emplace_back(s.begin(), s.end());
        return true;
    });
    const std::vector<std::vector<std::size_t>> expect = {
        {}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == expect);
}

TEST_CASE("whd basics")
{
    const BitVector y = BitVector::from_string("1010");
    const std::vector<double> alpha = {0.5, 1.5, 2.5, 3.5};
    CHECK(whd(y, y, alpha) == 0.0);
    BitVector c1 = y;
    c1.flip(2);
    CHECK(whd(c1, y, alpha) == 2.5);
}

TEST_CASE("whd argmin agrees with Euclidean distance argmin")
{
    RngStream rng(8, 0);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 12;
        SoftWord sw;
        sw.sigma = 0.7;
        for (std::size_t i = 0; i < n; ++i) sw.r.push_back(2.5 * (rng.next_unit() - 0.5));
        const BitVector y = hard_decisions(sw);
        const auto alpha = confidences(sw);

        std::vector<BitVector> cands;
        for (int j = 0; j < 8; ++j) cands.push_back(rng.next_bits(n));

        const auto by_whd = std::min_element(cands.begin(), cands.end(),
                                             [&](const BitVector& a, const BitVector& b) {
                                                 return whd(a, y, alpha) < whd(b, y, alpha);
                                             });
        auto euclid = [&](const BitVector& cw) {
            double acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double s = cw.get(i) ? 1.0 : -1.0;
                acc += (sw.r[i] - s) * (sw.r[i] - s);
            }
            return acc;
        };
        const auto by_euclid = std::min_element(
            cands.begin(), cands.end(),
            [&](const BitVector& a, const BitVector& b) { return euclid(a) < euclid(b); });
        CHECK(whd(*by_whd, y, alpha) == doctest::Approx(whd(*by_euclid, y, alpha)).epsilon(1e-12));
    }
}

TEST_CASE("noiseless input decodes at order 0 with zero distance")
{
    const LinearCode c = build_rm(3, 4);
    RngStream rng(9, 0);
    const BitVector cw = encode(c, rng.next_bits(4));
    SoftWord sw{bpsk_map(cw), 1.0};
    const OsdOutcome out = osd_decode(c, sw, {0, 1, false});
    CHECK(out.c_hat == cw);
    CHECK(out.whd == 0.0);
    CHECK(out.teps_processed == 1);
}

TEST_CASE("order-0 re-encoding reproduces the basis hard decisions")
{
    const LinearCode c = random_code(5, 11, 4);
    RngStream rng(10, 0);
    const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(5)), 1.0, rng);
    const MrbContext ctx = prepare_mrb(c, sw);
    const OsdOutcome out = osd_decode(c, sw, {0, 1, false});
    // On the basis positions the order-0 candidate equals the hard decisions.
    BitVector basis_bits(c.k);
    for (std::size_t i = 0; i < c.k; ++i) basis_bits.set(i, out.c_hat.get(ctx.perm[i]));
    for (std::size_t i = 0; i < c.k; ++i) CHECK(basis_bits.get(i) == ctx.y_tilde.get(i));
}

TEST_CASE("full-order OSD equals exhaustive ML on the (8,4) extended Hamming code")
{
    const LinearCode c = build_rm(3, 4);
    const auto words = oracles::all_codewords(c.G);
    for (double sigma : {0.5, 1.0}) {
        for (std::uint64_t t = 0; t < 1000; ++t) {
            RngStream rng(20, t);
            const BitVector cw = encode(c, rng.next_bits(4));
            const SoftWord sw = awgn_transmit(cw, sigma, rng);
            const OsdOutcome out = osd_decode(c, sw, {4, 1u << 20, false});
            const oracles::MlResult ml = oracles::exhaustive_ml(words, sw);
            CHECK(out.whd == ml.whd);
        }
    }
}

TEST_CASE("full-order OSD equals exhaustive ML on random codes up to k = 10")
{
    for (auto [k, n, seed] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{6, 12, 5},
                              {8, 14, 6},
                              {10, 16, 7}}) {
        const LinearCode c = random_code(k, n, seed);
        const auto words = oracles::all_codewords(c.G);
        for (std::uint64_t t = 0; t < 100; ++t) {
            RngStream rng(30 + seed, t);
            const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(k)), 0.9, rng);
            const OsdOutcome out =
                osd_decode(c, sw, {static_cast<unsigned>(k), std::uint64_t{1} << k, false});
            CHECK(out.whd == oracles::exhaustive_ml(words, sw).whd);
        }
    }
}

TEST_CASE("full-order OSD equals exhaustive ML when the parity part spans several words")
{
    // n - k = 192 parity bits exercises the multi-word diff path.
    const LinearCode c = random_code(8, 200, 5150);
    const auto words = oracles::all_codewords(c.G);
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream rng(61, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(8)), 1.0, rng);
        const oracles::MlResult ml = oracles::exhaustive_ml(words, sw);
        for (TepOrder ord : {TepOrder::lex, TepOrder::reliability}) {
            const OsdOutcome out = osd_decode(c, sw, {8, 1u << 16, false, ord});
            CHECK(out.whd == ml.whd);
        }
    }
}

TEST_CASE("outcome distance never increases with the order")
{
    const LinearCode c = random_code(8, 16, 9);
    for (std::uint64_t t = 0; t < 50; ++t) {
        RngStream rng(40, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(8)), 1.1, rng);
        double prev = std::numeric_limits<double>::infinity();
        for (unsigned order = 0; order <= 8; ++order) {
            const OsdOutcome out = osd_decode(c, sw, {order, 1u << 20, false});
            CHECK(out.whd <= prev + 1e-12);
            prev = out.whd;
        }
    }
}

TEST_CASE("early stop never certifies a beatable candidate")
{
    std::size_t certified = 0;
    for (auto [k, n, seed, draws] :
         {std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t>{9, 16, 11, 400},
          {16, 26, 12, 60}}) {
        const LinearCode c = random_code(k, n, seed);
        const unsigned order = static_cast<unsigned>(k);
        for (std::uint64_t t = 0; t < draws; ++t) {
            RngStream rng(50 + seed, t);
            const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(k)), 0.8, rng);
            const OsdOutcome fast = osd_decode(c, sw, {order, 1u << 20, true});
            if (!fast.ml_certified) continue;
            ++certified;
            // Exhaustive continuation never finds a strictly smaller distance.
            const OsdOutcome full = osd_decode(c, sw, {order, 1u << 20, false});
            CHECK(fast.whd == full.whd);
            CHECK(fast.teps_processed <= full.teps_processed);
        }
    }
    CHECK(certified > 0);  // the cut must actually fire at this noise level
}

TEST_CASE("the asymptotic-optimality order of the (256,115) extension is 10")
{
    const LinearCode c = extend_code(build_bch(8, 21));
    REQUIRE(c.k == 115);
    // Designed distance 43 plus the parity extension gives 44.
    const unsigned order = static_cast<unsigned>(std::ceil(44.0 / 4.0 - 1.0));
    CHECK(order == 10);
    CHECK(order < c.k);
}

TEST_CASE("reliability-ordered TEPs reach the same full-order optimum")
{
    const LinearCode c = random_code(8, 15, 17);
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream rng(55, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(8)), 1.0, rng);
        const OsdOutcome lex = osd_decode(c, sw, {8, 1u << 16, false, TepOrder::lex});
        const OsdOutcome rel = osd_decode(c, sw, {8, 1u << 16, false, TepOrder::reliability});
        CHECK(lex.whd == rel.whd);
        CHECK(lex.teps_processed == rel.teps_processed);
    }
}

TEST_CASE("under a tight cap the reliability order finds better candidates")
{
    const LinearCode c = extend_code(build_bch(6, 3));  // (64,45)
    const double sigma = sigma_from_ebn0(2.0, code_rate(c));
    double lex_sum = 0.0, rel_sum = 0.0;
    for (std::uint64_t t = 0; t < 300; ++t) {
        RngStream rng(56, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(c.k)), sigma, rng);
        lex_sum += osd_decode(c, sw, {3, 2000, false, TepOrder::lex}).whd;
        rel_sum += osd_decode(c, sw, {3, 2000, false, TepOrder::reliability}).whd;
    }
    CHECK(rel_sum <= lex_sum);
}

TEST_CASE("max_teps caps the re-encodings and drops the certificate")
{
    const LinearCode c = random_code(10, 18, 13);
    RngStream rng(60, 0);
    const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(10)), 1.0, rng);
    const OsdOutcome out = osd_decode(c, sw, {10, 37, false});
    CHECK(out.teps_processed == 37);
    CHECK_FALSE(out.ml_certified);
}

TEST_CASE("every OSD winner is a codeword")
{
    const LinearCode c = random_code(6, 12, 15);
    for (std::uint64_t t = 0; t < 200; ++t) {
        RngStream rng(70, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(6)), 1.2, rng);
        const OsdOutcome out = osd_decode(c, sw, {2, 100, true});
        CHECK_FALSE(mul_mat_vecT(c.H, out.c_hat).any());
    }
}

TEST_CASE("ml lower bound check compares weighted distances")
{
    const LinearCode c = build_rm(3, 4);
    const BitVector zero(8);
    const BitVector ones = encode(c, BitVector::from_string("1000"));  // all-ones row
    SoftWord sw{bpsk_map(ones), 1.0};  // received exactly at +1
    OsdOutcome close{ones, 0.0, 1, false};
    CHECK(ml_lower_bound_check(zero, close, sw));   // decoder found a better word
    OsdOutcome far{zero, 0.0, 1, false};
    CHECK_FALSE(ml_lower_bound_check(ones, far, sw));  // truth is closer
    CHECK_FALSE(ml_lower_bound_check(ones, close, sw));  // not an error at all
}

TEST_CASE("sum-product converges instantly at high SNR")
{
    const LinearCode c = build_ldpc_regular(256, 7);
    for (std::uint64_t t = 0; t < 200; ++t) {
        RngStream rng(80, t);
        const BitVector cw = encode(c, rng.next_bits(c.k));
        const SoftWord sw = awgn_transmit(cw, 0.1, rng);
        const BpOutcome out = sum_product_decode(c, sw, 50);
        REQUIRE(out.converged);
        CHECK(out.c_hat == cw);
    }
}

TEST_CASE("convergence flag implies a zero syndrome")
{
    const LinearCode c = build_ldpc_regular(64, 4);
    const double sigma = sigma_from_ebn0(2.0, code_rate(c));
    for (std::uint64_t t = 0; t < 500; ++t) {
        RngStream rng(90, t);
        const SoftWord sw = awgn_transmit(encode(c, rng.next_bits(c.k)), sigma, rng);
        const BpOutcome out = sum_product_decode(c, sw, 30);
        if (out.converged) CHECK_FALSE(mul_mat_vecT(c.H, out.c_hat).any());
    }
}

TEST_CASE("near-ML OSD beats BP on the same LDPC code, paired noise")
{
    const LinearCode c = build_ldpc_regular(96, 2);
    const double sigma = sigma_from_ebn0(3.0, code_rate(c));
    std::size_t bp_err = 0, osd_err = 0;
    const std::uint64_t trials = 400;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(100, t);
        const BitVector cw = encode(c, rng.next_bits(c.k));
        const SoftWord sw = awgn_transmit(cw, sigma, rng);
        const BpOutcome bp = sum_product_decode(c, sw, 50);
        if (!bp.converged || bp.c_hat != cw) ++bp_err;
        const OsdOutcome osd = osd_decode(c, sw, {3, 200'000, true});
        if (osd.c_hat != cw) ++osd_err;
    }
    CHECK(bp_err >= osd_err);
    CHECK(bp_err > 0);  // operating point chosen so BP actually errs
}
