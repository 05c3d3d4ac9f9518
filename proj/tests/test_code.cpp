#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "codebench/channel.hpp"
#include "codebench/code.hpp"
#include "codebench/codebook.hpp"
#include "support/oracles.hpp"

using namespace codebench;

namespace {

LinearCode hamming74() { return build_bch(3, 1); }

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    REQUIRE(f);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("encode zero message gives the zero codeword")
{
    const LinearCode c = hamming74();
    CHECK_FALSE(encode(c, BitVector(4)).any());
}

TEST_CASE("systematic (7,4) encoding matches the constructed parity rows")
{
    const LinearCode c = hamming74();
    BitVector b(4);
    b.set(0, true);
    const BitVector cw = encode(c, b);
    CHECK(cw.to_string() == "1000110");
    // Hand multiply against P = right part of G.
    for (std::size_t j = 0; j < 3; ++j) CHECK(cw.get(4 + j) == c.G.get(0, 4 + j));
}

TEST_CASE("encode is linear")
{
    const LinearCode c = hamming74();
    RngStream rng(21, 0);
    for (int it = 0; it < 50; ++it) {
        const BitVector b1 = rng.next_bits(4), b2 = rng.next_bits(4);
        BitVector sum = b1;
        sum.xor_with(b2);
        BitVector expect = encode(c, b1);
        expect.xor_with(encode(c, b2));
        CHECK(encode(c, sum) == expect);
    }
}

TEST_CASE("encode rejects wrong message length")
{
    CHECK_THROWS_AS(encode(hamming74(), BitVector(5)), LengthMismatch);
}

TEST_CASE("extend the (3,1) repetition code")
{
    const LinearCode rep = make_linear_code(BitMatrix::from_strings({"111"}), "random", "rep(3,1)");
    REQUIRE(rep.d_min == 3);
    const LinearCode ext = extend_code(rep);
    CHECK(ext.n == 4);
    CHECK(ext.k == 1);
    CHECK(ext.d_min == 4);
    CHECK(encode(ext, BitVector::from_string("1")).to_string() == "1111");
    CHECK(encode(ext, BitVector::from_string("0")).to_string() == "0000");
}

TEST_CASE("extended (7,4) Hamming has distance 4 by full weight census")
{
    const LinearCode ext = extend_code(hamming74());
    CHECK(ext.n == 8);
    CHECK(ext.k == 4);
    CHECK(ext.d_min == 4);
    CHECK(oracles::min_distance(oracles::all_codewords(ext.G)) == 4);
    // Every codeword has even weight after extension.
    for (const BitVector& cw : oracles::all_codewords(ext.G)) CHECK(cw.weight() % 2 == 0);
}

TEST_CASE("construction-time distance agrees with the codeword-census oracle")
{
    RngStream rng(31, 2);
    for (int it = 0; it < 5; ++it) {
        const LinearCode c = make_linear_code(oracles::random_full_rank(6, 12, rng), "random",
                                              "random(12,6)", 31 + it);
        REQUIRE(c.d_min.has_value());
        CHECK(*c.d_min == oracles::min_distance(oracles::all_codewords(c.G)));
    }
}

TEST_CASE("every constructed code satisfies G H^t = 0 and the rank contracts")
{
    RngStream rng(5, 5);
    for (int it = 0; it < 5; ++it) {
        const LinearCode c = make_linear_code(oracles::random_full_rank(5, 11, rng), "random", "r");
        CHECK_NOTHROW(validate_code(c));
        CHECK(rank_of(c.H) == c.n - c.k);
        for (const BitVector& cw : oracles::all_codewords(c.G))
            CHECK_FALSE(mul_mat_vecT(c.H, cw).any());
    }
}

TEST_CASE("validate_code catches a wrong parity matrix")
{
    LinearCode c = hamming74();
    c.H.set(0, 0, !c.H.get(0, 0));
    CHECK_THROWS(validate_code(c));
}

TEST_CASE("code file round trip is exact")
{
    const std::string path = "test_code_roundtrip.code";
    const LinearCode a = extend_code(build_bch(4, 2));
    save_code(a, path);
    const LinearCode b = load_code(path);
    CHECK(b.n == a.n);
    CHECK(b.k == a.k);
    CHECK(b.G == a.G);
    CHECK(b.H == a.H);
    CHECK(b.d_min == a.d_min);
    CHECK(b.family == a.family);
    CHECK(b.label == a.label);
    CHECK(b.seed == a.seed);
    CHECK(b.design == a.design);
    std::remove(path.c_str());
}

TEST_CASE("identical constructions serialize to identical bytes")
{
    const std::string p1 = "test_code_det1.code", p2 = "test_code_det2.code";
    save_code(build_ldpc_regular(64, 7), p1);
    save_code(build_ldpc_regular(64, 7), p2);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}
