#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "codebench/bounds.hpp"
#include "codebench/channel.hpp"

using namespace codebench;

TEST_CASE("bec with eps = 0 and eps = 1")
{
    RngStream rng(1, 0);
    BitVector c = rng.next_bits(64);
    BecWord none = bec_transmit(c, 0.0, rng);
    CHECK(none.erasure_weight() == 0);
    CHECK(none.values == c);
    BecWord all = bec_transmit(c, 1.0, rng);
    CHECK(all.erasure_weight() == 64);
}

TEST_CASE("bec never flips a delivered bit")
{
    RngStream rng(2, 0);
    for (int it = 0; it < 20; ++it) {
        const BitVector c = rng.next_bits(100);
        const BecWord y = bec_transmit(c, 0.3, rng);
        for (std::size_t i = 0; i < 100; ++i)
            if (!y.erased.get(i)) CHECK(y.values.get(i) == c.get(i));
    }
}

TEST_CASE("bec erasure count is binomial")
{
    const std::size_t trials = 10'000, n = 256;
    const BitVector c(n);
    double total = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng(3, t);
        total += static_cast<double>(bec_transmit(c, 0.5, rng).erasure_weight());
    }
    const double mean = total / trials;
    // sigma of the per-trial count is 8; of the mean, 0.08.
    CHECK(std::fabs(mean - 128.0) < 3 * 0.08);
}

TEST_CASE("bpsk map")
{
    BitVector c = BitVector::from_string("01");
    const auto s = bpsk_map(c);
    CHECK(s[0] == -1.0);
    CHECK(s[1] == 1.0);

    RngStream rng(4, 0);
    const BitVector r = rng.next_bits(50);
    const auto sr = bpsk_map(r);
    double sum = 0;
    for (double v : sr) sum += v;
    CHECK(sum == doctest::Approx(2.0 * r.weight() - 50.0));
}

TEST_CASE("awgn with vanishing noise reproduces the codeword")
{
    RngStream rng(5, 0);
    const BitVector c = rng.next_bits(128);
    const SoftWord sw = awgn_transmit(c, 1e-6, rng);
    CHECK(hard_decisions(sw) == c);
}

TEST_CASE("awgn sample variance matches sigma^2")
{
    const double sigma = 0.8;
    const std::size_t n = 1'000'000;
    RngStream rng(6, 0);
    const BitVector c(64);
    double acc = 0;
    std::size_t seen = 0;
    while (seen < n) {
        const SoftWord sw = awgn_transmit(c, sigma, rng);
        for (double r : sw.r) acc += (r + 1.0) * (r + 1.0);  // s = -1 for zero bits
        seen += sw.r.size();
    }
    const double var = acc / static_cast<double>(seen);
    CHECK(std::fabs(var - sigma * sigma) < 0.01 * sigma * sigma);
}

TEST_CASE("fixed seed and stream give bit-identical outputs")
{
    RngStream a(42, 17), b(42, 17);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    RngStream ga(42, 18), gb(42, 18);
    for (int i = 0; i < 1000; ++i) {
        const double x = ga.next_gaussian(), y = gb.next_gaussian();
        CHECK(std::memcmp(&x, &y, sizeof x) == 0);
    }
}

TEST_CASE("sigma from Eb/N0")
{
    CHECK(sigma_from_ebn0(0.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sigma_from_ebn0(0.0, 1.0) * sigma_from_ebn0(0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const double s = sigma_from_ebn0(3.0103, 0.5);
    CHECK(s * s == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("llr formula and sign convention")
{
    SoftWord sw{{0.0, 1.0, -0.25}, std::sqrt(0.5)};
    const auto l = llr(sw);
    CHECK(l[0] == 0.0);
    CHECK(l[1] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(l[2] == doctest::Approx(-1.0).epsilon(1e-12));
    // Hard-decision tie at zero maps to bit 1.
    CHECK(hard_decisions(sw).get(0) == true);
    // |llr| is monotone in the confidence.
    const auto a = confidences(sw);
    CHECK(a[1] > a[2]);
    CHECK(std::fabs(l[1]) > std::fabs(l[2]));
}

TEST_CASE("hard-decision error rate at sigma = 1 matches the Gaussian tail")
{
    const std::size_t n = 1'000'000;
    const BitVector c(64);
    std::size_t errors = 0, seen = 0;
    std::uint64_t stream = 0;
    while (seen < n) {
        RngStream rng(7, stream++);
        const SoftWord sw = awgn_transmit(c, 1.0, rng);
        const BitVector y = hard_decisions(sw);
        errors += y.weight();  // any 1 is a flip of the all-zero word
        seen += 64;
    }
    const double p = static_cast<double>(errors) / static_cast<double>(seen);
    const double q1 = q_func(1.0);
    const double se = std::sqrt(q1 * (1 - q1) / static_cast<double>(n));
    CHECK(std::fabs(p - q1) < 3 * se);
}

TEST_CASE("disjoint streams are uncorrelated")
{
    const std::size_t n = 100'000;
    RngStream a(9, 1), b(9, 2);
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a.next_unit(), y = b.next_unit();
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double nd = static_cast<double>(n);
    const double cov = sxy / nd - (sx / nd) * (sy / nd);
    const double vx = sxx / nd - (sx / nd) * (sx / nd);
    const double vy = syy / nd - (sy / nd) * (sy / nd);
    CHECK(std::fabs(cov / std::sqrt(vx * vy)) < 0.01);
}

TEST_CASE("channel input validation")
{
    RngStream rng(1, 1);
    const BitVector c(8);
    CHECK_THROWS(bec_transmit(c, -0.1, rng));
    CHECK_THROWS(awgn_transmit(c, 0.0, rng));
    CHECK_THROWS(sigma_from_ebn0(0.0, 0.0));
}
