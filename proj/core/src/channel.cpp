#include "codebench/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace codebench {

namespace {

inline void philox_round(std::array<std::uint32_t, 4>& c, std::array<std::uint32_t, 2>& k)
{
    constexpr std::uint64_t M0 = 0xD2511F53, M1 = 0xCD9E8D57;
    const std::uint64_t p0 = M0 * c[0];
    const std::uint64_t p1 = M1 * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    k[0] += 0x9E3779B9;
    k[1] += 0xBB67AE85;
}

}  // namespace

void RngStream::refill()
{
    std::array<std::uint32_t, 4> c = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    std::array<std::uint32_t, 2> k = {static_cast<std::uint32_t>(seed_),
                                      static_cast<std::uint32_t>(seed_ >> 32)};
    for (int r = 0; r < 10; ++r) philox_round(c, k);
    buf_[0] = (static_cast<std::uint64_t>(c[1]) << 32) | c[0];
    buf_[1] = (static_cast<std::uint64_t>(c[3]) << 32) | c[2];
    avail_ = 2;
    ++block_;
}

std::uint64_t RngStream::next_u64()
{
    if (avail_ == 0) refill();
    return buf_[--avail_];
}

double RngStream::next_unit()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian()
{
    if (have_spare_) {
        have_spare_ = false;
        return gauss_spare_;
    }
    // Box-Muller; u1 shifted away from zero so log stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = next_unit();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    gauss_spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
}

std::uint64_t RngStream::next_below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("next_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

BitVector RngStream::next_bits(std::size_t len)
{
    BitVector out(len);
    auto words = out.words();
    for (std::size_t w = 0; w < words.size(); ++w) words[w] = next_u64();
    if (len % 64) words[words.size() - 1] &= (std::uint64_t{1} << (len % 64)) - 1;
    return out;
}

BecWord bec_transmit(const BitVector& c, double eps, RngStream& rng)
{
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("erasure probability outside [0, 1]");
    const std::size_t n = c.size();
    BecWord out{BitVector(n), BitVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.next_unit() < eps)
            out.erased.set(i, true);
        else
            out.values.set(i, c.get(i));
    }
    return out;
}

std::vector<double> bpsk_map(const BitVector& c)
{
    std::vector<double> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) s[i] = c.get(i) ? 1.0 : -1.0;
    return s;
}

SoftWord awgn_transmit(const BitVector& c, double sigma, RngStream& rng)
{
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    SoftWord out{bpsk_map(c), sigma};
    for (double& ri : out.r) ri += sigma * rng.next_gaussian();
    return out;
}

double sigma_from_ebn0(double ebn0_db, double rate)
{
    if (!(rate > 0.0) || rate > 1.0) throw std::invalid_argument("rate outside (0, 1]");
    if (!std::isfinite(ebn0_db)) throw std::invalid_argument("Eb/N0 must be finite");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * ebn0));
}

std::vector<double> llr(const SoftWord& sw)
{
    std::vector<double> out(sw.r.size());
    const double scale = 2.0 / (sw.sigma * sw.sigma);
    for (std::size_t i = 0; i < sw.r.size(); ++i) out[i] = scale * sw.r[i];
    return out;
}

BitVector hard_decisions(const SoftWord& sw)
{
    BitVector y(sw.r.size());
    for (std::size_t i = 0; i < sw.r.size(); ++i)
        if (sw.r[i] >= 0.0) y.set(i, true);
    return y;
}

std::vector<double> confidences(const SoftWord& sw)
{
    std::vector<double> a(sw.r.size());
    for (std::size_t i = 0; i < sw.r.size(); ++i) a[i] = std::fabs(sw.r[i]);
    return a;
}

}  // namespace codebench
