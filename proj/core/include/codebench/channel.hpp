#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "codebench/gf2.hpp"

namespace codebench {

/// Counter-based random stream (Philox4x32-10 keyed by the master seed, the
/// 128-bit counter holds the stream id and a block index). A fixed
/// (master_seed, stream_id) pair reproduces the same sample sequence on every
/// run; distinct stream ids are independent, so parallel trials can each own
/// a stream without coordination. Gaussians use Box-Muller on top of the
/// uniform output.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : seed_(master_seed), stream_(stream_id)
    {
    }

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64();
    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit();
    /// Standard normal.
    double next_gaussian();
    /// Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);
    /// len i.i.d. fair bits.
    BitVector next_bits(std::size_t len);

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buf_{};
    unsigned avail_ = 0;
    double gauss_spare_ = 0.0;
    bool have_spare_ = false;
};

/// Erasure-channel output: value bits where not erased (erased positions hold
/// zero in `values` and are flagged in `erased`).
struct BecWord {
    BitVector values;
    BitVector erased;

    std::size_t size() const { return values.size(); }
    std::size_t erasure_weight() const { return erased.weight(); }
};

/// AWGN-channel output: real samples plus the noise standard deviation they
/// were produced with.
struct SoftWord {
    std::vector<double> r;
    double sigma = 1.0;
};

/// Each position is erased independently with probability eps, otherwise
/// carried unchanged.
BecWord bec_transmit(const BitVector& c, double eps, RngStream& rng);

/// s_i = 2 c_i - 1.
std::vector<double> bpsk_map(const BitVector& c);

/// r = bpsk(c) + w with w_i ~ N(0, sigma^2).
SoftWord awgn_transmit(const BitVector& c, double sigma, RngStream& rng);

/// Unit-energy BPSK: Eb/N0 = 1 / (2 R sigma^2).
double sigma_from_ebn0(double ebn0_db, double rate);

/// Per-bit log-likelihood ratios 2 r_i / sigma^2 (positive favors bit 1,
/// matching the hard-decision rule below).
std::vector<double> llr(const SoftWord& sw);

/// y_i = 1 iff r_i >= 0.
BitVector hard_decisions(const SoftWord& sw);

/// alpha_i = |r_i|.
std::vector<double> confidences(const SoftWord& sw);

}  // namespace codebench
