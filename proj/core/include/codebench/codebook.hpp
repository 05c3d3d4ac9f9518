#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codebench/code.hpp"

namespace codebench {

struct InvalidDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// ell-fold Kronecker power of the 2x2 kernel [[1,0],[1,1]]; 1 <= ell <= 12.
BitMatrix kron_power(unsigned ell);

/// Reed-Muller style selection: the k heaviest rows of the Kronecker power,
/// ties broken toward lower row index.
LinearCode build_rm(unsigned ell, std::size_t k);

/// Exact erasure-probability splitting: a channel with parameter e produces
/// children 2e - e^2 and e^2. Indexing matches kron_power row order; output[i]
/// is the erasure probability of synthesized channel i (lower = more
/// reliable).
std::vector<double> polar_bec_reliabilities(unsigned ell, double eps);

/// Gaussian-approximation density evolution on LLR means with the check-node
/// phi transform evaluated from a numeric table. Returns a score per
/// synthesized channel (negated LLR mean); lower = more reliable. Only the
/// ordering is contractual.
std::vector<double> polar_awgn_reliabilities(unsigned ell, double design_sigma);

/// Select the k most reliable synthesized channels (lowest score, ties toward
/// lower index) as rows of the Kronecker power.
LinearCode build_polar(unsigned ell, std::size_t k, std::span<const double> reliabilities,
                       const std::string& design_note);

/// Narrow-sense primitive BCH of length 2^m - 1 correcting t errors; the
/// generator polynomial is the product of the distinct minimal polynomials of
/// alpha^1 .. alpha^2t. Stored in systematic form.
LinearCode build_bch(unsigned m, unsigned t);

struct LdpcStats {
    std::size_t four_cycles_before = 0;
    std::size_t four_cycles_after = 0;
    std::size_t swaps_applied = 0;
};

/// Regular (3,6) LDPC from a random stub matching: parallel edges repaired
/// first, then bounded random double-edge swaps to reduce 4-cycles. The true
/// dimension n - rank(H) is reported in the label; H keeps all n/2 rows.
LinearCode build_ldpc_regular(std::size_t n, std::uint64_t seed, LdpcStats* stats = nullptr);

struct CrcSpec {
    unsigned m = 0;        // redundancy bits
    std::uint64_t g = 0;   // generator polynomial, bit i = coeff of x^i
};

/// g(x) = x^16 + x^12 + x^5 + 1.
CrcSpec crc_ccitt16();

/// Remainder of msg(x) * x^m modulo g(x); m bits, transmit order.
BitVector crc_remainder(const CrcSpec& crc, const BitVector& message);

/// (k - m) x k systematic generator of the CRC code (message, then checks).
BitMatrix crc_generator(const CrcSpec& crc, std::size_t k);

/// Serial concatenation with the CRC as outer code: generator G_crc x G,
/// dimension k - m at unchanged length.
LinearCode crc_concat(const LinearCode& inner, const CrcSpec& crc);

}  // namespace codebench
