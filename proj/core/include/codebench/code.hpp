#pragma once

#include <optional>
#include <string>

#include "codebench/gf2.hpp"

namespace codebench {

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A binary linear block code. G is k x n with full row rank; H satisfies
/// G H^t = 0 and rank(H) = n - k. H normally has n - k rows, but a structured
/// parity matrix with dependent rows (LDPC) is kept as built because the
/// message-passing decoders use its sparsity.
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix G;
    BitMatrix H;
    std::optional<std::size_t> d_min;  // exact minimum distance when known

    std::string family;  // rm | polar | bch | ldpc | random | crc+<family>
    std::string label;   // human-readable provenance
    std::uint64_t seed = 0;
    std::string design;  // design-parameter notes (t, design eps/sigma, ...)
};

/// Validates rank and duality, fills H from G when absent, and brute-forces
/// d_min for k <= 14 (construction stays cheap at that size). A d_min hint is
/// trusted but cross-checked against the brute force when both are available.
LinearCode make_linear_code(BitMatrix g, std::string family, std::string label,
                            std::uint64_t seed = 0, std::string design = {},
                            std::optional<std::size_t> d_min_hint = {},
                            std::optional<BitMatrix> h = {});

/// Throws on any violated invariant (duality, ranks, shape).
void validate_code(const LinearCode& c);

/// c = b G. Throws LengthMismatch unless |b| = k.
BitVector encode(const LinearCode& c, const BitVector& message);

/// Appends one overall even-parity bit; odd d_min becomes d_min + 1.
LinearCode extend_code(const LinearCode& c);

/// Exhaustive over all 2^k - 1 nonzero codewords; guarded to k <= 24.
std::size_t brute_force_min_distance(const BitMatrix& g);

double code_rate(const LinearCode& c);

/// Self-describing text format: header (family, n, k, seed, design, d_min,
/// label) followed by hex-packed G and H rows. Loading it reproduces the code
/// exactly, so sweeps are replayable.
void save_code(const LinearCode& c, const std::string& path);
LinearCode load_code(const std::string& path);

}  // namespace codebench
