#pragma once

#include <vector>

#include "codebench/channel.hpp"
#include "codebench/code.hpp"

namespace codebench {

enum class ErasureStatus { unique, ambiguous };

struct ErasureVerdict {
    ErasureStatus status = ErasureStatus::ambiguous;
    BitVector codeword;                    // filled codeword when unique
    std::vector<std::size_t> unresolved;   // positions not uniquely determined

    bool unique() const { return status == ErasureStatus::unique; }
};

/// ML erasure filling: H c^t = 0 restricted to the erased columns (known bits
/// move to the right-hand side) is solved by Gaussian elimination on a copy of
/// that submatrix. Unique iff the submatrix has full column rank; otherwise
/// the positions that are not forced by the system are listed.
ErasureVerdict ml_erasure_decode(const LinearCode& c, const BecWord& y);

/// Iterative peeling: repeatedly solve any check with exactly one erased
/// participant; stops at a fixpoint (a stopping set) or after max_iters
/// passes (0 = one pass per erasure, always enough).
ErasureVerdict peel_decode(const LinearCode& c, const BecWord& y, std::size_t max_iters = 0);

}  // namespace codebench
