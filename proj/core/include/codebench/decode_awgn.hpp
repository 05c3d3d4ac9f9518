#pragma once

#include <functional>
#include <span>
#include <vector>

#include "codebench/channel.hpp"
#include "codebench/code.hpp"

namespace codebench {

/// Within-weight processing order. Lexicographic over basis indices is the
/// default; the reliability-guided mode walks each weight class starting from
/// the least-reliable positions, which finds low-distance candidates much
/// sooner when max_teps caps the search.
enum class TepOrder { lex, reliability };

struct OsdConfig {
    unsigned order = 2;                    // maximum test-error-pattern weight
    std::uint64_t max_teps = 1'000'000;    // cap on re-encodings (>= 1)
    bool early_stop = true;                // weighted-distance lower-bound cut
    TepOrder tep_order = TepOrder::lex;
};

/// Most-reliable-basis preparation: pi1 sorts positions by descending
/// confidence, pi2 compacts the pivot columns of the left-to-right elimination
/// (a column is skipped only when dependent on earlier pivots). perm is the
/// composition; g_tilde = [I_k | P] over the permuted positions.
struct MrbContext {
    std::vector<std::size_t> pi1;
    std::vector<std::size_t> pi2;
    std::vector<std::size_t> perm;  // perm[i] = original index at final position i
    BitMatrix g_tilde;
    BitVector y_tilde;
    std::vector<double> alpha_tilde;
};

MrbContext prepare_mrb(const LinearCode& c, const SoftWord& sw);

struct OsdOutcome {
    BitVector c_hat;                  // original position order
    double whd = 0.0;                 // weighted Hamming distance of c_hat
    std::uint64_t teps_processed = 0;
    bool ml_certified = false;        // no unvisited pattern can beat c_hat
};

/// Order-l OSD with lexicographic test-error patterns, incremental
/// re-encoding, and an optional sufficient early-stop condition (the sum of
/// the w smallest basis confidences already exceeds the best distance).
OsdOutcome osd_decode(const LinearCode& c, const SoftWord& sw, const OsdConfig& cfg);

/// Sum of confidences over positions where c_hat disagrees with y.
double whd(const BitVector& c_hat, const BitVector& y, std::span<const double> alpha);

/// True when the decoder output is at least as close to the received word as
/// the transmitted codeword, i.e. an ML decoder would have erred as well.
/// Meaningful only on word errors.
bool ml_lower_bound_check(const BitVector& c_true, const OsdOutcome& outcome, const SoftWord& sw);

namespace detail {

/// Visits supports by nondecreasing weight, lexicographic within a weight,
/// starting with the empty pattern. Visitor returns false to stop. Returns
/// the number of supports handed to the visitor.
template <typename Visitor>
std::uint64_t for_each_tep(std::size_t k, unsigned order, Visitor&& visit)
{
    std::uint64_t count = 0;
    std::vector<std::size_t> support;
    if (!visit(std::span<const std::size_t>{support})) return count + 1;
    ++count;
    const unsigned maxw = static_cast<unsigned>(std::min<std::size_t>(order, k));
    for (unsigned w = 1; w <= maxw; ++w) {
        support.resize(w);
        for (unsigned i = 0; i < w; ++i) support[i] = i;
        for (;;) {
            if (!visit(std::span<const std::size_t>{support})) return count + 1;
            ++count;
            // Next combination in lexicographic order.
            std::size_t i = w;
            while (i > 0 && support[i - 1] == k - w + (i - 1)) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return count;
}

}  // namespace detail

/// std::function wrapper over detail::for_each_tep.
std::uint64_t tep_iterate(std::size_t k, unsigned order,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

struct BpOutcome {
    BitVector c_hat;
    bool converged = false;
    unsigned iters = 0;
};

/// Flooding sum-product on LLRs 2 r / sigma^2 with the exact tanh check-node
/// rule; stops when H c^t = 0 or after max_iters iterations.
BpOutcome sum_product_decode(const LinearCode& c, const SoftWord& sw, unsigned max_iters = 50);

}  // namespace codebench
