#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

namespace codebench::oracles {

std::vector<BitVector> all_codewords(const BitMatrix& g)
{
    const std::size_t k = g.rows();
    if (k > 20) throw std::invalid_argument("codeword enumeration limited to k <= 20");
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
        BitVector b(k);
        for (std::size_t i = 0; i < k; ++i)
            if ((msg >> i) & 1) b.set(i, true);
        out.push_back(mul_vec_mat(b, g));
    }
    return out;
}

std::size_t count_consistent(const std::vector<BitVector>& codewords, const BecWord& y)
{
    std::size_t count = 0;
    for (const BitVector& cw : codewords) {
        bool ok = true;
        for (std::size_t i = 0; i < y.size() && ok; ++i)
            if (!y.erased.get(i) && cw.get(i) != y.values.get(i)) ok = false;
        if (ok) ++count;
    }
    return count;
}

std::size_t rank_by_span(const BitMatrix& m)
{
    const std::size_t r = m.rows();
    if (r > 20) throw std::invalid_argument("span enumeration limited to <= 20 rows");
    std::set<std::string> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        BitVector acc(m.cols());
        for (std::size_t i = 0; i < r; ++i)
            if ((mask >> i) & 1) acc.xor_with(m.row(i));
        span.insert(acc.to_string());
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

MlResult exhaustive_ml(const std::vector<BitVector>& codewords, const SoftWord& sw)
{
    const BitVector y = hard_decisions(sw);
    const std::vector<double> alpha = confidences(sw);
    MlResult best{std::numeric_limits<double>::infinity(), {}};
    for (const BitVector& cw : codewords) {
        const double d = whd(cw, y, alpha);
        if (d < best.whd) {
            best.whd = d;
            best.argmin = cw;
        }
    }
    return best;
}

BitMatrix random_full_rank(std::size_t k, std::size_t n, RngStream& rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BitMatrix g(k, n);
        for (std::size_t i = 0; i < k; ++i) g.set_row(i, rng.next_bits(n));
        if (rank_of(g) == k) return g;
    }
    throw std::runtime_error("could not draw a full-rank matrix");
}

std::size_t min_distance(const std::vector<BitVector>& codewords)
{
    std::size_t best = SIZE_MAX;
    for (const BitVector& cw : codewords)
        if (cw.any()) best = std::min(best, cw.weight());
    return best;
}

}  // namespace codebench::oracles
