#include "codebench/decode_bec.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace codebench {

namespace {

void check_codeword(const LinearCode& c, const BitVector& cw, const BecWord& y)
{
    if (mul_mat_vecT(c.H, cw).any())
        throw std::logic_error("erasure decoder produced a non-codeword");
    for (std::size_t i = 0; i < c.n; ++i)
        if (!y.erased.get(i) && cw.get(i) != y.values.get(i))
            throw std::logic_error("erasure decoder changed a known position");
}

}  // namespace

ErasureVerdict ml_erasure_decode(const LinearCode& c, const BecWord& y)
{
    if (y.size() != c.n) throw LengthMismatch("received word length != n");
    const std::size_t m = c.H.rows();

    std::vector<std::size_t> erased;
    erased.reserve(y.erasure_weight());
    for (std::size_t i = 0; i < c.n; ++i)
        if (y.erased.get(i)) erased.push_back(i);
    const std::size_t w = erased.size();

    if (w == 0) {
        ErasureVerdict v{ErasureStatus::unique, y.values, {}};
        check_codeword(c, v.codeword, y);
        return v;
    }

    // Augmented system [H_E | s] with s the syndrome of the known bits
    // (erased positions hold zero in y.values, so the full-row syndrome is s).
    const std::size_t wpr = (w + 1 + 63) / 64;
    std::vector<std::uint64_t> a(m * wpr, 0);
    auto bit = [&](std::size_t r, std::size_t j) -> bool {
        return (a[r * wpr + (j >> 6)] >> (j & 63)) & 1u;
    };
    auto setbit = [&](std::size_t r, std::size_t j) {
        a[r * wpr + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    };
    const BitVector syndrome = mul_mat_vecT(c.H, y.values);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < w; ++j)
            if (c.H.get(r, erased[j])) setbit(r, j);
        if (syndrome.get(r)) setbit(r, w);
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;  // pivot column of row r, r < rank
    std::vector<bool> is_pivot(w, false);
    for (std::size_t j = 0; j < w && rank < m; ++j) {
        std::size_t p = rank;
        while (p < m && !bit(p, j)) ++p;
        if (p == m) continue;
        if (p != rank)
            std::swap_ranges(a.begin() + p * wpr, a.begin() + (p + 1) * wpr,
                             a.begin() + rank * wpr);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && bit(r, j))
                for (std::size_t t = 0; t < wpr; ++t) a[r * wpr + t] ^= a[rank * wpr + t];
        }
        pivot_col.push_back(j);
        is_pivot[j] = true;
        ++rank;
    }

    // Rows reduced to zero must carry a zero right-hand side for any genuine
    // channel output.
    for (std::size_t r = rank; r < m; ++r)
        if (bit(r, w)) throw std::logic_error("inconsistent erasure system");

    if (rank == w) {
        BitVector cw = y.values;
        for (std::size_t r = 0; r < rank; ++r) cw.set(erased[pivot_col[r]], bit(r, w));
        ErasureVerdict v{ErasureStatus::unique, std::move(cw), {}};
        check_codeword(c, v.codeword, y);
        return v;
    }

    // A pivot variable stays undetermined when its row involves a free
    // column; free columns are undetermined outright.
    std::vector<bool> undetermined(w, false);
    for (std::size_t j = 0; j < w; ++j)
        if (!is_pivot[j]) undetermined[j] = true;
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t j = 0; j < w; ++j) {
            if (!is_pivot[j] && bit(r, j)) {
                undetermined[pivot_col[r]] = true;
                break;
            }
        }
    }

    ErasureVerdict v;
    v.status = ErasureStatus::ambiguous;
    for (std::size_t j = 0; j < w; ++j)
        if (undetermined[j]) v.unresolved.push_back(erased[j]);
    return v;
}

ErasureVerdict peel_decode(const LinearCode& c, const BecWord& y, std::size_t max_iters)
{
    if (y.size() != c.n) throw LengthMismatch("received word length != n");
    if (max_iters == 0) max_iters = c.n;

    BitVector values = y.values;
    BitVector erased = y.erased;
    const std::size_t m = c.H.rows();
    const std::size_t wpr = c.H.words_per_row();

    std::size_t remaining = erased.weight();
    for (std::size_t iter = 0; iter < max_iters && remaining > 0; ++iter) {
        bool progress = false;
        for (std::size_t r = 0; r < m; ++r) {
            auto hr = c.H.row_words(r);
            auto ew = erased.words();
            std::uint64_t only = 0;
            std::size_t cnt = 0, word = 0;
            for (std::size_t t = 0; t < wpr; ++t) {
                const std::uint64_t x = hr[t] & ew[t];
                if (x) {
                    cnt += static_cast<std::size_t>(std::popcount(x));
                    if (cnt > 1) break;
                    only = x;
                    word = t;
                }
            }
            if (cnt != 1) continue;
            // One erased participant: its value is the parity of the rest.
            const std::size_t pos = word * 64 + static_cast<std::size_t>(std::countr_zero(only));
            auto vw = values.words();
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < wpr; ++t) acc ^= hr[t] & vw[t];
            values.set(pos, std::popcount(acc) & 1);
            erased.set(pos, false);
            --remaining;
            progress = true;
        }
        if (!progress) break;
    }

    if (remaining == 0) {
        ErasureVerdict v{ErasureStatus::unique, std::move(values), {}};
        check_codeword(c, v.codeword, y);
        return v;
    }
    ErasureVerdict v;
    v.status = ErasureStatus::ambiguous;
    for (std::size_t i = 0; i < c.n; ++i)
        if (erased.get(i)) v.unresolved.push_back(i);
    return v;
}

}  // namespace codebench
