#include "codebench/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace codebench {

namespace {

char hex_digit(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

unsigned hex_value(char c)
{
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
}

}  // namespace

BitVector BitVector::from_string(std::string_view s)
{
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must be 0/1");
    }
    return v;
}

void BitVector::clear() { std::fill(w_.begin(), w_.end(), 0); }

void BitVector::xor_with(const BitVector& o)
{
    assert(len_ == o.len_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::size_t BitVector::weight() const
{
    std::size_t n = 0;
    for (auto w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::any() const
{
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::string BitVector::to_string() const
{
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVector::to_hex() const
{
    // Nibble t covers bits 4t..4t+3, first bit is the nibble's MSB.
    const std::size_t nn = (len_ + 3) / 4;
    std::string s(nn, '0');
    for (std::size_t t = 0; t < nn; ++t) {
        unsigned v = 0;
        for (unsigned j = 0; j < 4; ++j) {
            const std::size_t i = 4 * t + j;
            if (i < len_ && get(i)) v |= 8u >> j;
        }
        s[t] = hex_digit(v);
    }
    return s;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t len)
{
    if (hex.size() != (len + 3) / 4) throw std::invalid_argument("hex length mismatch");
    BitVector v(len);
    for (std::size_t t = 0; t < hex.size(); ++t) {
        const unsigned val = hex_value(hex[t]);
        for (unsigned j = 0; j < 4; ++j) {
            const std::size_t i = 4 * t + j;
            if (i < len && (val & (8u >> j))) v.set(i, true);
        }
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows)
{
    const std::size_t r = rows.size();
    if (r == 0) throw std::invalid_argument("empty matrix");
    const std::size_t c = rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (auto s : rows) {
        if (s.size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            if (s[j] == '1') m.set(i, j, true);
        ++i;
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const
{
    BitVector v(cols_);
    auto dst = v.words();
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), dst.begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    assert(v.size() == cols_);
    auto dst = row_words(r);
    auto src = v.words();
    std::copy(src.begin(), src.end(), dst.begin());
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src)
{
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    std::swap_ranges(w_.begin() + a * wpr_, w_.begin() + (a + 1) * wpr_, w_.begin() + b * wpr_);
}

std::size_t BitMatrix::row_weight(std::size_t r) const
{
    std::size_t n = 0;
    for (auto w : row_words(r)) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::permute_cols(std::span<const std::size_t> perm) const
{
    assert(perm.size() == cols_);
    BitMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols_; ++i)
            if (get(r, perm[i])) out.set(r, i, true);
    return out;
}

BitMatrix BitMatrix::submatrix_rows(std::size_t first, std::size_t count) const
{
    assert(first + count <= rows_);
    BitMatrix out(count, cols_);
    std::copy(w_.begin() + first * wpr_, w_.begin() + (first + count) * wpr_, out.w_.begin());
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row_words(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            auto src = b.row_words(j);
            for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitVector mul_vec_mat(const BitVector& v, const BitMatrix& m)
{
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
    BitVector out(m.cols());
    auto dst = out.words();
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v.get(j)) continue;
        auto src = m.row_words(j);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
    }
    return out;
}

BitVector mul_mat_vecT(const BitMatrix& m, const BitVector& v)
{
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    BitVector out(m.rows());
    auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

GaussResult gauss_eliminate(const BitMatrix& m, std::span<const std::size_t> pivot_column_order)
{
    GaussResult res;
    res.reduced = m;
    res.row_transform = BitMatrix::identity(m.rows());
    BitMatrix& r = res.reduced;
    BitMatrix& t = res.row_transform;

    std::size_t rank = 0;
    for (std::size_t c : pivot_column_order) {
        assert(c < m.cols());
        std::size_t pivot = rank;
        while (pivot < m.rows() && !r.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            r.swap_rows(pivot, rank);
            t.swap_rows(pivot, rank);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != rank && r.get(i, c)) {
                r.row_xor(i, rank);
                t.row_xor(i, rank);
            }
        }
        res.pivot_cols.push_back(c);
        ++rank;
        if (rank == m.rows()) break;
    }
    res.rank = rank;
    return res;
}

GaussResult gauss_eliminate(const BitMatrix& m)
{
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return gauss_eliminate(m, order);
}

Systematized to_systematic(const BitMatrix& g)
{
    GaussResult gr = gauss_eliminate(g);
    if (gr.rank < g.rows()) throw RankDeficient("generator matrix is rank deficient");

    std::vector<std::size_t> perm = gr.pivot_cols;
    perm.reserve(g.cols());
    std::vector<bool> is_pivot(g.cols(), false);
    for (std::size_t c : gr.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);

    return {gr.reduced.permute_cols(perm), std::move(perm)};
}

BitMatrix nullspace_basis(const BitMatrix& g)
{
    const std::size_t k = g.rows(), n = g.cols();
    if (n <= k) throw std::invalid_argument("nullspace_basis needs n > k");
    Systematized sys = to_systematic(g);

    // [I | P] -> [P^t | I] in permuted coordinates, then undo the permutation.
    BitMatrix h_sys(n - k, n);
    for (std::size_t r = 0; r < n - k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            if (sys.g_sys.get(c, k + r)) h_sys.set(r, c, true);
        h_sys.set(r, k + r, true);
    }
    return h_sys.permute_cols(inverse_permutation(sys.col_perm));
}

BitMatrix kernel_basis(const BitMatrix& m)
{
    GaussResult gr = gauss_eliminate(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : gr.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(n - gr.rank, n);
    std::size_t bi = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.set(bi, f, true);
        for (std::size_t r = 0; r < gr.rank; ++r)
            if (gr.reduced.get(r, f)) basis.set(bi, gr.pivot_cols[r], true);
        ++bi;
    }
    assert(bi == n - gr.rank);
    return basis;
}

std::size_t rank_of(const BitMatrix& m) { return gauss_eliminate(m).rank; }

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm)
{
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

}  // namespace codebench
