#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codebench {

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense bit vector packed LSB-first into 64-bit words. Bits past size() are
/// kept zero so word-level operations need no masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v)
    {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void clear();
    void xor_with(const BitVector& o);
    std::size_t weight() const;
    bool any() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    std::string to_string() const;
    std::string to_hex() const;
    static BitVector from_hex(std::string_view hex, std::size_t len);

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix, row-major, each row packed like a BitVector.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0)
    {
    }

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v)
    {
        const std::uint64_t m = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= m;
        else
            w_[r * wpr_ + (c >> 6)] &= ~m;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const
    {
        return {w_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {w_.data() + r * wpr_, wpr_}; }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void row_xor(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    std::size_t row_weight(std::size_t r) const;

    BitMatrix transposed() const;
    /// out(r, i) = in(r, perm[i]); perm must be a permutation of [0, cols).
    BitMatrix permute_cols(std::span<const std::size_t> perm) const;
    BitMatrix submatrix_rows(std::size_t first, std::size_t count) const;

    std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
    /// GF(2) matrix product.
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

/// v * M for a length-rows(M) row vector; used for encoding.
BitVector mul_vec_mat(const BitVector& v, const BitMatrix& m);
/// M * v^t, returned as a length-rows(M) vector; used for syndromes.
BitVector mul_mat_vecT(const BitMatrix& m, const BitVector& v);

struct GaussResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    BitMatrix row_transform;  // row_transform * input = reduced
};

/// Reduced row-echelon form restricted to the visited pivot columns. Within a
/// candidate column the lowest-index eligible row is chosen as pivot.
GaussResult gauss_eliminate(const BitMatrix& m, std::span<const std::size_t> pivot_column_order);
GaussResult gauss_eliminate(const BitMatrix& m);

struct Systematized {
    BitMatrix g_sys;                    // [I_k | P]
    std::vector<std::size_t> col_perm;  // col_perm[i] = source column at position i
};

/// Left-to-right pivot scan; a column is moved only if dependent on earlier
/// pivots. Throws RankDeficient when rank(g) < rows(g).
Systematized to_systematic(const BitMatrix& g);

/// (n-k) x n parity-check basis with g * h^t = 0. Throws RankDeficient.
BitMatrix nullspace_basis(const BitMatrix& g);

/// Basis of {x : m x^t = 0} for an arbitrary matrix; (cols - rank) rows.
BitMatrix kernel_basis(const BitMatrix& m);

std::size_t rank_of(const BitMatrix& m);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

}  // namespace codebench
