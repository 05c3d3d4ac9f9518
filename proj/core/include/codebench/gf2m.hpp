#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace codebench {

struct DivideByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// GF(2^m) arithmetic over a primitive polynomial, via log/antilog tables.
/// Elements are polynomial representations (bit i = coefficient of x^i).
class Gf2mField {
public:
    /// Uses a fixed, published primitive polynomial for each m (2..16).
    explicit Gf2mField(unsigned m) : Gf2mField(m, standard_primitive_poly(m)) {}
    Gf2mField(unsigned m, std::uint32_t primitive_poly);

    unsigned m() const { return m_; }
    std::uint32_t primitive_poly() const { return poly_; }
    /// Order of the multiplicative group, 2^m - 1.
    std::uint32_t order() const { return (std::uint32_t{1} << m_) - 1; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t alpha_pow(std::uint64_t j) const { return antilog_[j % order()]; }
    unsigned log(std::uint32_t a) const;

    /// Lowest-degree binary polynomial with a as a root: the product of
    /// (x + b) over the conjugacy class {a, a^2, a^4, ...}. Bit i = coeff x^i.
    std::uint64_t min_poly(std::uint32_t a) const;

    static std::uint32_t standard_primitive_poly(unsigned m);

private:
    unsigned m_;
    std::uint32_t poly_;
    std::vector<std::uint16_t> log_;
    std::vector<std::uint32_t> antilog_;
};

// GF(2)[x] on word-packed coefficient vectors (bit i = coeff of x^i).
int gf2poly_deg(std::span<const std::uint64_t> p);
bool gf2poly_get(std::span<const std::uint64_t> p, std::size_t i);
void gf2poly_set(std::vector<std::uint64_t>& p, std::size_t i, bool v);
std::vector<std::uint64_t> gf2poly_mul(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b);

}  // namespace codebench
