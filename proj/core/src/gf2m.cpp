#include "codebench/gf2m.hpp"

#include <cassert>

namespace codebench {

std::uint32_t Gf2mField::standard_primitive_poly(unsigned m)
{
    // Published primitive polynomials, lowest-weight convention.
    switch (m) {
        case 2: return 0x7;       // x^2+x+1
        case 3: return 0xB;       // x^3+x+1
        case 4: return 0x13;      // x^4+x+1
        case 5: return 0x25;      // x^5+x^2+1
        case 6: return 0x43;      // x^6+x+1
        case 7: return 0x89;      // x^7+x^3+1
        case 8: return 0x11D;     // x^8+x^4+x^3+x^2+1
        case 9: return 0x211;     // x^9+x^4+1
        case 10: return 0x409;    // x^10+x^3+1
        case 11: return 0x805;    // x^11+x^2+1
        case 12: return 0x1053;   // x^12+x^6+x^4+x+1
        case 13: return 0x201B;   // x^13+x^4+x^3+x+1
        case 14: return 0x4443;   // x^14+x^10+x^6+x+1
        case 15: return 0x8003;   // x^15+x+1
        case 16: return 0x1100B;  // x^16+x^12+x^3+x+1
        default: throw std::invalid_argument("no primitive polynomial on file for this m");
    }
}

Gf2mField::Gf2mField(unsigned m, std::uint32_t primitive_poly) : m_(m), poly_(primitive_poly)
{
    if (m < 2 || m > 16) throw std::invalid_argument("extension degree must be in [2, 16]");
    const std::uint32_t q = std::uint32_t{1} << m;
    if ((poly_ >> m) != 1) throw std::invalid_argument("primitive polynomial degree mismatch");

    log_.assign(q, 0);
    antilog_.assign(order(), 0);
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j < order(); ++j) {
        if (x == 1 && j != 0)
            throw std::invalid_argument("polynomial is not primitive (short cycle)");
        antilog_[j] = x;
        log_[x] = static_cast<std::uint16_t>(j);
        x <<= 1;
        if (x & q) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("polynomial is not primitive");
}

std::uint32_t Gf2mField::mul(std::uint32_t a, std::uint32_t b) const
{
    if (a == 0 || b == 0) return 0;
    return antilog_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order()];
}

std::uint32_t Gf2mField::inv(std::uint32_t a) const
{
    if (a == 0) throw DivideByZero("inverse of zero in GF(2^m)");
    return antilog_[(order() - log_[a]) % order()];
}

std::uint32_t Gf2mField::pow(std::uint32_t a, std::uint64_t e) const
{
    if (a == 0) return e == 0 ? 1 : 0;
    return antilog_[(static_cast<std::uint64_t>(log_[a]) * (e % order())) % order()];
}

unsigned Gf2mField::log(std::uint32_t a) const
{
    if (a == 0) throw DivideByZero("log of zero in GF(2^m)");
    return log_[a];
}

std::uint64_t Gf2mField::min_poly(std::uint32_t a) const
{
    if (a == 0) return 0b10;  // x

    // Conjugacy class {a, a^2, a^4, ...}.
    std::vector<std::uint32_t> conj;
    std::uint32_t e = a;
    do {
        conj.push_back(e);
        e = mul(e, e);
    } while (e != a);

    // Product of (x + c) with coefficients in GF(2^m).
    std::vector<std::uint32_t> coeff{1};
    for (std::uint32_t c : conj) {
        std::vector<std::uint32_t> next(coeff.size() + 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] ^= coeff[i];
            next[i] ^= mul(c, coeff[i]);
        }
        coeff = std::move(next);
    }

    std::uint64_t poly = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        assert(coeff[i] <= 1);  // conjugacy-class product lands in GF(2)
        if (coeff[i]) poly |= std::uint64_t{1} << i;
    }
    return poly;
}

int gf2poly_deg(std::span<const std::uint64_t> p)
{
    for (std::size_t w = p.size(); w-- > 0;) {
        if (p[w]) return static_cast<int>(64 * w + 63 - static_cast<unsigned>(__builtin_clzll(p[w])));
    }
    return -1;
}

bool gf2poly_get(std::span<const std::uint64_t> p, std::size_t i)
{
    const std::size_t w = i >> 6;
    if (w >= p.size()) return false;
    return (p[w] >> (i & 63)) & 1u;
}

void gf2poly_set(std::vector<std::uint64_t>& p, std::size_t i, bool v)
{
    const std::size_t w = i >> 6;
    if (w >= p.size()) p.resize(w + 1, 0);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        p[w] |= mask;
    else
        p[w] &= ~mask;
}

std::vector<std::uint64_t> gf2poly_mul(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b)
{
    const int da = gf2poly_deg(a), db = gf2poly_deg(b);
    if (da < 0 || db < 0) return {0};
    std::vector<std::uint64_t> out((static_cast<std::size_t>(da + db) + 64) / 64, 0);
    for (int i = 0; i <= da; ++i) {
        if (!gf2poly_get(a, static_cast<std::size_t>(i))) continue;
        for (int j = 0; j <= db; ++j) {
            if (gf2poly_get(b, static_cast<std::size_t>(j)))
                out[static_cast<std::size_t>(i + j) >> 6] ^=
                    std::uint64_t{1} << (static_cast<std::size_t>(i + j) & 63);
        }
    }
    return out;
}

}  // namespace codebench
