#include "codebench/codebook.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "codebench/channel.hpp"
#include "codebench/gf2m.hpp"

namespace codebench {

BitMatrix kron_power(unsigned ell)
{
    if (ell < 1 || ell > 12) throw InvalidDesign("kron_power requires 1 <= ell <= 12");
    const std::size_t n = std::size_t{1} << ell;
    BitMatrix g(n, n);
    // Entry (i, j) of the Kronecker power is 1 iff the support of j is a
    // subset of the support of i.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if ((j & ~i) == 0) g.set(i, j, true);
    return g;
}

namespace {

std::optional<std::size_t> rm_dyadic_distance(unsigned ell, std::size_t k)
{
    // At k = sum_{i<=r} C(ell, i) the selection is the classical code with
    // minimum distance 2^(ell-r).
    std::size_t cum = 0, binom = 1;
    for (unsigned r = 0; r <= ell; ++r) {
        cum += binom;
        if (cum == k) return std::size_t{1} << (ell - r);
        binom = binom * (ell - r) / (r + 1);
    }
    return std::nullopt;
}

LinearCode code_from_kron_rows(unsigned ell, std::vector<std::size_t> rows_sel,
                               std::string family, std::string label, std::string design)
{
    std::sort(rows_sel.begin(), rows_sel.end());
    const BitMatrix full = kron_power(ell);
    BitMatrix g(rows_sel.size(), full.cols());
    for (std::size_t i = 0; i < rows_sel.size(); ++i) g.set_row(i, full.row(rows_sel[i]));

    std::optional<std::size_t> d;
    if (family == "rm") d = rm_dyadic_distance(ell, rows_sel.size());
    return make_linear_code(std::move(g), std::move(family), std::move(label), 0,
                            std::move(design), d);
}

}  // namespace

LinearCode build_rm(unsigned ell, std::size_t k)
{
    const std::size_t n = std::size_t{1} << ell;
    if (k < 1 || k > n) throw InvalidDesign("build_rm requires 1 <= k <= 2^ell");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [](std::size_t a, std::size_t b) {
        const int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa > wb : a < b;
    });
    idx.resize(k);

    std::ostringstream lbl;
    lbl << "rm(ell=" << ell << ",k=" << k << ")";
    std::ostringstream dsg;
    dsg << "ell=" << ell;
    return code_from_kron_rows(ell, std::move(idx), "rm", lbl.str(), dsg.str());
}

std::vector<double> polar_bec_reliabilities(unsigned ell, double eps)
{
    if (eps < 0.0 || eps > 1.0) throw InvalidDesign("eps outside [0, 1]");
    std::vector<double> v{eps};
    for (unsigned step = 0; step < ell; ++step) {
        std::vector<double> next(2 * v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double e = v[j];
            next[2 * j] = 2.0 * e - e * e;
            next[2 * j + 1] = e * e;
        }
        v = std::move(next);
    }
    return v;
}

namespace {

// Check-node transform for Gaussian-approximation density evolution:
// phi(m) = 1 - E[tanh(w/2)], w ~ N(m, 2m). Tabulated by numeric integration
// on a log grid, with the known large-m tail stitched on continuously.
class PhiTable {
public:
    PhiTable()
    {
        grid_.resize(kPoints);
        ln_phi_.resize(kPoints);
        const double lo = std::log(kMinM), hi = std::log(kMaxM);
        for (std::size_t i = 0; i < kPoints; ++i) {
            grid_[i] = lo + (hi - lo) * static_cast<double>(i) / (kPoints - 1);
            ln_phi_[i] = std::log(integrate_phi(std::exp(grid_[i])));
        }
        tail_offset_ = ln_phi_.back() - tail_ln_phi(kMaxM);
    }

    double ln_phi(double m) const
    {
        if (m <= 0.0) return 0.0;  // phi(0) = 1
        if (m < kMinM) return std::log1p(-0.5 * m * (1.0 - 0.25 * m));
        if (m > kMaxM) return tail_ln_phi(m) + tail_offset_;
        const double x = std::log(m);
        const double t = (x - grid_.front()) / (grid_.back() - grid_.front()) * (kPoints - 1);
        const std::size_t i = std::min(static_cast<std::size_t>(t), kPoints - 2);
        const double f = t - static_cast<double>(i);
        return ln_phi_[i] * (1.0 - f) + ln_phi_[i + 1] * f;
    }

    double inv_ln_phi(double target) const
    {
        if (target >= 0.0) return 0.0;
        double hi = 1.0;
        while (ln_phi(hi) > target) {
            hi *= 2.0;
            if (hi > 1e12) return hi;
        }
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (ln_phi(mid) > target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    static constexpr double kMinM = 1e-4;
    static constexpr double kMaxM = 64.0;
    static constexpr std::size_t kPoints = 1536;

    static double tail_ln_phi(double m)
    {
        return 0.5 * std::log(std::numbers::pi / m) - 0.25 * m + std::log1p(-10.0 / (7.0 * m));
    }

    static double integrate_phi(double m)
    {
        // Simpson over +-12 std devs of N(m, 2m).
        const double sd = std::sqrt(2.0 * m);
        const double a = m - 12.0 * sd, b = m + 12.0 * sd;
        const std::size_t steps = 4096;
        const double h = (b - a) / steps;
        auto f = [&](double w) {
            const double z = (w - m) / sd;
            return std::tanh(0.5 * w) * std::exp(-0.5 * z * z);
        };
        double acc = f(a) + f(b);
        for (std::size_t i = 1; i < steps; ++i) acc += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
        const double mean_tanh = acc * h / 3.0 / (sd * std::sqrt(2.0 * std::numbers::pi));
        return std::max(1.0 - mean_tanh, 1e-300);
    }

    std::vector<double> grid_, ln_phi_;
    double tail_offset_ = 0.0;
};

const PhiTable& phi_table()
{
    static const PhiTable table;
    return table;
}

}  // namespace

std::vector<double> polar_awgn_reliabilities(unsigned ell, double design_sigma)
{
    if (!(design_sigma > 0.0)) throw InvalidDesign("design sigma must be positive");
    const PhiTable& phi = phi_table();

    std::vector<double> mean{2.0 / (design_sigma * design_sigma)};
    for (unsigned step = 0; step < ell; ++step) {
        std::vector<double> next(2 * mean.size());
        for (std::size_t j = 0; j < mean.size(); ++j) {
            const double m = mean[j];
            const double lp = phi.ln_phi(m);
            const double t = std::exp(lp);
            // phi(m-) = 2 phi(m) - phi(m)^2, evaluated in the log domain.
            next[2 * j] = phi.inv_ln_phi(lp + std::log1p(1.0 - t));
            next[2 * j + 1] = 2.0 * m;
        }
        mean = std::move(next);
    }

    std::vector<double> score(mean.size());
    for (std::size_t i = 0; i < mean.size(); ++i) score[i] = -mean[i];
    return score;
}

LinearCode build_polar(unsigned ell, std::size_t k, std::span<const double> reliabilities,
                       const std::string& design_note)
{
    const std::size_t n = std::size_t{1} << ell;
    if (reliabilities.size() != n) throw InvalidDesign("reliability vector length != 2^ell");
    if (k < 1 || k > n) throw InvalidDesign("build_polar requires 1 <= k <= 2^ell");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return reliabilities[a] != reliabilities[b] ? reliabilities[a] < reliabilities[b] : a < b;
    });
    idx.resize(k);

    std::ostringstream lbl;
    lbl << "polar(ell=" << ell << ",k=" << k << "," << design_note << ")";
    return code_from_kron_rows(ell, std::move(idx), "polar", lbl.str(), design_note);
}

LinearCode build_bch(unsigned m, unsigned t)
{
    if (m < 2 || m > 10) throw InvalidDesign("build_bch requires 2 <= m <= 10");
    if (t < 1 || t >= (1u << (m - 1))) throw InvalidDesign("build_bch requires 1 <= t < 2^(m-1)");

    const Gf2mField field(m);
    const std::size_t n = field.order();

    std::vector<std::uint64_t> g{1};
    std::set<std::uint64_t> covered;
    for (std::uint64_t i = 1; i <= 2ull * t; ++i) {
        // Representative of the cyclotomic coset of i mod 2^m - 1.
        std::uint64_t rep = i, e = i;
        do {
            e = (2 * e) % n;
            rep = std::min(rep, e);
        } while (e != i);
        if (!covered.insert(rep).second) continue;
        const std::uint64_t mp = field.min_poly(field.alpha_pow(i));
        g = gf2poly_mul(g, std::span<const std::uint64_t>(&mp, 1));
    }

    const int deg = gf2poly_deg(g);
    if (deg < 0 || static_cast<std::size_t>(deg) >= n)
        throw InvalidDesign("BCH generator polynomial degree >= n");
    const std::size_t k = n - static_cast<std::size_t>(deg);

    BitMatrix rows(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(deg); ++j)
            if (gf2poly_get(g, j)) rows.set(r, r + j, true);

    Systematized sys = to_systematic(rows);
    // The shift staircase pivots left to right, so no column moves.
    for (std::size_t i = 0; i < sys.col_perm.size(); ++i) assert(sys.col_perm[i] == i);

    std::ostringstream lbl, dsg;
    lbl << "bch(n=" << n << ",k=" << k << ",t=" << t << ")";
    dsg << "m=" << m << " t=" << t << " d_design=" << 2 * t + 1;
    return make_linear_code(std::move(sys.g_sys), "bch", lbl.str(), 0, dsg.str());
}

namespace {

std::size_t pair_count(std::size_t overlap) { return overlap * (overlap - 1) / 2; }

std::size_t row_overlap(const BitMatrix& h, std::size_t a, std::size_t b)
{
    auto ra = h.row_words(a), rb = h.row_words(b);
    std::size_t ov = 0;
    for (std::size_t w = 0; w < ra.size(); ++w)
        ov += static_cast<std::size_t>(std::popcount(ra[w] & rb[w]));
    return ov;
}

std::size_t count_four_cycles(const BitMatrix& h)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j) total += pair_count(row_overlap(h, i, j));
    return total;
}

std::size_t local_four_cycles(const BitMatrix& h, std::size_t c1, std::size_t c2)
{
    std::size_t total = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        if (r == c1 || r == c2) continue;
        total += pair_count(row_overlap(h, c1, r)) + pair_count(row_overlap(h, c2, r));
    }
    return total + pair_count(row_overlap(h, c1, c2));
}

}  // namespace

LinearCode build_ldpc_regular(std::size_t n, std::uint64_t seed, LdpcStats* stats)
{
    if (n < 12 || n % 2 != 0) throw InvalidDesign("build_ldpc_regular requires even n >= 12");
    const std::size_t checks = n / 2;
    const std::size_t edges = 3 * n;
    RngStream rng(seed, 0);

    // Stub matching: check j owns stub slots 6j..6j+5; vstub[e] is the
    // variable on slot e.
    std::vector<std::size_t> vstub(edges);
    for (std::size_t i = 0; i < edges; ++i) vstub[i] = i / 3;
    for (std::size_t i = edges - 1; i > 0; --i)
        std::swap(vstub[i], vstub[rng.next_below(i + 1)]);

    std::vector<std::uint8_t> cnt(checks * n, 0);
    auto at = [&](std::size_t c, std::size_t v) -> std::uint8_t& { return cnt[c * n + v]; };
    for (std::size_t e = 0; e < edges; ++e) ++at(e / 6, vstub[e]);

    // Parallel-edge repair via double edge swaps.
    std::size_t attempts = 0;
    const std::size_t max_attempts = 400 * n;
    for (;;) {
        std::vector<std::size_t> bad;
        for (std::size_t e = 0; e < edges; ++e)
            if (at(e / 6, vstub[e]) > 1) bad.push_back(e);
        if (bad.empty()) break;
        for (std::size_t e1 : bad) {
            const std::size_t c1 = e1 / 6, v1 = vstub[e1];
            if (at(c1, v1) <= 1) continue;  // already repaired this pass
            bool fixed = false;
            while (!fixed) {
                if (++attempts > max_attempts)
                    throw ConstructionFailed("LDPC stub matching could not avoid parallel edges");
                const std::size_t e2 = rng.next_below(edges);
                const std::size_t c2 = e2 / 6, v2 = vstub[e2];
                if (c1 == c2 || v1 == v2 || at(c1, v2) > 0 || at(c2, v1) > 0) continue;
                --at(c1, v1);
                --at(c2, v2);
                ++at(c1, v2);
                ++at(c2, v1);
                std::swap(vstub[e1], vstub[e2]);
                fixed = true;
            }
        }
    }

    BitMatrix h(checks, n);
    for (std::size_t e = 0; e < edges; ++e) h.set(e / 6, vstub[e], true);

    // Bounded random double-edge swaps; keep a swap only when it strictly
    // lowers the 4-cycle count and creates no parallel edge.
    std::size_t cycles = count_four_cycles(h);
    if (stats) {
        stats->four_cycles_before = cycles;
        stats->swaps_applied = 0;
    }
    for (std::size_t pass = 0; pass < 50 * n && cycles > 0; ++pass) {
        const std::size_t e1 = rng.next_below(edges), e2 = rng.next_below(edges);
        const std::size_t c1 = e1 / 6, v1 = vstub[e1];
        const std::size_t c2 = e2 / 6, v2 = vstub[e2];
        if (c1 == c2 || v1 == v2 || h.get(c1, v2) || h.get(c2, v1)) continue;
        const std::size_t before = local_four_cycles(h, c1, c2);
        h.set(c1, v1, false);
        h.set(c2, v2, false);
        h.set(c1, v2, true);
        h.set(c2, v1, true);
        const std::size_t after = local_four_cycles(h, c1, c2);
        if (after < before) {
            std::swap(vstub[e1], vstub[e2]);
            cycles -= before - after;
            if (stats) ++stats->swaps_applied;
        } else {
            h.set(c1, v2, false);
            h.set(c2, v1, false);
            h.set(c1, v1, true);
            h.set(c2, v2, true);
        }
    }
    if (stats) stats->four_cycles_after = cycles;
    assert(cycles == count_four_cycles(h));

    const std::size_t k = n - rank_of(h);
    BitMatrix g = kernel_basis(h);
    assert(g.rows() == k);

    std::ostringstream lbl;
    lbl << "ldpc(3,6,n=" << n << ",seed=" << seed << ",k=" << k << ")";
    return make_linear_code(std::move(g), "ldpc", lbl.str(), seed, "dv=3 dc=6", {}, std::move(h));
}

CrcSpec crc_ccitt16() { return {16, 0x11021}; }

BitVector crc_remainder(const CrcSpec& crc, const BitVector& message)
{
    if (crc.m == 0 || crc.m > 32) throw InvalidDesign("CRC degree outside [1, 32]");
    if (!(crc.g & 1) || (crc.g >> crc.m) != 1)
        throw InvalidDesign("CRC polynomial must be monic of degree m with nonzero constant term");

    // LFSR division of message(x) * x^m by g(x), first message bit = highest
    // degree coefficient.
    const std::uint64_t top = std::uint64_t{1} << crc.m;
    std::uint64_t reg = 0;
    auto feed = [&](bool bit) {
        reg = (reg << 1) | static_cast<std::uint64_t>(bit);
        if (reg & top) reg ^= crc.g;
    };
    for (std::size_t i = 0; i < message.size(); ++i) feed(message.get(i));
    for (unsigned i = 0; i < crc.m; ++i) feed(false);

    BitVector out(crc.m);
    for (unsigned j = 0; j < crc.m; ++j) out.set(j, (reg >> (crc.m - 1 - j)) & 1);
    return out;
}

BitMatrix crc_generator(const CrcSpec& crc, std::size_t k)
{
    if (crc.m >= k) throw InvalidDesign("CRC degree must be below the inner dimension");
    const std::size_t kk = k - crc.m;
    BitMatrix g(kk, k);
    for (std::size_t i = 0; i < kk; ++i) {
        g.set(i, i, true);
        BitVector msg(kk);
        msg.set(i, true);
        const BitVector rem = crc_remainder(crc, msg);
        for (unsigned j = 0; j < crc.m; ++j)
            if (rem.get(j)) g.set(i, kk + j, true);
    }
    return g;
}

LinearCode crc_concat(const LinearCode& inner, const CrcSpec& crc)
{
    BitMatrix g = crc_generator(crc, inner.k) * inner.G;
    std::ostringstream lbl;
    lbl << "crc" << crc.m << "+" << inner.label;
    return make_linear_code(std::move(g), "crc+" + inner.family, lbl.str(), inner.seed,
                            inner.design);
}

}  // namespace codebench
