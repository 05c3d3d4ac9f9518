#include "codebench/decode_awgn.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace codebench {

MrbContext prepare_mrb(const LinearCode& c, const SoftWord& sw)
{
    if (sw.r.size() != c.n) throw LengthMismatch("received word length != n");

    MrbContext ctx;
    const std::vector<double> alpha = confidences(sw);
    const BitVector y = hard_decisions(sw);

    ctx.pi1.resize(c.n);
    std::iota(ctx.pi1.begin(), ctx.pi1.end(), 0);
    std::stable_sort(ctx.pi1.begin(), ctx.pi1.end(),
                     [&](std::size_t a, std::size_t b) { return alpha[a] > alpha[b]; });

    Systematized sys = to_systematic(c.G.permute_cols(ctx.pi1));
    ctx.pi2 = std::move(sys.col_perm);
    ctx.g_tilde = std::move(sys.g_sys);

    ctx.perm.resize(c.n);
    ctx.y_tilde = BitVector(c.n);
    ctx.alpha_tilde.resize(c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
        ctx.perm[i] = ctx.pi1[ctx.pi2[i]];
        ctx.y_tilde.set(i, y.get(ctx.perm[i]));
        ctx.alpha_tilde[i] = alpha[ctx.perm[i]];
    }
    return ctx;
}

double whd(const BitVector& c_hat, const BitVector& y, std::span<const double> alpha)
{
    if (c_hat.size() != y.size() || alpha.size() != y.size())
        throw LengthMismatch("whd operands disagree in length");
    double acc = 0.0;
    auto cw = c_hat.words();
    auto yw = y.words();
    for (std::size_t w = 0; w < cw.size(); ++w) {
        std::uint64_t diff = cw[w] ^ yw[w];
        while (diff) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(diff));
            acc += alpha[w * 64 + b];
            diff &= diff - 1;
        }
    }
    return acc;
}

OsdOutcome osd_decode(const LinearCode& c, const SoftWord& sw, const OsdConfig& cfg)
{
    if (cfg.max_teps < 1) throw std::invalid_argument("max_teps must be >= 1");

    const MrbContext ctx = prepare_mrb(c, sw);
    const std::size_t k = c.k, n = c.n, p = n - k;
    const std::size_t pw = (p + 63) / 64;

    // Parity parts of the g_tilde rows, repacked to start at bit 0.
    std::vector<std::uint64_t> prow(k * pw, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < p; ++j)
            if (ctx.g_tilde.get(i, k + j))
                prow[i * pw + (j >> 6)] |= std::uint64_t{1} << (j & 63);

    std::vector<std::uint64_t> par_hd(pw, 0);  // hard decisions on parity positions
    std::vector<double> alpha_par(p);
    for (std::size_t j = 0; j < p; ++j) {
        if (ctx.y_tilde.get(k + j)) par_hd[j >> 6] |= std::uint64_t{1} << (j & 63);
        alpha_par[j] = ctx.alpha_tilde[k + j];
    }

    // Order-0 re-encoding of the basis hard decisions; diff tracks the parity
    // disagreement of the current candidate against the hard decisions.
    std::vector<std::uint64_t> diff = par_hd;
    for (std::size_t i = 0; i < k; ++i) {
        if (!ctx.y_tilde.get(i)) continue;
        for (std::size_t t = 0; t < pw; ++t) diff[t] ^= prow[i * pw + t];
    }

    auto parity_mismatch_sum = [&](const std::vector<std::uint64_t>& d) {
        double acc = 0.0;
        for (std::size_t t = 0; t < pw; ++t) {
            std::uint64_t x = d[t];
            while (x) {
                acc += alpha_par[t * 64 + static_cast<unsigned>(std::countr_zero(x))];
                x &= x - 1;
            }
        }
        return acc;
    };

    double best = parity_mismatch_sum(diff);
    std::vector<std::size_t> best_support;
    std::vector<std::uint64_t> best_diff = diff;

    // Prefix sums of the sorted basis confidences: lower bound on the basis
    // part of the distance for any weight-w pattern.
    std::vector<double> asc(ctx.alpha_tilde.begin(), ctx.alpha_tilde.begin() + k);
    std::sort(asc.begin(), asc.end());
    std::vector<double> lb(k + 1, 0.0);
    for (std::size_t w = 0; w < k; ++w) lb[w + 1] = lb[w] + asc[w];

    // Matching floor for the parity side: any diff of weight wt costs at
    // least the sum of the wt smallest parity confidences. Screens most
    // candidates before the per-bit evaluation.
    std::vector<double> par_asc(alpha_par);
    std::sort(par_asc.begin(), par_asc.end());
    std::vector<double> par_floor(p + 1, 0.0);
    for (std::size_t j = 0; j < p; ++j) par_floor[j + 1] = par_floor[j] + par_asc[j];
    auto diff_weight = [&](const std::vector<std::uint64_t>& d) {
        std::size_t wt = 0;
        for (std::size_t t = 0; t < pw; ++t) wt += static_cast<std::size_t>(std::popcount(d[t]));
        return wt;
    };

    OsdOutcome out;
    out.teps_processed = 1;  // the zero pattern above
    bool certified = false, capped = false;

    // In reliability order the enumeration below runs over reversed basis
    // positions, so each weight class starts at the least-reliable indices.
    std::vector<std::size_t> pos_of(k);
    for (std::size_t i = 0; i < k; ++i)
        pos_of[i] = cfg.tep_order == TepOrder::lex ? i : k - 1 - i;
    std::vector<std::uint64_t> prow_ord(k * pw);
    std::vector<double> alpha_ord(k);
    for (std::size_t i = 0; i < k; ++i) {
        alpha_ord[i] = ctx.alpha_tilde[pos_of[i]];
        std::copy_n(prow.begin() + static_cast<std::ptrdiff_t>(pos_of[i] * pw), pw,
                    prow_ord.begin() + static_cast<std::ptrdiff_t>(i * pw));
    }

    // Enumeration with an incremental parity diff. The basis sum rides along
    // incrementally; a candidate only dethrones the incumbent after an exact
    // re-evaluation, so accumulated float drift (bounded by a slack well
    // under any generic distance gap) cannot corrupt the result.
    std::vector<std::size_t> support;
    std::vector<std::uint64_t> diff_w(pw);
    const unsigned maxw = static_cast<unsigned>(std::min<std::size_t>(cfg.order, k));
    for (unsigned w = 1; w <= maxw && !capped; ++w) {
        if (cfg.early_stop && lb[w] > best) {
            certified = true;
            break;
        }
        support.resize(w);
        for (unsigned i = 0; i < w; ++i) support[i] = i;

        // Exact baseline for this weight class.
        diff_w = diff;
        double basis_sum = 0.0;
        for (std::size_t idx : support) {
            for (std::size_t t = 0; t < pw; ++t) diff_w[t] ^= prow_ord[idx * pw + t];
            basis_sum += alpha_ord[idx];
        }
        const double slack = 1e-9 * (1.0 + best);

        for (;;) {
            if (out.teps_processed >= cfg.max_teps) {
                capped = true;
                break;
            }
            ++out.teps_processed;
            if (basis_sum < best + slack &&
                basis_sum + par_floor[diff_weight(diff_w)] < best + slack) {
                const double total = basis_sum + parity_mismatch_sum(diff_w);
                if (total < best + slack) {
                    // Exact re-evaluation before accepting.
                    double exact = 0.0;
                    for (std::size_t idx : support) exact += alpha_ord[idx];
                    exact += parity_mismatch_sum(diff_w);
                    if (exact < best) {
                        best = exact;
                        best_support = support;
                        best_diff = diff_w;
                    }
                }
            }

            // Lexicographic successor; the common case bumps only the last
            // index.
            const std::size_t last = support[w - 1];
            if (last + 1 < k) {
                support[w - 1] = last + 1;
                for (std::size_t t = 0; t < pw; ++t)
                    diff_w[t] ^= prow_ord[last * pw + t] ^ prow_ord[(last + 1) * pw + t];
                basis_sum += alpha_ord[last + 1] - alpha_ord[last];
                continue;
            }
            std::size_t i = w;
            while (i > 0 && support[i - 1] == k - w + (i - 1)) --i;
            if (i == 0) break;  // class exhausted
            // Remove the changed tail, re-add the reset run.
            for (std::size_t j = i - 1; j < w; ++j) {
                const std::size_t idx = support[j];
                for (std::size_t t = 0; t < pw; ++t) diff_w[t] ^= prow_ord[idx * pw + t];
                basis_sum -= alpha_ord[idx];
            }
            ++support[i - 1];
            for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
            for (std::size_t j = i - 1; j < w; ++j) {
                const std::size_t idx = support[j];
                for (std::size_t t = 0; t < pw; ++t) diff_w[t] ^= prow_ord[idx * pw + t];
                basis_sum += alpha_ord[idx];
            }
        }
    }

    if (!capped && !certified && cfg.order >= k) certified = true;  // exhausted the codebook
    out.ml_certified = certified;

    // Rebuild the winning candidate and undo the permutations.
    BitVector ctilde(n);
    for (std::size_t i = 0; i < k; ++i) ctilde.set(i, ctx.y_tilde.get(i));
    for (std::size_t idx : best_support) ctilde.flip(pos_of[idx]);
    for (std::size_t j = 0; j < p; ++j) {
        const bool mismatch = (best_diff[j >> 6] >> (j & 63)) & 1u;
        ctilde.set(k + j, mismatch != ctx.y_tilde.get(k + j));
    }

    out.c_hat = BitVector(n);
    for (std::size_t i = 0; i < n; ++i) out.c_hat.set(ctx.perm[i], ctilde.get(i));

    if (mul_mat_vecT(c.H, out.c_hat).any())
        throw std::logic_error("OSD produced a non-codeword");
    out.whd = whd(out.c_hat, hard_decisions(sw), confidences(sw));
    return out;
}

bool ml_lower_bound_check(const BitVector& c_true, const OsdOutcome& outcome, const SoftWord& sw)
{
    if (outcome.c_hat == c_true) return false;
    const BitVector y = hard_decisions(sw);
    const std::vector<double> alpha = confidences(sw);
    return whd(outcome.c_hat, y, alpha) <= whd(c_true, y, alpha);
}

std::uint64_t tep_iterate(std::size_t k, unsigned order,
                          const std::function<bool(std::span<const std::size_t>)>& visit)
{
    return detail::for_each_tep(k, order, visit);
}

BpOutcome sum_product_decode(const LinearCode& c, const SoftWord& sw, unsigned max_iters)
{
    if (sw.r.size() != c.n) throw LengthMismatch("received word length != n");
    constexpr double kClamp = 30.0;

    // Edge layout per check row.
    const std::size_t m = c.H.rows();
    std::vector<std::vector<std::size_t>> check_vars(m);
    std::size_t edges = 0;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t v = 0; v < c.n; ++v)
            if (c.H.get(r, v)) check_vars[r].push_back(v);
        edges += check_vars[r].size();
    }
    std::vector<std::size_t> edge_base(m + 1, 0);
    for (std::size_t r = 0; r < m; ++r) edge_base[r + 1] = edge_base[r] + check_vars[r].size();

    const std::vector<double> lam = llr(sw);
    std::vector<double> v2c(edges), c2v(edges, 0.0), total(c.n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t e = 0; e < check_vars[r].size(); ++e)
            v2c[edge_base[r] + e] = std::clamp(lam[check_vars[r][e]], -kClamp, kClamp);

    BpOutcome out;
    out.c_hat = BitVector(c.n);
    std::vector<double> fwd, bwd;

    for (unsigned iter = 1; iter <= max_iters; ++iter) {
        // Check update, forward-backward tanh products (no division).
        for (std::size_t r = 0; r < m; ++r) {
            const std::size_t deg = check_vars[r].size();
            if (deg == 0) continue;
            fwd.assign(deg, 1.0);
            bwd.assign(deg, 1.0);
            for (std::size_t e = 0; e + 1 < deg; ++e)
                fwd[e + 1] = fwd[e] * std::tanh(0.5 * v2c[edge_base[r] + e]);
            for (std::size_t e = deg; e-- > 1;)
                bwd[e - 1] = bwd[e] * std::tanh(0.5 * v2c[edge_base[r] + e]);
            for (std::size_t e = 0; e < deg; ++e) {
                const double prod = fwd[e] * bwd[e];
                c2v[edge_base[r] + e] = std::clamp(2.0 * std::atanh(prod), -kClamp, kClamp);
            }
        }

        // Variable update and tentative decisions.
        for (std::size_t v = 0; v < c.n; ++v) total[v] = lam[v];
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t e = 0; e < check_vars[r].size(); ++e)
                total[check_vars[r][e]] += c2v[edge_base[r] + e];
        for (std::size_t v = 0; v < c.n; ++v) out.c_hat.set(v, total[v] >= 0.0);
        out.iters = iter;

        if (!mul_mat_vecT(c.H, out.c_hat).any()) {
            out.converged = true;
            return out;
        }
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t e = 0; e < check_vars[r].size(); ++e) {
                const std::size_t v = check_vars[r][e];
                v2c[edge_base[r] + e] =
                    std::clamp(total[v] - c2v[edge_base[r] + e], -kClamp, kClamp);
            }
    }
    return out;
}

}  // namespace codebench
