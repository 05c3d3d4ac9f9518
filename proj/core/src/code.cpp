#include "codebench/code.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace codebench {

namespace {

bool is_zero_product(const BitMatrix& g, const BitMatrix& h)
{
    // G H^t = 0 via per-pair AND/popcount parity.
    for (std::size_t i = 0; i < g.rows(); ++i) {
        auto gi = g.row_words(i);
        for (std::size_t j = 0; j < h.rows(); ++j) {
            auto hj = h.row_words(j);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < gi.size(); ++w) acc ^= gi[w] & hj[w];
            if (std::popcount(acc) & 1) return false;
        }
    }
    return true;
}

}  // namespace

void validate_code(const LinearCode& c)
{
    // k = n (a rate-1 code with an empty parity matrix) is allowed so that
    // full-selection constructions stay representable.
    if (c.k < 1 || c.k > c.n) throw std::invalid_argument("code requires 1 <= k <= n");
    if (c.G.rows() != c.k || c.G.cols() != c.n) throw std::invalid_argument("G shape mismatch");
    if (c.H.cols() != c.n) throw std::invalid_argument("H shape mismatch");
    if (rank_of(c.G) != c.k) throw RankDeficient("G is rank deficient");
    if (rank_of(c.H) != c.n - c.k) throw std::invalid_argument("rank(H) != n - k");
    if (!is_zero_product(c.G, c.H)) throw std::invalid_argument("G H^t != 0");
}

LinearCode make_linear_code(BitMatrix g, std::string family, std::string label,
                            std::uint64_t seed, std::string design,
                            std::optional<std::size_t> d_min_hint, std::optional<BitMatrix> h)
{
    LinearCode c;
    c.n = g.cols();
    c.k = g.rows();
    c.G = std::move(g);
    if (h)
        c.H = std::move(*h);
    else
        c.H = c.k < c.n ? nullspace_basis(c.G) : BitMatrix(0, c.n);
    c.family = std::move(family);
    c.label = std::move(label);
    c.seed = seed;
    c.design = std::move(design);

    c.d_min = d_min_hint;
    if (c.k <= 14) {
        const std::size_t d = brute_force_min_distance(c.G);
        if (d_min_hint && *d_min_hint != d)
            throw std::invalid_argument("d_min hint contradicts exhaustive minimum distance");
        c.d_min = d;
    }

    validate_code(c);
    return c;
}

BitVector encode(const LinearCode& c, const BitVector& message)
{
    if (message.size() != c.k) throw LengthMismatch("message length != k");
    return mul_vec_mat(message, c.G);
}

LinearCode extend_code(const LinearCode& c)
{
    BitMatrix g(c.k, c.n + 1);
    for (std::size_t i = 0; i < c.k; ++i) {
        for (std::size_t j = 0; j < c.n; ++j)
            if (c.G.get(i, j)) g.set(i, j, true);
        g.set(i, c.n, c.G.row_weight(i) & 1);
    }
    std::optional<std::size_t> d;
    if (c.d_min) d = *c.d_min % 2 ? *c.d_min + 1 : *c.d_min;
    return make_linear_code(std::move(g), c.family, c.label + "+ext", c.seed,
                            c.design.empty() ? "extended" : c.design + " extended", d);
}

std::size_t brute_force_min_distance(const BitMatrix& g)
{
    const std::size_t k = g.rows();
    if (k > 24) throw std::invalid_argument("brute-force distance limited to k <= 24");

    // Gray-code walk so each step is one row XOR.
    BitVector cw(g.cols());
    std::size_t best = g.cols() + 1;
    std::uint64_t prev = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        const std::uint64_t gray = m ^ (m >> 1);
        const std::uint64_t diff = gray ^ prev;
        cw.xor_with(g.row(static_cast<std::size_t>(std::countr_zero(diff))));
        prev = gray;
        best = std::min(best, cw.weight());
    }
    return best;
}

double code_rate(const LinearCode& c) { return static_cast<double>(c.k) / static_cast<double>(c.n); }

void save_code(const LinearCode& c, const std::string& path)
{
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open code file for writing: " + path);
    f << "codebench-code v1\n";
    f << "family: " << c.family << "\n";
    f << "label: " << c.label << "\n";
    f << "n: " << c.n << "\n";
    f << "k: " << c.k << "\n";
    f << "seed: " << c.seed << "\n";
    f << "design: " << c.design << "\n";
    f << "dmin: " << (c.d_min ? std::to_string(*c.d_min) : "-") << "\n";
    f << "G: " << c.G.rows() << "\n";
    for (std::size_t i = 0; i < c.G.rows(); ++i) f << c.G.row(i).to_hex() << "\n";
    f << "H: " << c.H.rows() << "\n";
    for (std::size_t i = 0; i < c.H.rows(); ++i) f << c.H.row(i).to_hex() << "\n";
    f << "end\n";
    if (!f) throw std::runtime_error("write failed: " + path);
}

namespace {

std::string expect_field(std::istream& in, const std::string& key)
{
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("truncated code file");
    if (line.rfind(key, 0) != 0) throw std::runtime_error("expected '" + key + "' in code file");
    std::string v = line.substr(key.size());
    if (!v.empty() && v.front() == ' ') v.erase(0, 1);
    return v;
}

}  // namespace

LinearCode load_code(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open code file: " + path);
    std::string line;
    std::getline(f, line);
    if (line != "codebench-code v1") throw std::runtime_error("unrecognized code file header");

    LinearCode c;
    c.family = expect_field(f, "family:");
    c.label = expect_field(f, "label:");
    c.n = std::stoull(expect_field(f, "n:"));
    c.k = std::stoull(expect_field(f, "k:"));
    c.seed = std::stoull(expect_field(f, "seed:"));
    c.design = expect_field(f, "design:");
    const std::string dmin = expect_field(f, "dmin:");
    if (dmin != "-") c.d_min = std::stoull(dmin);

    const std::size_t grows = std::stoull(expect_field(f, "G:"));
    c.G = BitMatrix(grows, c.n);
    for (std::size_t i = 0; i < grows; ++i) {
        if (!std::getline(f, line)) throw std::runtime_error("truncated G rows");
        c.G.set_row(i, BitVector::from_hex(line, c.n));
    }
    const std::size_t hrows = std::stoull(expect_field(f, "H:"));
    c.H = BitMatrix(hrows, c.n);
    for (std::size_t i = 0; i < hrows; ++i) {
        if (!std::getline(f, line)) throw std::runtime_error("truncated H rows");
        c.H.set_row(i, BitVector::from_hex(line, c.n));
    }
    if (expect_field(f, "end") != "") throw std::runtime_error("trailing content in code file");

    validate_code(c);
    return c;
}

}  // namespace codebench
