// Command-line front end: code construction, word-error-rate sweeps, bound
// curves, and plot-data merging.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "codebench/bounds.hpp"
#include "codebench/channel.hpp"
#include "codebench/code.hpp"
#include "codebench/codebook.hpp"
#include "codebench/decode_bec.hpp"
#include "codebench/simkit.hpp"
#include "codebench/version.hpp"

namespace {

using namespace codebench;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double from = 0, step = 0, to = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(text);
        if (!(ss >> from >> c1 >> step >> c2 >> to) || c1 != ':' || c2 != ':')
            throw UsageError("grid must be 'from:step:to' or a comma list: " + text);
        if (!(step > 0) || to < from) throw UsageError("grid needs step > 0 and to >= from");
        const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) out.push_back(from + static_cast<double>(i) * step);
        return out;
    }
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (!field.empty()) out.push_back(std::stod(field));
    }
    if (out.empty()) throw UsageError("empty grid: " + text);
    return out;
}

bool parse_bool(const std::string& v, const std::string& key)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("boolean expected for '" + key + "', got '" + v + "'");
}

// ---------------------------------------------------------------------------
// Flat key-value config file with [sections].

using ConfigMap = std::map<std::string, std::string>;  // "section.key" -> value

ConfigMap parse_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open config file: " + path);
    ConfigMap cfg;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw UsageError("bad section header at line " + std::to_string(lineno));
            section = line.substr(1, line.size() - 2);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty())
            throw UsageError("expected 'key = value' inside a section at line " + std::to_string(lineno));
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        trim(key);
        trim(value);
        if (key.empty()) throw UsageError("empty key at line " + std::to_string(lineno));
        const std::string full = section + "." + key;
        if (cfg.count(full)) throw UsageError("duplicate key '" + full + "'");
        cfg[full] = value;
    }
    return cfg;
}

const std::set<std::string> kKnownKeys = {
    "code.family", "code.file",   "code.ell",    "code.k",       "code.m",
    "code.t",      "code.extend", "code.n",      "code.seed",    "code.crc",
    "code.rebuild",
    "channel.kind", "channel.grid",
    "decoder.mode", "decoder.order", "decoder.max_teps", "decoder.early_stop", "decoder.iters",
    "sim.target_errors", "sim.max_trials", "sim.seed", "sim.jobs", "sim.out",
};

void reject_unknown_keys(const ConfigMap& cfg)
{
    for (const auto& [key, value] : cfg) {
        (void)value;
        if (!kKnownKeys.count(key)) throw UsageError("unknown config key '" + key + "'");
    }
}

std::string cfg_get(const ConfigMap& cfg, const std::string& key, const std::string& fallback = {})
{
    const auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

// ---------------------------------------------------------------------------
// Construction shared by `construct` and `simulate`.

struct CodeRecipe {
    std::string family;      // rm | polar | bch | ldpc | file
    std::string file;
    unsigned ell = 0;
    std::size_t k = 0;
    unsigned m = 0, t = 0;
    bool extend = false;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool crc = false;        // ccitt16
    bool rebuild = false;    // polar: reconstruct per grid point
    // polar design point for `construct`
    std::optional<double> design_eps;
    std::optional<double> design_sigma;
    std::optional<double> design_ebn0;
};

LinearCode build_polar_at(const CodeRecipe& r, ChannelKind kind, double param)
{
    std::ostringstream note;
    std::vector<double> rel;
    if (kind == ChannelKind::bec) {
        rel = polar_bec_reliabilities(r.ell, param);
        note << "bec_eps=" << param;
    } else {
        const double reff =
            (static_cast<double>(r.k) - (r.crc ? 16.0 : 0.0)) / static_cast<double>(1u << r.ell);
        const double sigma = sigma_from_ebn0(param, reff);
        rel = polar_awgn_reliabilities(r.ell, sigma);
        note << "awgn_sigma=" << sigma;
    }
    return build_polar(r.ell, r.k, rel, note.str());
}

LinearCode build_fixed_code(const CodeRecipe& r)
{
    LinearCode c;
    if (r.family == "file" || !r.file.empty()) {
        c = load_code(r.file);
    } else if (r.family == "rm") {
        c = build_rm(r.ell, r.k);
    } else if (r.family == "polar") {
        std::ostringstream note;
        std::vector<double> rel;
        if (r.design_eps) {
            rel = polar_bec_reliabilities(r.ell, *r.design_eps);
            note << "bec_eps=" << *r.design_eps;
        } else {
            double sigma = 0;
            if (r.design_sigma)
                sigma = *r.design_sigma;
            else if (r.design_ebn0)
                sigma = sigma_from_ebn0(*r.design_ebn0,
                                        static_cast<double>(r.k) / static_cast<double>(1u << r.ell));
            else
                throw UsageError("polar needs --design-eps, --design-sigma, or --design-ebn0");
            rel = polar_awgn_reliabilities(r.ell, sigma);
            note << "awgn_sigma=" << sigma;
        }
        c = build_polar(r.ell, r.k, rel, note.str());
    } else if (r.family == "bch") {
        c = build_bch(r.m, r.t);
        if (r.extend) c = extend_code(c);
    } else if (r.family == "ldpc") {
        c = build_ldpc_regular(r.n, r.seed);
    } else {
        throw UsageError("unknown code family '" + r.family + "'");
    }
    if (r.crc) c = crc_concat(c, crc_ccitt16());
    return c;
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const CodeRecipe& recipe, const std::string& out_path)
{
    const LinearCode code = build_fixed_code(recipe);
    save_code(code, out_path);
    std::printf("n=%zu k=%zu label=%s -> %s\n", code.n, code.k, code.label.c_str(),
                out_path.c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    std::string config_path;
    std::optional<std::string> grid, crc, out;
    std::optional<std::uint64_t> seed, target_errors, max_trials;
    std::optional<unsigned> jobs;
};

int cmd_simulate(const SimulateArgs& args)
{
    ConfigMap cfg = args.config_path.empty() ? ConfigMap{} : parse_config_file(args.config_path);
    reject_unknown_keys(cfg);

    // CLI flags override file values.
    if (args.grid) cfg["channel.grid"] = *args.grid;
    if (args.crc) cfg["code.crc"] = *args.crc;
    if (args.out) cfg["sim.out"] = *args.out;
    if (args.seed) cfg["sim.seed"] = std::to_string(*args.seed);
    if (args.target_errors) cfg["sim.target_errors"] = std::to_string(*args.target_errors);
    if (args.max_trials) cfg["sim.max_trials"] = std::to_string(*args.max_trials);
    if (args.jobs) cfg["sim.jobs"] = std::to_string(*args.jobs);

    CodeRecipe recipe;
    recipe.family = cfg_get(cfg, "code.family", cfg.count("code.file") ? "file" : "");
    if (recipe.family.empty()) throw UsageError("config needs code.family or code.file");
    recipe.file = cfg_get(cfg, "code.file");
    if (cfg.count("code.ell")) recipe.ell = static_cast<unsigned>(std::stoul(cfg.at("code.ell")));
    if (cfg.count("code.k")) recipe.k = std::stoull(cfg.at("code.k"));
    if (cfg.count("code.m")) recipe.m = static_cast<unsigned>(std::stoul(cfg.at("code.m")));
    if (cfg.count("code.t")) recipe.t = static_cast<unsigned>(std::stoul(cfg.at("code.t")));
    if (cfg.count("code.extend")) recipe.extend = parse_bool(cfg.at("code.extend"), "code.extend");
    if (cfg.count("code.n")) recipe.n = std::stoull(cfg.at("code.n"));
    if (cfg.count("code.seed")) recipe.seed = std::stoull(cfg.at("code.seed"));

    const std::string crc = cfg_get(cfg, "code.crc", "none");
    if (crc == "ccitt16")
        recipe.crc = true;
    else if (crc != "none")
        throw UsageError("code.crc must be 'none' or 'ccitt16'");

    const std::string kind_s = cfg_get(cfg, "channel.kind");
    if (kind_s != "bec" && kind_s != "awgn") throw UsageError("channel.kind must be bec or awgn");
    const ChannelKind kind = kind_s == "bec" ? ChannelKind::bec : ChannelKind::awgn;

    if (!cfg.count("channel.grid")) throw UsageError("config needs channel.grid");
    std::vector<double> grid = parse_grid(cfg.at("channel.grid"));
    std::sort(grid.begin(), grid.end());

    const std::string default_mode = kind == ChannelKind::bec ? "ml" : "osd";
    const std::string mode_s = cfg_get(cfg, "decoder.mode", default_mode);
    DecoderMode mode;
    if (mode_s == "ml")
        mode = DecoderMode::bec_ml;
    else if (mode_s == "peel")
        mode = DecoderMode::bec_peel;
    else if (mode_s == "osd")
        mode = DecoderMode::awgn_osd;
    else if (mode_s == "bp")
        mode = DecoderMode::awgn_bp;
    else
        throw UsageError("decoder.mode must be ml, peel, osd, or bp");
    const bool mode_is_bec = mode == DecoderMode::bec_ml || mode == DecoderMode::bec_peel;
    if (mode_is_bec != (kind == ChannelKind::bec))
        throw UsageError("decoder.mode '" + mode_s + "' does not fit channel.kind '" + kind_s + "'");

    SweepSpec spec;
    spec.channel = kind;
    spec.grid = std::move(grid);
    spec.decoder = mode;
    spec.osd.order = static_cast<unsigned>(std::stoul(cfg_get(cfg, "decoder.order", "2")));
    spec.osd.max_teps = std::stoull(cfg_get(cfg, "decoder.max_teps", "1000000"));
    spec.osd.early_stop = parse_bool(cfg_get(cfg, "decoder.early_stop", "true"), "decoder.early_stop");
    spec.bp_iters = static_cast<unsigned>(std::stoul(cfg_get(cfg, "decoder.iters", "50")));
    spec.target_errors = std::stoull(cfg_get(cfg, "sim.target_errors", "100"));
    spec.max_trials = std::stoull(cfg_get(cfg, "sim.max_trials", "100000000"));
    spec.master_seed = std::stoull(cfg_get(cfg, "sim.seed", "1"));
    spec.jobs = static_cast<unsigned>(std::stoul(cfg_get(cfg, "sim.jobs", "0")));

    // Polar codes are redesigned at every grid point unless disabled.
    const bool rebuild =
        recipe.family == "polar" && parse_bool(cfg_get(cfg, "code.rebuild", "true"), "code.rebuild");
    if (rebuild) {
        if (recipe.ell == 0 || recipe.k == 0) throw UsageError("polar needs code.ell and code.k");
        CodeRecipe r = recipe;
        spec.rebuild = [r, kind](double param) {
            LinearCode c = build_polar_at(r, kind, param);
            if (r.crc) c = crc_concat(c, crc_ccitt16());
            return c;
        };
        spec.code = spec.rebuild(spec.grid.front());
    } else {
        if (recipe.family == "polar" && !recipe.design_eps && !recipe.design_sigma &&
            !recipe.design_ebn0 && recipe.file.empty()) {
            // Fixed polar without an explicit design point: design at the
            // first grid value.
            spec.code = build_polar_at(recipe, kind, spec.grid.front());
            if (recipe.crc) spec.code = crc_concat(spec.code, crc_ccitt16());
        } else {
            spec.code = build_fixed_code(recipe);
        }
    }

    const std::string out_path = cfg_get(cfg, "sim.out", "results.csv");

    // Effective config echo; the same lines go into the CSV metadata.
    Metadata meta;
    meta.emplace_back("type", "simulation");
    meta.emplace_back("version", kVersion);
    meta.emplace_back("channel", kind_s);
    meta.emplace_back("decoder", mode_s);
    meta.emplace_back("label", spec.code.label + "/" + mode_s);
    meta.emplace_back("code_label", spec.code.label);
    meta.emplace_back("code_family", spec.code.family);
    meta.emplace_back("n", std::to_string(spec.code.n));
    meta.emplace_back("k", std::to_string(spec.code.k));
    meta.emplace_back("rate", format_double(code_rate(spec.code)));
    meta.emplace_back("rebuild_per_point", rebuild ? "true" : "false");
    meta.emplace_back("target_errors", std::to_string(spec.target_errors));
    meta.emplace_back("max_trials", std::to_string(spec.max_trials));
    meta.emplace_back("seed", std::to_string(spec.master_seed));
    meta.emplace_back("jobs", std::to_string(spec.jobs));
    if (mode == DecoderMode::awgn_osd) {
        meta.emplace_back("osd_order", std::to_string(spec.osd.order));
        meta.emplace_back("osd_max_teps", std::to_string(spec.osd.max_teps));
        meta.emplace_back("osd_early_stop", spec.osd.early_stop ? "true" : "false");
    }
    if (mode == DecoderMode::awgn_bp) meta.emplace_back("bp_iters", std::to_string(spec.bp_iters));
    {
        std::ostringstream gs;
        for (std::size_t i = 0; i < spec.grid.size(); ++i)
            gs << (i ? "," : "") << format_double(spec.grid[i]);
        meta.emplace_back("grid", gs.str());
    }
    for (const auto& [key, value] : cfg) meta.emplace_back("cfg." + key, value);

    for (const auto& [key, value] : meta) std::printf("# %s = %s\n", key.c_str(), value.c_str());

    const std::vector<SimRecord> records = run_sweep(spec, [&](const SimRecord& r) {
        std::printf("param=%-8g trials=%-10llu errors=%-6llu wer=%-12.5g ml_lb=%-6llu%s t=%.1fs\n",
                    r.channel_param, static_cast<unsigned long long>(r.trials),
                    static_cast<unsigned long long>(r.word_errors), r.wer,
                    static_cast<unsigned long long>(r.ml_lb_errors),
                    r.partial ? " PARTIAL" : "", r.wall_seconds);
        std::fflush(stdout);
    });

    save_results(out_path, records, meta);
    std::printf("wrote %s\n", out_path.c_str());

    for (const SimRecord& r : records)
        if (r.partial) return 3;
    return 0;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const std::string& which, std::size_t n, double rate, const std::string& grid_s,
               const std::string& out_path)
{
    const std::vector<double> grid = parse_grid(grid_s);
    std::vector<BoundPoint> points;
    points.reserve(grid.size());
    for (double p : grid) {
        try {
            points.push_back(which == "ppv" ? ppv_bec(n, rate, p)
                                            : shannon_sphere_bound(n, rate, p));
        } catch (const DomainError& e) {
            std::fprintf(stderr, "warning: skipping param=%g: %s\n", p, e.what());
        }
    }
    if (points.empty()) throw UsageError("no valid grid points for bound '" + which + "'");

    std::ostringstream lbl;
    lbl << points.front().bound << "(n=" << n << ",R=" << rate << ")";
    Metadata meta;
    meta.emplace_back("type", "bound");
    meta.emplace_back("version", kVersion);
    meta.emplace_back("bound", points.front().bound);
    meta.emplace_back("channel", which == "ppv" ? "bec" : "awgn");
    meta.emplace_back("n", std::to_string(n));
    meta.emplace_back("rate", format_double(rate));
    meta.emplace_back("label", lbl.str());

    std::ostringstream body;
    for (const auto& [key, value] : meta) body << "# " << key << " = " << value << "\n";
    body << "param,p_ew\n";
    for (const BoundPoint& bp : points) {
        body << format_double(bp.channel_param) << ',' << format_double(bp.p_ew) << "\n";
        if (bp.clamped)
            std::fprintf(stderr, "warning: p_ew clamped to 1 at param=%g\n", bp.channel_param);
    }

    if (out_path.empty()) {
        std::fputs(body.str().c_str(), stdout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << body.str();
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// plotdata

struct Series {
    std::string label;
    std::string channel;
    std::vector<std::pair<double, double>> points;  // (param, wer)
};

Series load_series(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    Metadata meta;
    std::string line;
    std::streampos data_start = 0;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] != '#') break;
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(1, eq - 1), value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && s.front() == ' ') s.erase(0, 1);
            while (!s.empty() && s.back() == ' ') s.pop_back();
        };
        trim(key);
        trim(value);
        meta.emplace_back(key, value);
        data_start = f.tellg();
    }
    auto get = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : meta)
            if (k == key) return v;
        return {};
    };

    Series s;
    s.label = get("label");
    s.channel = get("channel");
    const std::string type = get("type");
    if (type.empty() || s.label.empty() || s.channel.empty())
        throw UsageError("file lacks type/label/channel metadata: " + path);

    if (type == "simulation") {
        const ResultsFile rf = load_results(path);
        for (const SimRecord& r : rf.records) s.points.emplace_back(r.channel_param, r.wer);
    } else if (type == "bound") {
        f.seekg(data_start);
        std::getline(f, line);  // header
        if (line != "param,p_ew") throw UsageError("unrecognized bound file header in " + path);
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            s.points.emplace_back(std::stod(line.substr(0, comma)),
                                  std::stod(line.substr(comma + 1)));
        }
    } else {
        throw UsageError("unknown file type '" + type + "' in " + path);
    }
    return s;
}

int cmd_plotdata(const std::vector<std::string>& inputs, const std::string& out_path)
{
    std::vector<Series> series;
    series.reserve(inputs.size());
    for (const std::string& path : inputs) series.push_back(load_series(path));
    for (const Series& s : series)
        if (s.channel != series.front().channel)
            throw UsageError("cannot mix BEC and AWGN series in one plot-data file");

    std::sort(series.begin(), series.end(),
              [](const Series& a, const Series& b) { return a.label < b.label; });

    std::ostringstream body;
    body << "# type = plotdata\n# channel = " << series.front().channel << "\n";
    body << "series,param,wer\n";
    for (Series& s : series) {
        std::sort(s.points.begin(), s.points.end());
        for (const auto& [param, wer] : s.points)
            body << s.label << ',' << format_double(param) << ',' << format_double(wer) << "\n";
    }

    if (out_path.empty()) {
        std::fputs(body.str().c_str(), stdout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << body.str();
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"short-length block code word-error-rate toolkit"};
    app.set_version_flag("--version", codebench::kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    // Global flags, reachable from any subcommand.
    std::optional<std::uint64_t> g_seed;
    std::optional<unsigned> g_jobs;
    std::string g_out;
    app.add_option("--seed", g_seed, "random seed / construction seed");
    app.add_option("--jobs", g_jobs, "worker threads (0 = hardware)");
    app.add_option("--out", g_out, "output path");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and write its code file");
    construct->require_subcommand(1);
    CodeRecipe recipe;
    std::string crc_opt = "none";

    auto add_crc = [&](CLI::App* sub) {
        sub->add_option("--crc", crc_opt, "concatenate an outer CRC (none|ccitt16)");
    };
    auto* c_rm = construct->add_subcommand("rm", "Reed-Muller style row selection");
    c_rm->add_option("--ell", recipe.ell, "log2 of the block length")->required();
    c_rm->add_option("--k", recipe.k, "dimension")->required();
    add_crc(c_rm);
    auto* c_polar = construct->add_subcommand("polar", "polar code");
    c_polar->add_option("--ell", recipe.ell, "log2 of the block length")->required();
    c_polar->add_option("--k", recipe.k, "dimension")->required();
    c_polar->add_option("--design-eps", recipe.design_eps, "BEC design erasure probability");
    c_polar->add_option("--design-sigma", recipe.design_sigma, "AWGN design noise std dev");
    c_polar->add_option("--design-ebn0", recipe.design_ebn0, "AWGN design Eb/N0 [dB]");
    add_crc(c_polar);
    auto* c_bch = construct->add_subcommand("bch", "primitive narrow-sense BCH");
    c_bch->add_option("--m", recipe.m, "extension degree (n = 2^m - 1)")->required();
    c_bch->add_option("--t", recipe.t, "designed error-correction capability")->required();
    c_bch->add_flag("--extend", recipe.extend, "append an overall parity bit");
    add_crc(c_bch);
    auto* c_ldpc = construct->add_subcommand("ldpc", "regular (3,6) LDPC");
    c_ldpc->add_option("--n", recipe.n, "block length (even)")->required();
    add_crc(c_ldpc);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a word-error-rate sweep");
    SimulateArgs sim_args;
    simulate->add_option("--config", sim_args.config_path, "experiment config file")->required();
    simulate->add_option("--grid", sim_args.grid, "override channel.grid");
    simulate->add_option("--crc", sim_args.crc, "override code.crc (none|ccitt16)");
    simulate->add_option("--target-errors", sim_args.target_errors, "override sim.target_errors");
    simulate->add_option("--max-trials", sim_args.max_trials, "override sim.max_trials");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "finite-length reference curves");
    bounds->require_subcommand(1);
    std::size_t b_n = 256;
    double b_rate = 0.5;
    std::string b_eps, b_ebn0;
    auto* b_ppv = bounds->add_subcommand("ppv", "BEC normal approximation");
    b_ppv->add_option("--n", b_n, "block length")->required();
    b_ppv->add_option("--R", b_rate, "code rate")->required();
    b_ppv->add_option("--eps", b_eps, "erasure probability or grid")->required();
    auto* b_sh = bounds->add_subcommand("shannon", "optimal spherical-code approximation");
    b_sh->add_option("--n", b_n, "block length")->required();
    b_sh->add_option("--R", b_rate, "code rate")->required();
    b_sh->add_option("--ebn0", b_ebn0, "Eb/N0 [dB] value or grid")->required();

    // plotdata
    auto* plotdata = app.add_subcommand("plotdata", "merge sweeps and bounds into one long CSV");
    std::vector<std::string> pd_inputs;
    plotdata->add_option("inputs", pd_inputs, "results/bounds CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*construct) {
            if (crc_opt == "ccitt16")
                recipe.crc = true;
            else if (crc_opt != "none")
                throw UsageError("--crc must be 'none' or 'ccitt16'");
            if (g_seed) recipe.seed = *g_seed;
            std::string family;
            for (auto* sub : {c_rm, c_polar, c_bch, c_ldpc})
                if (*sub) family = sub->get_name();
            recipe.family = family;
            const std::string out = g_out.empty() ? family + ".code" : g_out;
            return cmd_construct(recipe, out);
        }
        if (*simulate) {
            if (g_seed) sim_args.seed = *g_seed;
            if (g_jobs) sim_args.jobs = *g_jobs;
            if (!g_out.empty()) sim_args.out = g_out;
            return cmd_simulate(sim_args);
        }
        if (*bounds) {
            const std::string which = *b_ppv ? "ppv" : "shannon";
            return cmd_bounds(which, b_n, b_rate, which == "ppv" ? b_eps : b_ebn0, g_out);
        }
        if (*plotdata) {
            return cmd_plotdata(pd_inputs, g_out);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const codebench::InvalidDesign& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const codebench::DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
