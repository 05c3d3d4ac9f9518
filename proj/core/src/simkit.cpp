#include "codebench/simkit.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "codebench/bounds.hpp"
#include "codebench/channel.hpp"
#include "codebench/decode_bec.hpp"

namespace codebench {

namespace {

struct TrialOut {
    bool error = false;
    bool ml_lb = false;
    std::uint64_t teps = 0;
};

struct PointContext {
    const SweepSpec& spec;
    const LinearCode& code;
    double sigma = 0.0;  // AWGN only
    double eps = 0.0;    // BEC only
};

TrialOut run_trial(const PointContext& pc, std::uint64_t trial)
{
    const LinearCode& code = pc.code;
    RngStream rng(pc.spec.master_seed, trial);
    const BitVector msg = rng.next_bits(code.k);
    const BitVector cw = encode(code, msg);

    TrialOut out;
    switch (pc.spec.decoder) {
        case DecoderMode::bec_ml: {
            const BecWord y = bec_transmit(cw, pc.eps, rng);
            const ErasureVerdict v = ml_erasure_decode(code, y);
            out.error = !v.unique() || v.codeword != cw;
            // The decoder is itself ML, so its errors are ML errors.
            out.ml_lb = out.error;
            break;
        }
        case DecoderMode::bec_peel: {
            const BecWord y = bec_transmit(cw, pc.eps, rng);
            const ErasureVerdict v = peel_decode(code, y);
            out.error = !v.unique() || v.codeword != cw;
            if (out.error) out.ml_lb = !ml_erasure_decode(code, y).unique();
            break;
        }
        case DecoderMode::awgn_osd: {
            const SoftWord sw = awgn_transmit(cw, pc.sigma, rng);
            const OsdOutcome o = osd_decode(code, sw, pc.spec.osd);
            out.teps = o.teps_processed;
            out.error = o.c_hat != cw;
            if (out.error) out.ml_lb = ml_lower_bound_check(cw, o, sw);
            break;
        }
        case DecoderMode::awgn_bp: {
            const SoftWord sw = awgn_transmit(cw, pc.sigma, rng);
            const BpOutcome o = sum_product_decode(code, sw, pc.spec.bp_iters);
            out.error = !o.converged || o.c_hat != cw;
            // The distance argument applies only to codeword outputs.
            if (out.error && o.converged) {
                OsdOutcome as_osd{o.c_hat, 0.0, 0, false};
                out.ml_lb = ml_lower_bound_check(cw, as_osd, sw);
            }
            break;
        }
    }
    return out;
}

SimRecord run_point(const SweepSpec& spec, double param)
{
    const auto t0 = std::chrono::steady_clock::now();

    LinearCode rebuilt;
    const LinearCode* code = &spec.code;
    if (spec.rebuild) {
        rebuilt = spec.rebuild(param);
        code = &rebuilt;
    }

    PointContext pc{spec, *code};
    if (spec.channel == ChannelKind::bec) {
        pc.eps = param;
    } else {
        pc.sigma = sigma_from_ebn0(param, code_rate(*code));
    }

    SimRecord rec;
    rec.channel_param = param;
    std::uint64_t tep_sum = 0;

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned jobs = spec.jobs ? spec.jobs : (hw ? hw : 1);

    if (jobs <= 1) {
        for (std::uint64_t t = 0; t < spec.max_trials && rec.word_errors < spec.target_errors;
             ++t) {
            const TrialOut o = run_trial(pc, t);
            ++rec.trials;
            tep_sum += o.teps;
            if (o.error) {
                ++rec.word_errors;
                if (o.ml_lb) ++rec.ml_lb_errors;
            }
        }
    } else {
        // Fixed-size chunks evaluated in parallel, then folded in trial-index
        // order: the stopping point cannot depend on scheduling.
        const std::uint64_t chunk = std::uint64_t{64} * jobs;
        std::vector<TrialOut> slot(chunk);
        std::uint64_t base = 0;
        bool done = false;
        while (!done && base < spec.max_trials) {
            const std::uint64_t count = std::min<std::uint64_t>(chunk, spec.max_trials - base);
            std::atomic<std::uint64_t> next{0};
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (unsigned j = 0; j < jobs; ++j) {
                pool.emplace_back([&]() {
                    for (;;) {
                        const std::uint64_t i = next.fetch_add(1);
                        if (i >= count) return;
                        slot[i] = run_trial(pc, base + i);
                    }
                });
            }
            for (auto& th : pool) th.join();

            for (std::uint64_t i = 0; i < count; ++i) {
                ++rec.trials;
                tep_sum += slot[i].teps;
                if (slot[i].error) {
                    ++rec.word_errors;
                    if (slot[i].ml_lb) ++rec.ml_lb_errors;
                    if (rec.word_errors == spec.target_errors) {
                        done = true;
                        break;
                    }
                }
            }
            base += count;
        }
    }

    rec.partial = rec.word_errors < spec.target_errors;
    rec.wer = rec.trials ? static_cast<double>(rec.word_errors) / static_cast<double>(rec.trials)
                         : 0.0;
    if (spec.decoder == DecoderMode::awgn_osd && rec.trials)
        rec.mean_teps = static_cast<double>(tep_sum) / static_cast<double>(rec.trials);
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace

bool stats_equal(const SimRecord& a, const SimRecord& b)
{
    return a.channel_param == b.channel_param && a.trials == b.trials &&
           a.word_errors == b.word_errors && a.wer == b.wer &&
           a.ml_lb_errors == b.ml_lb_errors && a.mean_teps == b.mean_teps &&
           a.partial == b.partial;
}

std::vector<SimRecord> run_sweep(const SweepSpec& spec,
                                 const std::function<void(const SimRecord&)>& on_point)
{
    if (spec.target_errors < 1) throw std::invalid_argument("target_errors must be >= 1");
    if (spec.grid.empty()) throw std::invalid_argument("sweep grid is empty");
    if (!std::is_sorted(spec.grid.begin(), spec.grid.end()))
        throw std::invalid_argument("sweep grid must be ascending");

    std::vector<SimRecord> records;
    records.reserve(spec.grid.size());
    for (double param : spec.grid) {
        records.push_back(run_point(spec, param));
        if (on_point) on_point(records.back());
    }
    return records;
}

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double confidence)
{
    if (trials < 1) throw std::invalid_argument("wilson_interval needs trials >= 1");
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("confidence outside (0, 1)");
    const double z = inverse_q((1.0 - confidence) / 2.0);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double center = (p + 0.5 * z2n) / (1.0 + z2n);
    const double half = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / (1.0 + z2n);
    WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
    // The interval pins to the boundary exactly at the degenerate ratios.
    if (errors == 0) w.lo = 0.0;
    if (errors == trials) w.hi = 1.0;
    return w;
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void save_results(const std::string& path, std::span<const SimRecord> records,
                  const Metadata& metadata)
{
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open results file for writing: " + path);
    for (const auto& [key, value] : metadata) f << "# " << key << " = " << value << "\n";
    f << "param,trials,errors,wer,ml_lb_errors,mean_teps,seconds\n";
    for (const SimRecord& r : records) {
        f << format_double(r.channel_param) << ',' << r.trials << ',' << r.word_errors << ','
          << format_double(r.wer) << ',' << r.ml_lb_errors << ','
          << (r.mean_teps ? format_double(*r.mean_teps) : std::string{}) << ','
          << format_double(r.wall_seconds) << "\n";
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

ResultsFile load_results(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open results file: " + path);

    ResultsFile out;
    std::string line;
    bool header_seen = false;
    std::uint64_t target_errors = 0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            std::string value = line.substr(eq + 1);
            auto trim = [](std::string& s) {
                while (!s.empty() && s.front() == ' ') s.erase(0, 1);
                while (!s.empty() && s.back() == ' ') s.pop_back();
            };
            trim(key);
            trim(value);
            if (key == "target_errors") target_errors = std::stoull(value);
            out.metadata.emplace_back(std::move(key), std::move(value));
            continue;
        }
        if (!header_seen) {
            if (line != "param,trials,errors,wer,ml_lb_errors,mean_teps,seconds")
                throw std::runtime_error("unrecognized results header: " + line);
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        SimRecord r;
        auto next = [&]() {
            if (!std::getline(ss, field, ',')) throw std::runtime_error("short results row");
            return field;
        };
        r.channel_param = std::stod(next());
        r.trials = std::stoull(next());
        r.word_errors = std::stoull(next());
        r.wer = std::stod(next());
        r.ml_lb_errors = std::stoull(next());
        const std::string teps = next();
        if (!teps.empty()) r.mean_teps = std::stod(teps);
        std::getline(ss, field);
        r.wall_seconds = std::stod(field);
        if (target_errors) r.partial = r.word_errors < target_errors;
        out.records.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("results file has no header: " + path);
    return out;
}

}  // namespace codebench
