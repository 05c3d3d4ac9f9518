#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codebench/code.hpp"
#include "codebench/decode_awgn.hpp"

namespace codebench {

enum class ChannelKind { bec, awgn };
enum class DecoderMode { bec_ml, bec_peel, awgn_osd, awgn_bp };

/// One Monte Carlo sweep: per grid point, trial i uses RngStream
/// (master_seed, i), so the records are independent of worker count and
/// scheduling. A trial stops counting once target_errors word errors have
/// accumulated in trial-index order, or at max_trials.
struct SweepSpec {
    LinearCode code;
    /// When set, the code is reconstructed at each grid point from the
    /// channel parameter (Polar codes are designed at the operating point).
    std::function<LinearCode(double)> rebuild;

    ChannelKind channel = ChannelKind::bec;
    std::vector<double> grid;  // eps values or Eb/N0 dB values, ascending

    std::uint64_t target_errors = 100;
    std::uint64_t max_trials = 100'000'000;
    std::uint64_t master_seed = 1;

    DecoderMode decoder = DecoderMode::bec_ml;
    OsdConfig osd;
    unsigned bp_iters = 50;

    unsigned jobs = 0;  // 0 = hardware concurrency
};

struct SimRecord {
    double channel_param = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t word_errors = 0;
    double wer = 0.0;
    std::uint64_t ml_lb_errors = 0;       // errors an ML decoder would share
    std::optional<double> mean_teps;      // OSD only
    double wall_seconds = 0.0;            // diagnostic, not reproducible
    bool partial = false;                 // max_trials hit before target_errors
};

/// Field-wise equality with wall_seconds excluded (the reproducibility
/// contract covers everything else).
bool stats_equal(const SimRecord& a, const SimRecord& b);

std::vector<SimRecord> run_sweep(const SweepSpec& spec,
                                 const std::function<void(const SimRecord&)>& on_point = {});

struct WilsonInterval {
    double lo = 0.0, hi = 1.0;
};
/// Wilson score interval for a binomial proportion.
WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double confidence);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV with a leading '# key = value' metadata block and the header row
/// param,trials,errors,wer,ml_lb_errors,mean_teps,seconds. Numeric fields
/// round-trip exactly.
void save_results(const std::string& path, std::span<const SimRecord> records,
                  const Metadata& metadata);

struct ResultsFile {
    std::vector<SimRecord> records;
    Metadata metadata;
};
ResultsFile load_results(const std::string& path);

std::string format_double(double v);  // shortest exact round-trip form

}  // namespace codebench
