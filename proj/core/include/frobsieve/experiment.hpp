#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frobsieve/config.hpp"
#include "frobsieve/report.hpp"
#include "frobsieve/sieve.hpp"

namespace frobsieve {

/// Sieve reports at one checkpoint. `raw_z` is what the z-policy gives;
/// the window uses max(raw_z, kMinWindowZ). Version 1 is absent when its
/// max(A) <= e^P precondition fails.
struct CheckpointSieve {
    u64 x;
    double raw_z;
    std::optional<SieveReport> v1;
    SieveReport v2;
};

struct ExperimentResult {
    MatchResult matches;
    GrowthSeries growth;
    std::vector<CheckpointSieve> sieve;
    std::vector<std::filesystem::path> files;  // artifacts written, in order
    bool cache_hit_curve1 = false;
    bool cache_hit_curve2 = false;
    std::string summary;  // text also written to summary.txt
};

/// Traces for both curves up to config.x_max (through the cache when
/// configured).
MatchResult compute_matches(const ExperimentConfig& config, bool* hit1 = nullptr, bool* hit2 = nullptr);

std::vector<CheckpointSieve> sieve_at_checkpoints(const MatchResult& matches, const ExperimentConfig& config);

std::string sieve_reports_csv(const std::vector<CheckpointSieve>& sieve);

/// Writes matches.csv, growth.csv, sieve_reports.csv, growth.svg and
/// summary.txt under out_dir. File contents depend only on the
/// configuration's mathematical content, never on threads or cache state.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace frobsieve
