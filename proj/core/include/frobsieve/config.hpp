#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobsieve/elliptic.hpp"

namespace frobsieve {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    /// 1-based line number, 0 when the problem is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class ZPolicyKind { grh, uncond, fixed };

struct ZPolicy {
    ZPolicyKind kind = ZPolicyKind::grh;
    double fixed_z = 0;  // only for ZPolicyKind::fixed
    double c3 = 1.0;     // only for ZPolicyKind::uncond
};

/// Sieve parameter z the policy prescribes at x (before any clamping).
double policy_z(const ZPolicy& policy, double x);

struct ExperimentConfig {
    CurveQ curve1;
    CurveQ curve2;
    u64 x_max = 0;
    std::vector<u64> x_checkpoints;  // ascending, each <= x_max
    ZPolicy z_policy;
    std::optional<std::pair<u64, u64>> moduli;  // (q1, q2)
    std::filesystem::path cache_dir;            // empty: no caching
    unsigned threads = 1;
    TraceMethod method = TraceMethod::bsgs;
};

/// Line-oriented `key = value` text with `[curve1]`, `[curve2]` and
/// `[experiment]` sections; `#` starts a comment. Required keys: A and B in
/// both curve sections and x_max. Unknown or duplicate keys are errors.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// y^2 = x^3 + x + 1 and y^2 = x^3 - x + 1: non-CM (non-integral
/// j-invariants) with discriminants -16*31 and -16*23, hence different
/// conductors and non-isogenous.
std::pair<CurveQ, CurveQ> demo_pair();

/// Five fixed curves used by the trace oracle suites.
std::vector<CurveQ> reference_curves();

}  // namespace frobsieve
