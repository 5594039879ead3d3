#include "frobsieve/experiment.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "frobsieve/trace_cache.hpp"

namespace frobsieve {

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

MatchResult compute_matches(const ExperimentConfig& config, bool* hit1, bool* hit2) {
    const TraceOptions options{config.method, config.threads};
    const TraceSeries s1 = load_or_compute_traces(config.curve1, config.x_max, config.cache_dir, options, hit1);
    const TraceSeries s2 = load_or_compute_traces(config.curve2, config.x_max, config.cache_dir, options, hit2);
    return match_traces(s1, s2);
}

std::vector<CheckpointSieve> sieve_at_checkpoints(const MatchResult& matches, const ExperimentConfig& config) {
    std::vector<CheckpointSieve> out;
    for (u64 x : config.x_checkpoints) {
        MatchResult prefix;
        prefix.limit = x;
        for (const auto& r : matches.records) {
            if (r.p > x) break;
            prefix.records.push_back(r);
        }
        const Multiset multiset = curve_pair_multiset(prefix);
        const double raw_z = policy_z(config.z_policy, static_cast<double>(x));
        const SievePrimeSet window = build_prime_window(std::max(raw_z, kMinWindowZ));

        CheckpointSieve cp{x, raw_z, std::nullopt, sieve_bound_v2(multiset, window)};
        try {
            cp.v1 = sieve_bound_v1(multiset, window);
        } catch (const DomainError&) {
            // max(A) > e^P: the first form does not apply at this z.
        }
        out.push_back(std::move(cp));
    }
    return out;
}

std::string sieve_reports_csv(const std::vector<CheckpointSieve>& sieve) {
    std::string out = sieve_report_csv_header() + "\n";
    for (const auto& cp : sieve) {
        if (cp.v1) out += to_csv_row(*cp.v1) + "\n";
        out += to_csv_row(cp.v2) + "\n";
    }
    return out;
}

namespace {

std::string make_summary(const ExperimentConfig& config, const ExperimentResult& r) {
    std::string s;
    auto line = [&s](const std::string& text) { s += text + "\n"; };
    line(fmt::format("curve1: y^2 = x^3 + ({})x + ({})", config.curve1.a(), config.curve1.b()));
    line(fmt::format("curve2: y^2 = x^3 + ({})x + ({})", config.curve2.a(), config.curve2.b()));
    line(fmt::format("x_max: {}", config.x_max));
    line(fmt::format("good primes: {}", r.matches.records.size()));
    line(fmt::format("equal Frobenius fields: {}", r.matches.count));
    std::string excluded;
    for (u64 p : r.matches.excluded) excluded += (excluded.empty() ? "" : " ") + std::to_string(p);
    line(fmt::format("excluded primes ({}): {}", r.matches.excluded.size(), excluded));
    for (const auto& row : r.growth.rows) {
        line(fmt::format("x={} S={} S_00={} pi_good={} ratio={:.6g}", row.x, row.S_equal_fields, row.S_joint_00,
                         row.pi_good, static_cast<double>(row.S_equal_fields) / static_cast<double>(row.pi_good)));
    }
    for (const auto& cp : r.sieve) {
        line(fmt::format("sieve x={} policy z={:.6g} window z={:.6g} P={} v1={}", cp.x, cp.raw_z, cp.v2.z, cp.v2.P,
                         cp.v1 ? "reported" : "precondition max(A) <= e^P fails"));
    }
    if (config.moduli) {
        const auto [q1, q2] = *config.moduli;
        const ChebotarevTable table = chebotarev_empirical(r.matches, q1, q2);
        const i64 direct = prime_char_sum_direct(r.matches, q1, q2);
        const i64 classes = prime_char_sum_by_classes(table);
        const auto cmp = compare_with_prediction(table, config.x_max);
        line(fmt::format("prime character sum mod {}*{}: direct={} by_classes={} agree={}", q1, q2, direct, classes,
                         direct == classes ? "yes" : "no"));
        line(fmt::format("main term li(x) * leading ratio * triple sum: {:.6g}",
                         main_term_assembly(q1, q2, static_cast<double>(config.x_max))));
        line(fmt::format("class frequencies: max |observed - (#C/#H) li(x)| = {:.6g} at (d,s,t)=({},{},{}) "
                         "observed={} predicted={:.6g}",
                         cmp.max_abs_deviation, cmp.worst_d, cmp.worst_s, cmp.worst_t, cmp.observed_at_worst,
                         cmp.predicted_at_worst));
    }
    return s;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
    ExperimentResult r;
    r.matches = compute_matches(config, &r.cache_hit_curve1, &r.cache_hit_curve2);
    r.growth = growth_series(r.matches, config.x_checkpoints);
    r.sieve = sieve_at_checkpoints(r.matches, config);
    r.summary = make_summary(config, r);

    const std::pair<const char*, std::string> files[] = {
        {"matches.csv", matches_csv(r.matches)},
        {"growth.csv", growth_csv(r.growth)},
        {"sieve_reports.csv", sieve_reports_csv(r.sieve)},
        {"growth.svg", growth_svg(r.matches)},
        {"summary.txt", r.summary},
    };
    for (const auto& [name, content] : files) {
        write_text_file(out_dir / name, content);
        r.files.push_back(out_dir / name);
    }
    return r;
}

}  // namespace frobsieve
