#include "frobsieve/cli.hpp"

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "frobsieve/experiment.hpp"
#include "frobsieve/parallel.hpp"
#include "frobsieve/verify.hpp"

namespace frobsieve {

namespace {

struct GlobalFlags {
    std::optional<unsigned> threads;
    std::optional<std::string> cache;
    std::optional<std::string> out;
    bool inject_fault = false;
};

ExperimentConfig load_with_overrides(const std::string& path, const GlobalFlags& flags) {
    ExperimentConfig config = load_config(path);
    if (flags.threads) config.threads = *flags.threads;
    if (flags.cache) config.cache_dir = *flags.cache;
    return config;
}

void write_artifacts(const VerifyReport& report, const GlobalFlags& flags, std::ostream& out) {
    if (!flags.out) return;
    for (const auto& a : report.artifacts) {
        const auto path = std::filesystem::path(*flags.out) / a.file_name;
        write_text_file(path, a.content);
        out << "wrote " << path.string() << "\n";
    }
}

int run_verify(VerifyReport (*suite)(const VerifyOptions&), const GlobalFlags& flags, std::ostream& out) {
    const VerifyOptions options{flags.inject_fault, flags.threads.value_or(default_threads())};
    const VerifyReport report = suite(options);
    out << report.text();
    write_artifacts(report, flags, out);
    const bool ok = report.passed();
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
    return ok ? kExitOk : kExitVerificationFailed;
}

int run_ap(i64 a, i64 b, u64 p, std::ostream& out) {
    const CurveQ curve(a, b);
    if (!is_prime(p)) throw DomainError(fmt::format("{} is not prime", p));
    if (curve.is_bad(p)) throw DomainError(fmt::format("p = {} divides 6 * disc; the trace is not defined here", p));
    const i64 trace = ap_bsgs(curve, p);
    out << fmt::format("a_{} = {}\n#E(F_{}) = {}\nD = {}\n", p, trace, p, static_cast<i64>(p) + 1 - trace,
                       field_from_trace(p, trace).D);
    return kExitOk;
}

int run_match_count(const ExperimentConfig& config, const GlobalFlags& flags, std::ostream& out) {
    const MatchResult matches = compute_matches(config);
    out << fmt::format("x = {}\ngood primes = {}\nequal Frobenius fields = {}\nexcluded primes = {}\n", matches.limit,
                       matches.records.size(), matches.count, matches.excluded.size());
    if (flags.out) {
        const auto path = std::filesystem::path(*flags.out) / "matches.csv";
        write_text_file(path, matches_csv(matches));
        out << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int run_sieve_demo(const ExperimentConfig& config, const GlobalFlags& flags, std::ostream& out) {
    const auto csv = sieve_reports_csv(sieve_at_checkpoints(compute_matches(config), config));
    out << csv;
    if (flags.out) {
        const auto path = std::filesystem::path(*flags.out) / "sieve_reports.csv";
        write_text_file(path, csv);
        out << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int run_experiment_command(const ExperimentConfig& config, const GlobalFlags& flags, std::ostream& out) {
    const ExperimentResult result = run_experiment(config, flags.out.value_or("out"));
    out << result.summary;
    for (const auto& f : result.files) out << "wrote " << f.string() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius fields of elliptic curve pairs and the square sieve", "frobsieve"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--threads", flags.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--cache", flags.cache, "trace cache directory");
    app.add_option("--out", flags.out, "output directory");
    app.add_flag("--inject-fault", flags.inject_fault)->group("");  // hidden, for negative tests

    i64 a = 0, b = 0;
    u64 p = 0;
    auto* ap = app.add_subcommand("ap", "trace of Frobenius of y^2 = x^3 + Ax + B at p");
    ap->add_option("A", a)->required();
    ap->add_option("B", b)->required();
    ap->add_option("p", p)->required();

    std::string config_path;
    auto* match = app.add_subcommand("match-count", "count primes with equal Frobenius fields");
    auto* sieve = app.add_subcommand("sieve-demo", "square-sieve reports at each checkpoint");
    auto* experiment = app.add_subcommand("experiment", "full growth experiment with CSV and SVG output");
    for (auto* sub : {match, sieve, experiment}) sub->add_option("config", config_path)->required()->check(CLI::ExistingFile);

    auto* gl2 = app.add_subcommand("gl2-verify", "GL2 counting oracles");
    auto* charsum = app.add_subcommand("charsum-verify", "character-sum oracles");
    auto* all = app.add_subcommand("verify-all", "every oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*ap) return run_ap(a, b, p, out);
        if (*gl2) return run_verify(verify_gl2, flags, out);
        if (*charsum) return run_verify(verify_charsum, flags, out);
        if (*all) return run_verify(verify_all, flags, out);

        const ExperimentConfig config = load_with_overrides(config_path, flags);
        if (*match) return run_match_count(config, flags, out);
        if (*sieve) return run_sieve_demo(config, flags, out);
        if (*experiment) return run_experiment_command(config, flags, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}

}  // namespace frobsieve
