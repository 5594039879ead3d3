#include "frobsieve/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "frobsieve/frobenius.hpp"
#include "frobsieve/gl2count.hpp"
#include "frobsieve/parallel.hpp"
#include "frobsieve/sieve.hpp"

namespace frobsieve {

double policy_z(const ZPolicy& policy, double x) {
    switch (policy.kind) {
        case ZPolicyKind::grh:
            return choose_z_grh(x);
        case ZPolicyKind::uncond:
            return choose_z_uncond(x, policy.c3);
        case ZPolicyKind::fixed:
            return policy.fixed_z;
    }
    return policy.fixed_z;
}

std::pair<CurveQ, CurveQ> demo_pair() { return {CurveQ(1, 1), CurveQ(-1, 1)}; }

std::vector<CurveQ> reference_curves() {
    return {CurveQ(2, 3), CurveQ(1, 1), CurveQ(-1, 1), CurveQ(1, 0), CurveQ(-3, 5)};
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    std::size_t line;
};

template <class Int>
Int parse_int(const Entry& e, const std::string& key) {
    Int v{};
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw ConfigError(e.line, "malformed integer for " + key + ": '" + e.value + "'");
    return v;
}

double parse_double(const Entry& e, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(e.line, "malformed number for " + key + ": '" + e.value + "'");
    }
}

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"curve1", {"A", "B"}},
        {"curve2", {"A", "B"}},
        {"experiment", {"x_max", "checkpoints", "z_policy", "c3", "q1", "q2", "threads", "cache_dir", "method"}},
    };
    return keys;
}

std::vector<u64> default_checkpoints(u64 x_max) {
    std::vector<u64> out;
    for (u64 x = 1000; x < x_max; x *= 10) out.push_back(x);
    out.push_back(x_max);
    return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    std::map<std::string, Entry> entries;  // "section.key"
    std::string section;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!allowed_keys().contains(section)) throw ConfigError(line_no, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (section.empty()) throw ConfigError(line_no, "key '" + key + "' outside any section");
        const auto& keys = allowed_keys().at(section);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(line_no, "unknown key '" + key + "' in [" + section + "]");
        }
        const std::string full = section + "." + key;
        if (auto it = entries.find(full); it != entries.end()) {
            throw ConfigError(line_no, "duplicate key '" + full + "' (first set on line " +
                                           std::to_string(it->second.line) + ")");
        }
        if (value.empty()) throw ConfigError(line_no, "empty value for '" + full + "'");
        entries.emplace(full, Entry{value, line_no});
    }

    auto require = [&](const std::string& full) -> const Entry& {
        auto it = entries.find(full);
        if (it == entries.end()) throw ConfigError(0, "missing required key '" + full + "'");
        return it->second;
    };
    auto find = [&](const std::string& full) -> const Entry* {
        auto it = entries.find(full);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto curve = [&](const std::string& name) {
        const Entry& a = require(name + ".A");
        const Entry& b = require(name + ".B");
        try {
            return CurveQ(parse_int<i64>(a, name + ".A"), parse_int<i64>(b, name + ".B"));
        } catch (const DomainError& e) {
            throw ConfigError(b.line, "[" + name + "] " + e.what());
        }
    };

    ExperimentConfig cfg{curve("curve1"), curve("curve2"), 0, {}, {}, std::nullopt, {}, 1, TraceMethod::bsgs};

    const Entry& xm = require("experiment.x_max");
    cfg.x_max = parse_int<u64>(xm, "x_max");
    if (cfg.x_max < 100 || cfg.x_max > kMaxPrime) {
        throw ConfigError(xm.line, "x_max must lie in [100, " + std::to_string(kMaxPrime) + "]");
    }

    if (const Entry* cp = find("experiment.checkpoints")) {
        std::string_view rest = cp->value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const Entry item{std::string(trim(rest.substr(0, comma))), cp->line};
            cfg.x_checkpoints.push_back(parse_int<u64>(item, "checkpoints"));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        if (!std::is_sorted(cfg.x_checkpoints.begin(), cfg.x_checkpoints.end()) ||
            std::adjacent_find(cfg.x_checkpoints.begin(), cfg.x_checkpoints.end()) != cfg.x_checkpoints.end()) {
            throw ConfigError(cp->line, "checkpoints must be strictly ascending");
        }
        if (cfg.x_checkpoints.empty() || cfg.x_checkpoints.front() < 100 || cfg.x_checkpoints.back() > cfg.x_max) {
            throw ConfigError(cp->line, "checkpoints must lie in [100, x_max]");
        }
    } else {
        cfg.x_checkpoints = default_checkpoints(cfg.x_max);
    }

    if (const Entry* zp = find("experiment.z_policy")) {
        if (zp->value == "grh") {
            cfg.z_policy.kind = ZPolicyKind::grh;
        } else if (zp->value == "uncond") {
            cfg.z_policy.kind = ZPolicyKind::uncond;
        } else if (zp->value.starts_with("fixed:")) {
            cfg.z_policy.kind = ZPolicyKind::fixed;
            cfg.z_policy.fixed_z = parse_double(Entry{zp->value.substr(6), zp->line}, "z_policy");
            if (!(cfg.z_policy.fixed_z >= kMinWindowZ)) throw ConfigError(zp->line, "fixed z must be at least 4");
        } else {
            throw ConfigError(zp->line, "z_policy must be grh, uncond or fixed:<z>");
        }
    }
    if (const Entry* c3 = find("experiment.c3")) {
        cfg.z_policy.c3 = parse_double(*c3, "c3");
        if (!(cfg.z_policy.c3 > 0)) throw ConfigError(c3->line, "c3 must be positive");
    }

    const Entry* q1 = find("experiment.q1");
    const Entry* q2 = find("experiment.q2");
    if ((q1 == nullptr) != (q2 == nullptr)) {
        throw ConfigError((q1 ? q1 : q2)->line, "q1 and q2 must be given together");
    }
    if (q1) {
        const u64 a = parse_int<u64>(*q1, "q1"), b = parse_int<u64>(*q2, "q2");
        try {
            require_distinct_odd_primes(a, b);
        } catch (const DomainError& e) {
            throw ConfigError(q2->line, e.what());
        }
        if (a * b > kMaxChebotarevModulus) throw ConfigError(q2->line, "q1 * q2 must not exceed 215");
        cfg.moduli = std::pair{a, b};
    }

    cfg.threads = default_threads();
    if (const Entry* th = find("experiment.threads")) {
        cfg.threads = parse_int<unsigned>(*th, "threads");
        if (cfg.threads == 0) throw ConfigError(th->line, "threads must be positive");
    }
    if (const Entry* cd = find("experiment.cache_dir")) cfg.cache_dir = cd->value;
    if (const Entry* m = find("experiment.method")) {
        if (m->value == "bsgs") {
            cfg.method = TraceMethod::bsgs;
        } else if (m->value == "naive") {
            cfg.method = TraceMethod::naive;
        } else {
            throw ConfigError(m->line, "method must be bsgs or naive");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace frobsieve
