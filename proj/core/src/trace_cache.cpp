#include "frobsieve/trace_cache.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include <fmt/format.h>

namespace frobsieve {

namespace {

std::string header_line(const CurveQ& curve) { return fmt::format("#curve A={} B={}", curve.a(), curve.b()); }

template <class Int>
bool parse_field(std::string_view s, Int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir, const CurveQ& curve) {
    return dir / fmt::format("traces_A{}_B{}.tsv", curve.a(), curve.b());
}

std::optional<TraceSeries> read_trace_cache(const std::filesystem::path& file, const CurveQ& curve, u64 x) {
    std::ifstream in(file);
    if (!in) return std::nullopt;

    std::string line;
    if (!std::getline(in, line) || line != header_line(curve)) return std::nullopt;
    u64 limit = 0;
    if (!std::getline(in, line) || !line.starts_with("#limit ") || !parse_field(std::string_view(line).substr(7), limit)) {
        return std::nullopt;
    }
    if (limit < x) return std::nullopt;

    // Expected record set: all good primes up to the limit.
    auto primes = primes_in(0, limit);
    std::size_t next = 0;
    auto skip_bad = [&] {
        while (next < primes.size() && curve.is_bad(primes[next])) ++next;
    };

    TraceSeries series;
    series.limit = x;
    skip_bad();
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) return std::nullopt;
        u64 p = 0;
        i64 a = 0;
        if (!parse_field(std::string_view(line).substr(0, tab), p) ||
            !parse_field(std::string_view(line).substr(tab + 1), a)) {
            return std::nullopt;
        }
        if (next >= primes.size() || primes[next] != p) return std::nullopt;
        if (static_cast<i128>(a) * a >= 4 * static_cast<i128>(p)) return std::nullopt;
        if (p <= x) series.records.push_back({p, a});
        ++next;
        skip_bad();
    }
    if (next != primes.size()) return std::nullopt;

    for (u64 p : primes) {
        if (p > x) break;
        if (curve.is_bad(p)) series.excluded.push_back(p);
    }
    return series;
}

void write_trace_cache(const std::filesystem::path& file, const CurveQ& curve, const TraceSeries& series) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    const auto tmp = std::filesystem::path(file.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write trace cache " + tmp.string());
        out << header_line(curve) << '\n' << "#limit " << series.limit << '\n';
        for (const auto& r : series.records) out << r.p << '\t' << r.a_p << '\n';
        if (!out) throw std::runtime_error("failed writing trace cache " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

TraceSeries load_or_compute_traces(const CurveQ& curve, u64 x, const std::filesystem::path& dir,
                                   const TraceOptions& options, bool* cache_hit) {
    if (cache_hit) *cache_hit = false;
    if (dir.empty()) return compute_traces(curve, x, options);

    const auto file = cache_file(dir, curve);
    if (auto cached = read_trace_cache(file, curve, x)) {
        if (cache_hit) *cache_hit = true;
        return std::move(*cached);
    }
    TraceSeries series = compute_traces(curve, x, options);
    write_trace_cache(file, curve, series);
    return series;
}

}  // namespace frobsieve
