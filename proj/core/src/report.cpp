#include "frobsieve/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "frobsieve/sieve.hpp"

namespace frobsieve {

namespace {

template <class... T>
void append(std::string& out, fmt::format_string<T...> format, T&&... args) {
    fmt::format_to(std::back_inserter(out), format, std::forward<T>(args)...);
}

}  // namespace

GrowthSeries growth_series(const MatchResult& matches, const std::vector<u64>& checkpoints) {
    GrowthSeries out;
    std::size_t i = 0;
    u64 equal = 0, joint = 0, good = 0;
    for (u64 x : checkpoints) {
        if (x > matches.limit) throw DomainError("growth_series: checkpoint beyond the match stream");
        for (; i < matches.records.size() && matches.records[i].p <= x; ++i) {
            const auto& r = matches.records[i];
            ++good;
            equal += r.matched;
            joint += r.a_p == 0 && r.b_p == 0;
        }
        const double xd = static_cast<double>(x);
        out.rows.push_back({x, equal, joint, good, theorem_bound_curves(xd, BoundShape::grh),
                            theorem_bound_curves(xd, BoundShape::uncond), loglog_shape(xd)});
    }
    return out;
}

std::string matches_csv(const MatchResult& matches) {
    std::string out = "p,a_p,b_p,D1,D2,matched\n";
    out.reserve(out.size() + matches.records.size() * 32);
    for (const auto& r : matches.records) {
        fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{}\n", r.p, r.a_p, r.b_p, r.D1, r.D2,
                       r.matched ? 1 : 0);
    }
    return out;
}

std::string growth_csv(const GrowthSeries& series) {
    std::string out = "x,S_equal_fields,S_joint_00,pi_good,grh_shape,uncond_shape,loglog_shape\n";
    for (const auto& r : series.rows) {
        fmt::format_to(std::back_inserter(out), "{},{},{},{},{:.10g},{:.10g},{:.10g}\n", r.x, r.S_equal_fields,
                       r.S_joint_00, r.pi_good, r.grh_shape, r.uncond_shape, r.loglog_shape);
    }
    return out;
}

std::string loglog_svg(const std::string& title, const std::vector<PlotSeries>& series) {
    constexpr double width = 800, height = 560, left = 80, right = 200, top = 50, bottom = 60;
    double xmin = std::numeric_limits<double>::infinity(), xmax = 0;
    double ymin = std::numeric_limits<double>::infinity(), ymax = 0;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (!(x > 0 && y > 0)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmax > 0)) xmin = 1, xmax = 10, ymin = 1, ymax = 10;
    const double lx0 = std::floor(std::log10(xmin)), lx1 = std::max(std::ceil(std::log10(xmax)), lx0 + 1);
    const double ly0 = std::floor(std::log10(ymin)), ly1 = std::max(std::ceil(std::log10(ymax)), ly0 + 1);
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (std::log10(x) - lx0) / (lx1 - lx0) * pw; };
    auto py = [&](double y) { return top + ph - (std::log10(y) - ly0) / (ly1 - ly0) * ph; };

    std::string out;
    append(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    append(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" height=\"{:.0f}\" "
         "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
         width, height, width, height);
    append(out, "<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", width, height);
    append(out, "<text x=\"{:.1f}\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n",
         left + pw / 2, title);
    append(out, "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" stroke=\"black\"/>\n", left,
         top, pw, ph);
    for (double e = lx0; e <= lx1; e += 1) {
        const double x = px(std::pow(10.0, e));
        append(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#dddddd\"/>\n", x, top, top + ph);
        append(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
             "text-anchor=\"middle\">1e{:.0f}</text>\n",
             x, top + ph + 18, e);
    }
    for (double e = ly0; e <= ly1; e += 1) {
        const double y = py(std::pow(10.0, e));
        append(out, "<line x1=\"{1:.1f}\" y1=\"{0:.1f}\" x2=\"{2:.1f}\" y2=\"{0:.1f}\" stroke=\"#dddddd\"/>\n", y, left,
             left + pw);
        append(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
             "text-anchor=\"end\">1e{:.0f}</text>\n",
             left - 6, y + 4, e);
    }
    append(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">x</text>\n",
         left + pw / 2, height - 16);

    double legend_y = top + 10;
    for (const auto& s : series) {
        std::string pts;
        for (auto [x, y] : s.points) {
            if (x > 0 && y > 0) fmt::format_to(std::back_inserter(pts), "{:.2f},{:.2f} ", px(x), py(y));
        }
        if (!pts.empty()) pts.pop_back();
        append(out, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", s.color, pts);
        append(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
             left + pw + 12, legend_y, left + pw + 36, s.color);
        append(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n", left + pw + 42,
             legend_y + 4, s.label);
        legend_y += 20;
    }
    append(out, "</svg>\n");
    return out;
}

std::string growth_svg(const MatchResult& matches, std::size_t samples) {
    const double x0 = 100.0, x1 = static_cast<double>(matches.limit);
    std::vector<double> grid;
    for (std::size_t i = 0; i < samples; ++i) {
        const double f = samples == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
        grid.push_back(std::round(std::exp(std::log(x0) + f * (std::log(x1) - std::log(x0)))));
    }
    grid.back() = x1;

    PlotSeries observed{"S(E1,E2;x)", "#1f77b4", {}};
    PlotSeries grh{"x^(29/30)(log x)^(1/15)", "#d62728", {}};
    PlotSeries uncond{"x(loglog x)^(22/21)/(log x)^(43/42)", "#2ca02c", {}};
    PlotSeries loglog{"log log x", "#9467bd", {}};
    std::size_t i = 0;
    u64 count = 0;
    for (double x : grid) {
        for (; i < matches.records.size() && static_cast<double>(matches.records[i].p) <= x; ++i) {
            count += matches.records[i].matched;
        }
        if (count > 0) observed.points.emplace_back(x, static_cast<double>(count));
        grh.points.emplace_back(x, theorem_bound_curves(x, BoundShape::grh));
        uncond.points.emplace_back(x, theorem_bound_curves(x, BoundShape::uncond));
        loglog.points.emplace_back(x, loglog_shape(x));
    }
    return loglog_svg("Equal Frobenius fields against bound shapes", {observed, grh, uncond, loglog});
}

}  // namespace frobsieve
