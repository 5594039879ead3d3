#pragma once

// Serialisation of results: match streams, growth series and the log-log
// SVG plot. All number formatting is fixed so that equal inputs always
// produce byte-identical files.

#include <string>
#include <vector>

#include "frobsieve/frobenius.hpp"

namespace frobsieve {

struct GrowthRow {
    u64 x;
    u64 S_equal_fields;
    u64 S_joint_00;
    u64 pi_good;
    double grh_shape;
    double uncond_shape;
    double loglog_shape;
};

struct GrowthSeries {
    std::vector<GrowthRow> rows;  // ascending x
};

/// Rows at each checkpoint from one match stream computed up to at least
/// the last checkpoint.
GrowthSeries growth_series(const MatchResult& matches, const std::vector<u64>& checkpoints);

std::string matches_csv(const MatchResult& matches);
std::string growth_csv(const GrowthSeries& series);

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (x, y), y > 0
};

/// SVG 1.1 document with log-scaled axes, one polyline per series and a
/// legend.
std::string loglog_svg(const std::string& title, const std::vector<PlotSeries>& series);

/// Observed S(E1, E2; x) on a log-spaced grid next to the three comparison
/// shapes.
std::string growth_svg(const MatchResult& matches, std::size_t samples = 64);

}  // namespace frobsieve
