#pragma once

// On-disk trace cache: one text file per curve,
//
//   #curve A=<A> B=<B>
//   #limit <x>
//   <p>\t<a_p>        (every good prime p <= x, ascending)
//
// A file is reused only if its header names the requested curve, its limit
// covers the request and the record set is exactly the good primes up to
// that limit. Anything else is treated as a miss and recomputed.

#include <filesystem>
#include <optional>

#include "frobsieve/frobenius.hpp"

namespace frobsieve {

std::filesystem::path cache_file(const std::filesystem::path& dir, const CurveQ& curve);

/// The series truncated to x, or nullopt on any mismatch or corruption.
std::optional<TraceSeries> read_trace_cache(const std::filesystem::path& file, const CurveQ& curve, u64 x);

void write_trace_cache(const std::filesystem::path& file, const CurveQ& curve, const TraceSeries& series);

/// Cached traces when valid, otherwise computes and (re)writes the cache.
/// An empty `dir` disables caching.
TraceSeries load_or_compute_traces(const CurveQ& curve, u64 x, const std::filesystem::path& dir,
                                   const TraceOptions& options, bool* cache_hit = nullptr);

}  // namespace frobsieve
