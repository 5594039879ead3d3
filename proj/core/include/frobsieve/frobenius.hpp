#pragma once

// Frobenius fields Q(sqrt(a_p^2 - 4p)) and the prime-counting functions
// built on them: equal fields for a pair of curves, fixed trace, fixed
// field, joint traces, and the empirical (p, a_p, b_p) residue-class table.

#include <compare>
#include <cstddef>
#include <vector>

#include "frobsieve/elliptic.hpp"
#include "frobsieve/rational.hpp"

namespace frobsieve {

/// Q(sqrt(-D)) identified by its squarefree D >= 1.
struct FrobeniusFieldTag {
    u64 D;

    friend auto operator<=>(const FrobeniusFieldTag&, const FrobeniusFieldTag&) = default;
};

/// Squarefree part of 4p - a^2. Requires a^2 < 4p.
FrobeniusFieldTag field_from_trace(u64 p, i64 a);

/// Field of E at a good prime p > 3.
FrobeniusFieldTag frobenius_field(const CurveQ& curve, u64 p);

/// Whether (4p - a^2)(4p - b^2) is a perfect square. Requires a^2, b^2 < 4p
/// and p <= kMaxPrime.
bool product_is_square_check(u64 p, i64 a, i64 b);

/// Largest prime handled by the counters; keeps (4p - a^2)(4p - b^2) < 2^64.
inline constexpr u64 kMaxPrime = 1'000'000'000;

struct TraceOptions {
    TraceMethod method = TraceMethod::bsgs;
    unsigned threads = 1;
    std::size_t chunk_primes = 10'000;  // work-unit width, in primes
};

/// Traces of one curve at every good prime p <= limit.
struct TraceSeries {
    u64 limit = 0;
    std::vector<TraceRecord> records;  // ascending p
    std::vector<u64> excluded;         // bad primes <= limit (includes 2 and 3)
};

TraceSeries compute_traces(const CurveQ& curve, u64 x, const TraceOptions& options = {});

/// Restriction of a series to p <= x (x <= series.limit).
TraceSeries truncate(const TraceSeries& series, u64 x);

struct MatchRecord {
    u64 p;
    i64 a_p;
    i64 b_p;
    u64 D1;
    u64 D2;
    bool matched;

    friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

struct MatchResult {
    u64 limit = 0;
    u64 count = 0;                     // primes with equal Frobenius fields
    std::vector<MatchRecord> records;  // one per prime good for both curves
    std::vector<u64> excluded;         // primes <= limit bad for either curve
};

/// Joins two series over the same limit.
MatchResult match_traces(const TraceSeries& first, const TraceSeries& second);

MatchResult count_equal_fields(const CurveQ& e1, const CurveQ& e2, u64 x, const TraceOptions& options = {});

u64 count_fixed_trace(const TraceSeries& series, i64 t);
u64 count_fixed_trace(const CurveQ& curve, i64 t, u64 x, const TraceOptions& options = {});

/// Throws DomainError for a non-squarefree or zero D.
u64 count_fixed_field(const TraceSeries& series, u64 D);
u64 count_fixed_field(const CurveQ& curve, u64 D, u64 x, const TraceOptions& options = {});

u64 count_joint_traces(const MatchResult& matches, i64 t1, i64 t2);
u64 count_joint_traces(const CurveQ& e1, const CurveQ& e2, i64 t1, i64 t2, u64 x,
                       const TraceOptions& options = {});

/// Cell (d, s, t) counts good primes p <= x with p = d, a_p = s, b_p = t
/// modulo n = q1 q2.
class ChebotarevTable {
public:
    ChebotarevTable(u64 q1, u64 q2);

    u64 q1() const noexcept { return q1_; }
    u64 q2() const noexcept { return q2_; }
    u64 modulus() const noexcept { return n_; }

    u64 at(u64 d, u64 s, u64 t) const { return cells_[index(d, s, t)]; }
    void add(u64 p, i64 a, i64 b);

    /// Sum over (s, t) for a fixed residue d.
    u64 column_total(u64 d) const;
    u64 total() const;

private:
    std::size_t index(u64 d, u64 s, u64 t) const { return ((d % n_) * n_ + s % n_) * n_ + t % n_; }

    u64 q1_;
    u64 q2_;
    u64 n_;
    std::vector<u64> cells_;
};

/// Largest q1 q2 for which the n^3-cell table is built.
inline constexpr u64 kMaxChebotarevModulus = 215;

ChebotarevTable chebotarev_empirical(const MatchResult& matches, u64 q1, u64 q2);
ChebotarevTable chebotarev_empirical(const CurveQ& e1, const CurveQ& e2, u64 x, u64 q1, u64 q2,
                                     const TraceOptions& options = {});

/// Empirical cells against the predicted (#C / #H) li(x).
struct ChebotarevComparison {
    double max_abs_deviation = 0;
    u64 worst_d = 0;
    u64 worst_s = 0;
    u64 worst_t = 0;
    double predicted_at_worst = 0;
    u64 observed_at_worst = 0;
};

ChebotarevComparison compare_with_prediction(const ChebotarevTable& table, u64 x);

}  // namespace frobsieve
