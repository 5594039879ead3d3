#include "frobsieve/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <string>

#include "frobsieve/gl2count.hpp"
#include "frobsieve/parallel.hpp"

namespace frobsieve {

namespace {

void require_hasse(u64 p, i64 a) {
    if (static_cast<i128>(a) * a >= 4 * static_cast<i128>(p)) {
        throw DomainError("trace " + std::to_string(a) + " violates a^2 < 4p at p = " + std::to_string(p));
    }
}

u64 norm_part(u64 p, i64 a) { return 4 * p - static_cast<u64>(a * a); }

}  // namespace

FrobeniusFieldTag field_from_trace(u64 p, i64 a) {
    require_hasse(p, a);
    return {squarefree_part(norm_part(p, a))};
}

FrobeniusFieldTag frobenius_field(const CurveQ& curve, u64 p) { return field_from_trace(p, ap_bsgs(curve, p)); }

bool product_is_square_check(u64 p, i64 a, i64 b) {
    if (p > kMaxPrime) throw DomainError("product_is_square_check: p above supported range");
    require_hasse(p, a);
    require_hasse(p, b);
    return is_perfect_square(norm_part(p, a) * norm_part(p, b));
}

// ---------------------------------------------------------------------------

TraceSeries compute_traces(const CurveQ& curve, u64 x, const TraceOptions& options) {
    if (x > kMaxPrime) throw DomainError("compute_traces: x above supported range");
    const std::vector<u64> primes = primes_in(0, x);
    const std::size_t width = std::max<std::size_t>(options.chunk_primes, 1);
    const std::size_t units = (primes.size() + width - 1) / width;

    struct Chunk {
        std::vector<TraceRecord> records;
        std::vector<u64> excluded;
    };
    auto chunks = parallel_map(units, options.threads, [&](std::size_t i) {
        Chunk c;
        const std::size_t begin = i * width, end = std::min(primes.size(), begin + width);
        for (std::size_t k = begin; k < end; ++k) {
            const u64 p = primes[k];
            if (curve.is_bad(p)) {
                c.excluded.push_back(p);
                continue;
            }
            const i64 a = trace_of_frobenius(curve, p, options.method);
            require_hasse(p, a);
            c.records.push_back({p, a});
        }
        return c;
    });

    TraceSeries series;
    series.limit = x;
    for (auto& c : chunks) {
        series.records.insert(series.records.end(), c.records.begin(), c.records.end());
        series.excluded.insert(series.excluded.end(), c.excluded.begin(), c.excluded.end());
    }
    return series;
}

TraceSeries truncate(const TraceSeries& series, u64 x) {
    if (x > series.limit) throw DomainError("truncate: x exceeds the series limit");
    TraceSeries out;
    out.limit = x;
    for (const auto& r : series.records) {
        if (r.p > x) break;
        out.records.push_back(r);
    }
    for (u64 p : series.excluded) {
        if (p <= x) out.excluded.push_back(p);
    }
    return out;
}

MatchResult match_traces(const TraceSeries& first, const TraceSeries& second) {
    if (first.limit != second.limit) throw DomainError("match_traces: series cover different ranges");
    MatchResult out;
    out.limit = first.limit;
    std::set_union(first.excluded.begin(), first.excluded.end(), second.excluded.begin(), second.excluded.end(),
                   std::back_inserter(out.excluded));

    auto i = first.records.begin();
    auto j = second.records.begin();
    while (i != first.records.end() && j != second.records.end()) {
        if (i->p < j->p) {
            ++i;
        } else if (j->p < i->p) {
            ++j;
        } else {
            const u64 d1 = field_from_trace(i->p, i->a_p).D;
            const u64 d2 = field_from_trace(j->p, j->a_p).D;
            out.records.push_back({i->p, i->a_p, j->a_p, d1, d2, d1 == d2});
            if (d1 == d2) ++out.count;
            ++i;
            ++j;
        }
    }
    return out;
}

MatchResult count_equal_fields(const CurveQ& e1, const CurveQ& e2, u64 x, const TraceOptions& options) {
    return match_traces(compute_traces(e1, x, options), compute_traces(e2, x, options));
}

u64 count_fixed_trace(const TraceSeries& series, i64 t) {
    return static_cast<u64>(
        std::count_if(series.records.begin(), series.records.end(), [t](const TraceRecord& r) { return r.a_p == t; }));
}

u64 count_fixed_trace(const CurveQ& curve, i64 t, u64 x, const TraceOptions& options) {
    return count_fixed_trace(compute_traces(curve, x, options), t);
}

u64 count_fixed_field(const TraceSeries& series, u64 D) {
    if (!is_squarefree(D)) throw DomainError("count_fixed_field: D = " + std::to_string(D) + " is not squarefree");
    return static_cast<u64>(std::count_if(series.records.begin(), series.records.end(), [D](const TraceRecord& r) {
        return field_from_trace(r.p, r.a_p).D == D;
    }));
}

u64 count_fixed_field(const CurveQ& curve, u64 D, u64 x, const TraceOptions& options) {
    if (!is_squarefree(D)) throw DomainError("count_fixed_field: D = " + std::to_string(D) + " is not squarefree");
    return count_fixed_field(compute_traces(curve, x, options), D);
}

u64 count_joint_traces(const MatchResult& matches, i64 t1, i64 t2) {
    return static_cast<u64>(std::count_if(matches.records.begin(), matches.records.end(),
                                          [&](const MatchRecord& r) { return r.a_p == t1 && r.b_p == t2; }));
}

u64 count_joint_traces(const CurveQ& e1, const CurveQ& e2, i64 t1, i64 t2, u64 x, const TraceOptions& options) {
    return count_joint_traces(count_equal_fields(e1, e2, x, options), t1, t2);
}

// ---------------------------------------------------------------------------

ChebotarevTable::ChebotarevTable(u64 q1, u64 q2) : q1_(q1), q2_(q2), n_(q1 * q2) {
    require_distinct_odd_primes(q1, q2);
    if (n_ > kMaxChebotarevModulus) throw DomainError("ChebotarevTable: q1 q2 too large for the cell table");
    cells_.assign(n_ * n_ * n_, 0);
}

void ChebotarevTable::add(u64 p, i64 a, i64 b) { ++cells_[index(p % n_, reduce(a, n_), reduce(b, n_))]; }

u64 ChebotarevTable::column_total(u64 d) const {
    u64 sum = 0;
    for (u64 s = 0; s < n_; ++s) {
        for (u64 t = 0; t < n_; ++t) sum += at(d, s, t);
    }
    return sum;
}

u64 ChebotarevTable::total() const { return std::accumulate(cells_.begin(), cells_.end(), u64{0}); }

ChebotarevTable chebotarev_empirical(const MatchResult& matches, u64 q1, u64 q2) {
    ChebotarevTable table(q1, q2);
    for (const auto& r : matches.records) table.add(r.p, r.a_p, r.b_p);
    return table;
}

ChebotarevTable chebotarev_empirical(const CurveQ& e1, const CurveQ& e2, u64 x, u64 q1, u64 q2,
                                     const TraceOptions& options) {
    [[maybe_unused]] const ChebotarevTable probe(q1, q2);  // validate moduli before trace work
    return chebotarev_empirical(count_equal_fields(e1, e2, x, options), q1, q2);
}

ChebotarevComparison compare_with_prediction(const ChebotarevTable& table, u64 x) {
    const u64 n = table.modulus();
    const double li = log_integral(static_cast<double>(x));
    ChebotarevComparison out;
    for (u64 d = 1; d < n; ++d) {
        if (std::gcd(d, n) != 1) continue;
        for (u64 s = 0; s < n; ++s) {
            for (u64 t = 0; t < n; ++t) {
                const double predicted =
                    class_ratio(table.q1(), table.q2(), static_cast<i64>(d), static_cast<i64>(s), static_cast<i64>(t))
                        .to_double() *
                    li;
                const u64 observed = table.at(d, s, t);
                const double dev = std::abs(static_cast<double>(observed) - predicted);
                if (dev > out.max_abs_deviation) out = {dev, d, s, t, predicted, observed};
            }
        }
    }
    return out;
}

}  // namespace frobsieve
