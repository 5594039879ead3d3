#pragma once

#include <optional>
#include <vector>

#include "frobsieve/arith.hpp"

namespace frobsieve {

/// y^2 = x^3 + A x + B over Q with integer coefficients.
///
/// Bad primes are taken as the primes dividing 6 * discriminant. That set
/// contains every prime dividing the conductor and differs from it by a
/// finite set; counters report what they excluded.
class CurveQ {
public:
    /// Coefficients are limited to |A|, |B| <= kMaxCoefficient so that
    /// 4A^3 + 27B^2 fits in 64 bits and can be factored.
    static constexpr i64 kMaxCoefficient = 1'000'000;

    CurveQ(i64 a, i64 b);

    i64 a() const noexcept { return a_; }
    i64 b() const noexcept { return b_; }

    /// -16 (4A^3 + 27B^2); nonzero.
    i128 discriminant() const noexcept { return -16 * static_cast<i128>(core_); }

    /// Ascending; always contains 2 and 3.
    const std::vector<u64>& bad_primes() const noexcept { return bad_; }

    bool is_bad(u64 p) const noexcept;

    /// Quadratic twist by d: y^2 = x^3 + A d^2 x + B d^3.
    CurveQ twist(i64 d) const;

    friend bool operator==(const CurveQ& l, const CurveQ& r) noexcept { return l.a_ == r.a_ && l.b_ == r.b_; }

private:
    i64 a_;
    i64 b_;
    i64 core_;  // 4A^3 + 27B^2
    std::vector<u64> bad_;
};

struct TraceRecord {
    u64 p;
    i64 a_p;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

enum class TraceMethod { naive, bsgs };

/// Threshold below which ap_bsgs defers to ap_naive.
inline constexpr u64 kBsgsMinPrime = 457;

/// a_p = -sum_x ((x^3 + A x + B) / p), from a table of quadratic residues.
/// Throws DomainError when p is not a good prime for the curve.
i64 ap_naive(const CurveQ& curve, u64 p);

/// p + 1 - a_p.
u64 count_points(const CurveQ& curve, u64 p);

/// Literal enumeration of affine solutions (x, y) plus the point at
/// infinity. O(p^2); used as the oracle for ap_naive.
u64 count_points_bruteforce(const CurveQ& curve, u64 p);

/// Same value as ap_naive via baby-step/giant-step order finding inside the
/// Hasse interval, combining several points on the curve and its quadratic
/// twist. Falls back to ap_naive for p <= kBsgsMinPrime or if the group
/// order stays ambiguous.
i64 ap_bsgs(const CurveQ& curve, u64 p);

i64 trace_of_frobenius(const CurveQ& curve, u64 p, TraceMethod method);

/// Traces for every good prime in (lo, hi], ascending. Bad primes in the
/// range are appended to `excluded` when it is non-null.
std::vector<TraceRecord> trace_range(const CurveQ& curve, u64 lo, u64 hi, TraceMethod method,
                                     std::vector<u64>* excluded = nullptr);

}  // namespace frobsieve
