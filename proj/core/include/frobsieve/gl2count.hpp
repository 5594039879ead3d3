#pragma once

// Exact counts in GL_2(Z/nZ) for n = q or n = q1*q2 (distinct odd primes):
// matrices with prescribed determinant and trace, the order of the
// equal-determinant subgroup H of GL_2(Z/nZ)^2, and the class ratios
// #C(s,t,d) / #H. Every closed formula has an enumeration counterpart.

#include <vector>

#include "frobsieve/arith.hpp"
#include "frobsieve/rational.hpp"

namespace frobsieve {

/// Largest modulus accepted by the n^4 enumerations.
inline constexpr u64 kMaxEnumerationModulus = 35;

/// q * (q + ((t^2 - 4d) / q)) for an odd prime q and d a unit mod q.
i64 count_det_trace_prime(u64 q, i64 d, i64 t);

/// #{g in GL_2(Z/q1q2) : det g = d, tr g = t}
///   = q1 q2 (q1 + ((t^2-4d)/q1)) (q2 + ((t^2-4d)/q2)).
i64 count_det_trace_formula(u64 q1, u64 q2, i64 d, i64 t);

/// Counts of invertible 2x2 matrices mod n by (det, trace).
class DetTraceHistogram {
public:
    explicit DetTraceHistogram(u64 n) : n_(n), counts_(n * n, 0) {}

    u64 modulus() const noexcept { return n_; }
    u64 at(u64 det, u64 trace) const { return counts_[(det % n_) * n_ + trace % n_]; }
    u64& at(u64 det, u64 trace) { return counts_[(det % n_) * n_ + trace % n_]; }

    /// Number of matrices with the given determinant, any trace.
    u64 det_count(u64 det) const;
    /// |GL_2(Z/nZ)|.
    u64 group_order() const;

    friend bool operator==(const DetTraceHistogram&, const DetTraceHistogram&) = default;

private:
    u64 n_;
    std::vector<u64> counts_;
};

/// Enumerates all n^4 matrices mod n directly. n <= kMaxEnumerationModulus.
DetTraceHistogram det_trace_histogram(u64 n);

/// Same table for n = q1 q2, built from the two per-prime enumerations and
/// combined through the Chinese remainder theorem.
DetTraceHistogram det_trace_histogram_crt(u64 q1, u64 q2);

/// Exhaustive count for a modulus that is an odd prime or a product of two
/// distinct odd primes, n <= kMaxEnumerationModulus. Tables are memoised.
u64 count_det_trace_bruteforce(u64 n, i64 d, i64 t);

/// q1^2 (q1-1)(q1^2-1)^2 q2^2 (q2-1)(q2^2-1)^2.
i128 order_H_formula(u64 q1, u64 q2);

/// Sum over units d of N(d)^2, N(d) = #{g in GL_2(Z/q1q2) : det g = d}.
i128 order_H_histogram(u64 q1, u64 q2);

/// #C(s,t,d) = count(d,s) * count(d,t) from the closed formula.
i128 count_C_formula(u64 q1, u64 q2, i64 d, i64 s, i64 t);

/// #C(s,t,d) / #H as an exact fraction.
Rational class_ratio(u64 q1, u64 q2, i64 d, i64 s, i64 t);

/// The same ratio written as a product of the four (q_i + symbol) factors
/// over (q1-1)(q1^2-1)^2 (q2-1)(q2^2-1)^2.
Rational class_ratio_factored(u64 q1, u64 q2, i64 d, i64 s, i64 t);

/// q1^2 q2^2 / ((q1-1)(q1^2-1)^2 (q2-1)(q2^2-1)^2), the leading part of every
/// class ratio.
Rational class_ratio_leading(u64 q1, u64 q2);

struct GL2CountResult {
    u64 q1;
    u64 q2;
    u64 d;
    u64 s;
    u64 t;
    i128 countC;
    i128 countH;
    Rational ratio;
};

GL2CountResult gl2_count(u64 q1, u64 q2, i64 d, i64 s, i64 t);

/// Requires z/2 < q1, q2 <= z; returns order_H_formula(q1, q2) <= z^14.
bool degree_bound_check(u64 q1, u64 q2, double z);

/// Throws DomainError unless q1 != q2 are both odd primes.
void require_distinct_odd_primes(u64 q1, u64 q2);

}  // namespace frobsieve
