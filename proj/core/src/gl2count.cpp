#include "frobsieve/gl2count.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace frobsieve {

void require_distinct_odd_primes(u64 q1, u64 q2) {
    if (q1 == q2) throw DomainError("q1 and q2 must be distinct");
    for (u64 q : {q1, q2}) {
        if (q == 2 || !is_prime(q)) throw DomainError(std::to_string(q) + " is not an odd prime");
    }
}

namespace {

void require_odd_prime(u64 q) {
    if (q == 2 || !is_prime(q)) throw DomainError(std::to_string(q) + " is not an odd prime");
}

void require_unit(i64 d, u64 n) {
    if (std::gcd(reduce(d, n), n) != 1) {
        throw DomainError("determinant " + std::to_string(d) + " is not a unit modulo " + std::to_string(n));
    }
}

/// Modulus must be an odd prime or a product of two distinct odd primes.
void require_enumerable(u64 n) {
    if (n > kMaxEnumerationModulus) {
        throw DomainError("modulus " + std::to_string(n) + " exceeds the enumeration limit " +
                          std::to_string(kMaxEnumerationModulus));
    }
    const auto factors = prime_factors(n);
    u64 product = 1;
    for (u64 f : factors) product *= f;
    if (n < 3 || n % 2 == 0 || product != n || factors.size() > 2) {
        throw DomainError("modulus " + std::to_string(n) + " must be an odd prime or a product of two distinct odd primes");
    }
}

i64 factor_at(u64 q, i64 disc) { return static_cast<i64>(q) + jacobi_symbol(disc, static_cast<i64>(q)); }

i64 disc_of(i64 d, i64 t) { return t * t - 4 * d; }

// q1^7 q2^7 must fit in 127 bits.
void require_small(u64 q1, u64 q2) {
    if (q1 >= 512 || q2 >= 512) throw DomainError("group orders are limited to primes below 512");
}

}  // namespace

i64 count_det_trace_prime(u64 q, i64 d, i64 t) {
    require_odd_prime(q);
    require_unit(d, q);
    const i64 dr = static_cast<i64>(reduce(d, q)), tr = static_cast<i64>(reduce(t, q));
    return static_cast<i64>(q) * factor_at(q, disc_of(dr, tr));
}

i64 count_det_trace_formula(u64 q1, u64 q2, i64 d, i64 t) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    require_unit(d, n);
    const i64 dr = static_cast<i64>(reduce(d, n)), tr = static_cast<i64>(reduce(t, n));
    const i64 disc = disc_of(dr, tr);
    return static_cast<i64>(n) * factor_at(q1, disc) * factor_at(q2, disc);
}

u64 DetTraceHistogram::det_count(u64 det) const {
    u64 sum = 0;
    for (u64 t = 0; t < n_; ++t) sum += at(det, t);
    return sum;
}

u64 DetTraceHistogram::group_order() const { return std::accumulate(counts_.begin(), counts_.end(), u64{0}); }

DetTraceHistogram det_trace_histogram(u64 n) {
    if (n < 2 || n > kMaxEnumerationModulus) throw DomainError("det_trace_histogram: modulus out of range");
    std::vector<char> unit(n);
    for (u64 r = 0; r < n; ++r) unit[r] = std::gcd(r, n) == 1;

    DetTraceHistogram h(n);
    for (u64 a = 0; a < n; ++a) {
        for (u64 b = 0; b < n; ++b) {
            for (u64 c = 0; c < n; ++c) {
                const u64 bc = b * c % n;
                for (u64 d = 0; d < n; ++d) {
                    const u64 det = (a * d + n * n - bc) % n;
                    if (unit[det]) ++h.at(det, a + d);
                }
            }
        }
    }
    return h;
}

DetTraceHistogram det_trace_histogram_crt(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    if (n > kMaxEnumerationModulus) throw DomainError("det_trace_histogram_crt: modulus out of range");
    const DetTraceHistogram h1 = det_trace_histogram(q1), h2 = det_trace_histogram(q2);
    DetTraceHistogram h(n);
    for (u64 det = 0; det < n; ++det) {
        for (u64 t = 0; t < n; ++t) h.at(det, t) = h1.at(det % q1, t % q1) * h2.at(det % q2, t % q2);
    }
    return h;
}

u64 count_det_trace_bruteforce(u64 n, i64 d, i64 t) {
    require_enumerable(n);
    require_unit(d, n);
    static std::mutex mutex;
    static std::map<u64, std::shared_ptr<const DetTraceHistogram>> cache;
    std::shared_ptr<const DetTraceHistogram> table;
    {
        std::lock_guard lock(mutex);
        auto& slot = cache[n];
        if (!slot) slot = std::make_shared<const DetTraceHistogram>(det_trace_histogram(n));
        table = slot;
    }
    return table->at(reduce(d, n), reduce(t, n));
}

i128 order_H_formula(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    require_small(q1, q2);
    auto part = [](u64 q) -> i128 {
        const i128 Q = q;
        return Q * Q * (Q - 1) * (Q * Q - 1) * (Q * Q - 1);
    };
    return part(q1) * part(q2);
}

i128 order_H_histogram(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    const DetTraceHistogram h = det_trace_histogram(n);
    i128 sum = 0;
    for (u64 det = 1; det < n; ++det) {
        if (std::gcd(det, n) != 1) continue;
        const i128 c = h.det_count(det);
        sum += c * c;
    }
    return sum;
}

i128 count_C_formula(u64 q1, u64 q2, i64 d, i64 s, i64 t) {
    return static_cast<i128>(count_det_trace_formula(q1, q2, d, s)) * count_det_trace_formula(q1, q2, d, t);
}

Rational class_ratio(u64 q1, u64 q2, i64 d, i64 s, i64 t) {
    return Rational(count_C_formula(q1, q2, d, s, t), order_H_formula(q1, q2));
}

namespace {

i128 ratio_denominator(u64 q1, u64 q2) {
    require_small(q1, q2);
    auto part = [](u64 q) -> i128 {
        const i128 Q = q;
        return (Q - 1) * (Q * Q - 1) * (Q * Q - 1);
    };
    return part(q1) * part(q2);
}

}  // namespace

Rational class_ratio_factored(u64 q1, u64 q2, i64 d, i64 s, i64 t) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    require_unit(d, n);
    const i64 dr = static_cast<i64>(reduce(d, n));
    const i64 sr = static_cast<i64>(reduce(s, n)), tr = static_cast<i64>(reduce(t, n));
    const i128 numerator = static_cast<i128>(factor_at(q1, disc_of(dr, sr))) * factor_at(q2, disc_of(dr, sr)) *
                           factor_at(q1, disc_of(dr, tr)) * factor_at(q2, disc_of(dr, tr));
    return Rational(numerator, ratio_denominator(q1, q2));
}

Rational class_ratio_leading(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const i128 Q1 = q1, Q2 = q2;
    return Rational(Q1 * Q1 * Q2 * Q2, ratio_denominator(q1, q2));
}

GL2CountResult gl2_count(u64 q1, u64 q2, i64 d, i64 s, i64 t) {
    const u64 n = q1 * q2;
    const i128 c = count_C_formula(q1, q2, d, s, t);
    const i128 h = order_H_formula(q1, q2);
    return {q1, q2, reduce(d, n), reduce(s, n), reduce(t, n), c, h, Rational(c, h)};
}

bool degree_bound_check(u64 q1, u64 q2, double z) {
    require_distinct_odd_primes(q1, q2);
    for (u64 q : {q1, q2}) {
        if (!(static_cast<double>(q) > z / 2 && static_cast<double>(q) <= z)) {
            throw DomainError("degree_bound_check: " + std::to_string(q) + " is outside the window (z/2, z]");
        }
    }
    return static_cast<long double>(order_H_formula(q1, q2)) <= std::pow(static_cast<long double>(z), 14.0L);
}

}  // namespace frobsieve
