#include "frobsieve/charsum.hpp"

#include <numeric>
#include <string>

#include "frobsieve/gl2count.hpp"

namespace frobsieve {

namespace {

void require_odd_prime(u64 q) {
    if (q == 2 || !is_prime(q)) throw DomainError(std::to_string(q) + " is not an odd prime");
}

void require_unit(u64 q, i64 d) {
    if (reduce(d, q) == 0) throw DomainError("d must be a unit modulo " + std::to_string(q));
}

int legendre(i64 a, u64 q) { return jacobi_symbol(a, static_cast<i64>(q)); }

/// Jacobi symbol of every residue mod n.
std::vector<signed char> symbol_table(u64 n) {
    std::vector<signed char> table(n);
    for (u64 r = 0; r < n; ++r) table[r] = static_cast<signed char>(jacobi_symbol_u(r, n));
    return table;
}

}  // namespace

i64 weil_sum_bruteforce(u64 q, i64 d) {
    require_odd_prime(q);
    require_unit(q, d);
    const i64 dd = static_cast<i64>(reduce(d, q));
    i64 sum = 0;
    for (i64 x = 0; x < static_cast<i64>(q); ++x) sum += legendre(4 * dd - x * x, q);
    return sum;
}

i64 weil_sum_closed(u64 q, i64 d) {
    require_odd_prime(q);
    require_unit(q, d);
    return -legendre(-1, q);
}

Rational half_weighted_reduction(u64 q, i64 d) {
    require_odd_prime(q);
    require_unit(q, d);
    return Rational(-legendre(-1, q) + legendre(d, q), 2);
}

i64 jacobi_sum(u64 q) {
    require_odd_prime(q);
    const i64 qq = static_cast<i64>(q);
    i64 sum = 0;
    for (i64 a = 0; a < qq; ++a) sum += legendre(a, q) * legendre(1 - a, q);
    return sum;
}

i64 jacobi_sum_closed(u64 q) {
    require_odd_prime(q);
    return -legendre(-1, q);
}

CharSumTable build_charsum_table(u64 q) {
    require_odd_prime(q);
    CharSumTable table{q, {}};
    for (u64 d = 1; d < q; ++d) table.values.emplace_back(d, weil_sum_bruteforce(q, static_cast<i64>(d)));
    return table;
}

i64 triple_sum_direct(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    if (n > kTripleSumDirectLimit) throw DomainError("triple_sum_direct: modulus above the direct-loop limit");
    const auto symbol = symbol_table(n);
    std::vector<u64> values(n);
    i64 total = 0;
    for (u64 d = 1; d < n; ++d) {
        if (std::gcd(d, n) != 1) continue;
        for (u64 s = 0; s < n; ++s) values[s] = (4 * d + n * n - s * s % n) % n;
        for (u64 s = 0; s < n; ++s) {
            const u64 vs = values[s];
            for (u64 t = 0; t < n; ++t) total += symbol[vs * values[t] % n];
        }
    }
    return total;
}

i64 triple_sum_squared(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    i64 total = 0;
    for (u64 d = 1; d < n; ++d) {
        if (std::gcd(d, n) != 1) continue;
        i64 inner = 0;
        for (u64 u = 0; u < n; ++u) inner += jacobi_symbol_u((4 * d + n * n - u * u % n) % n, n);
        total += inner * inner;
    }
    return total;
}

i64 triple_sum_factored(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    auto per_prime = [](u64 q) {
        i64 sum = 0;
        for (u64 d = 1; d < q; ++d) {
            const i64 w = weil_sum_bruteforce(q, static_cast<i64>(d));
            sum += w * w;
        }
        return sum;
    };
    return per_prime(q1) * per_prime(q2);
}

TripleSum triple_sum(u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    TripleSum out{};
    if (q1 * q2 <= kTripleSumDirectLimit) out.direct = triple_sum_direct(q1, q2);
    out.squared = triple_sum_squared(q1, q2);
    out.factored = triple_sum_factored(q1, q2);
    out.bound = static_cast<i64>((q1 - 1) * (q2 - 1));
    return out;
}

}  // namespace frobsieve
