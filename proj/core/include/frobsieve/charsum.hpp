#pragma once

// Quadratic character sums modulo odd primes and modulo q1*q2: the complete
// sum of ((4d - x^2)/q), the Jacobi sum J(chi, chi^{-1}), and the triple sum
// over (d, s, t) whose size governs the main term of the sieve.

#include <optional>
#include <utility>
#include <vector>

#include "frobsieve/arith.hpp"
#include "frobsieve/rational.hpp"

namespace frobsieve {

/// sum_{x mod q} ((4d - x^2) / q), evaluated term by term.
i64 weil_sum_bruteforce(u64 q, i64 d);

/// -((-1)/q): -1 for q = 1 mod 4, +1 for q = 3 mod 4. Independent of d.
i64 weil_sum_closed(u64 q, i64 d);

/// (-((-1)/q) + (d/q)) / 2. This reduction does not equal the complete sum
/// (at q = 5, d = 1 it gives 0 against a true value of -1); it is kept so
/// verification reports can show the discrepancy next to the real value.
Rational half_weighted_reduction(u64 q, i64 d);

/// J(chi, chi) = sum_{a mod q} chi(a) chi(1 - a), chi the Legendre symbol.
i64 jacobi_sum(u64 q);

/// -chi(-1).
i64 jacobi_sum_closed(u64 q);

struct CharSumTable {
    u64 q;
    std::vector<std::pair<u64, i64>> values;  // (unit d, brute-force sum)
};

CharSumTable build_charsum_table(u64 q);

/// Literal triple loop runs only up to this modulus (n^3 symbol lookups).
inline constexpr u64 kTripleSumDirectLimit = 1000;

/// sum_{d unit} sum_s sum_t ((4d - s^2)(4d - t^2) / q1q2), literally.
i64 triple_sum_direct(u64 q1, u64 q2);

/// sum_{d unit} (sum_u ((4d - u^2) / q1q2))^2, still modulo q1q2.
i64 triple_sum_squared(u64 q1, u64 q2);

/// Product over i of sum_{d unit mod q_i} (weil sum mod q_i)^2.
i64 triple_sum_factored(u64 q1, u64 q2);

struct TripleSum {
    std::optional<i64> direct;  // present when q1 q2 <= kTripleSumDirectLimit
    i64 squared;
    i64 factored;
    i64 bound;  // (q1 - 1)(q2 - 1)

    bool consistent() const { return (!direct || *direct == factored) && squared == factored; }
};

TripleSum triple_sum(u64 q1, u64 q2);

}  // namespace frobsieve
