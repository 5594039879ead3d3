#pragma once

// Integer and modular arithmetic shared by every other module: segmented
// prime generation, Jacobi symbols, squarefree decomposition, exact square
// detection and the offset logarithmic integral.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobsieve {

/// Raised when an argument violates an operation's domain (even Jacobi
/// modulus, bad reduction prime, non-squarefree field tag, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 v);

// ---------------------------------------------------------------------------
// Modular helpers (64-bit moduli, 128-bit intermediates)
// ---------------------------------------------------------------------------

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Reduce a signed value into [0, m).
constexpr u64 reduce(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

/// Square root of a quadratic residue a modulo an odd prime p (Tonelli-Shanks).
u64 sqrt_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Integer square root: the largest r with r*r <= n.
u64 isqrt(u64 n);

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// Flags per sieve segment; 2^18 keeps one segment inside L2.
inline constexpr std::size_t kSieveBlock = std::size_t{1} << 18;

/// All primes q with lo < q <= hi, ascending. Segmented, so memory stays
/// O(sqrt(hi) + kSieveBlock) regardless of the range width.
std::vector<u64> primes_in(u64 lo, u64 hi);

/// Number of primes <= n.
u64 prime_pi(u64 n);

class PrimeTable {
public:
    explicit PrimeTable(u64 limit);

    u64 limit() const noexcept { return limit_; }
    std::span<const u64> primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

private:
    u64 limit_;
    std::vector<u64> primes_;
};

// ---------------------------------------------------------------------------
// Symbols and decompositions
// ---------------------------------------------------------------------------

/// Jacobi symbol (a/n) for odd n >= 1. Throws DomainError otherwise.
int jacobi_symbol(i64 a, i64 n);

/// Same as jacobi_symbol but for an unsigned numerator (products of two
/// Hasse-bounded factors can exceed INT64_MAX).
int jacobi_symbol_u(u64 a, u64 n);

struct SquarefreeDecomposition {
    u64 n;
    u64 D;  // squarefree
    u64 m;  // n == D * m * m
};

/// n = D * m^2 with D squarefree, by trial division up to sqrt(n).
SquarefreeDecomposition squarefree_decompose(u64 n);

inline u64 squarefree_part(u64 n) { return squarefree_decompose(n).D; }

bool is_squarefree(u64 n);

bool is_perfect_square(u64 n);

/// Distinct prime factors of n (Pollard rho above the trial-division range).
std::vector<u64> prime_factors(u64 n);

/// li(x) = integral from 2 to x of dt / log t, relative error <= 1e-9.
double log_integral(double x);

}  // namespace frobsieve
