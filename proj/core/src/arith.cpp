#include "frobsieve/arith.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace frobsieve {

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DomainError("inv_mod: argument not invertible");
    return reduce(t, m);
}

u64 sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0 || p == 2) return a;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    u64 c = pow_mod(z, q, p);
    u64 r = pow_mod(a, (q + 1) / 2, p);
    u64 t = pow_mod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            if (++i == m) throw DomainError("sqrt_mod: not a quadratic residue");
        }
        u64 b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        r = mul_mod(r, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These witnesses are deterministic below 2^64.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = pow_mod(a % n, d, n);
        if (a % n == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// ---------------------------------------------------------------------------

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi <= lo || hi < 2) return out;

    const u64 root = isqrt(hi);
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }

    std::vector<char> seg(kSieveBlock);
    const u64 start = std::max<u64>(lo + 1, 2);
    for (u64 low = start; low <= hi; low += kSieveBlock) {
        const u64 high = std::min<u64>(low + kSieveBlock - 1, hi);
        std::fill(seg.begin(), seg.end(), 1);
        for (u64 q : base) {
            if (q * q > high) break;
            u64 first = std::max(q * q, (low + q - 1) / q * q);
            for (u64 j = first; j <= high; j += q) seg[j - low] = 0;
        }
        for (u64 n = low; n <= high; ++n) {
            if (seg[n - low]) out.push_back(n);
        }
        if (high == hi) break;
    }
    return out;
}

u64 prime_pi(u64 n) { return primes_in(0, n).size(); }

PrimeTable::PrimeTable(u64 limit) : limit_(limit), primes_(primes_in(0, limit)) {}

// ---------------------------------------------------------------------------

int jacobi_symbol_u(u64 a, u64 n) {
    if (n == 0 || (n & 1) == 0) throw DomainError("jacobi_symbol: modulus must be odd and positive");
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const u64 r = n & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int jacobi_symbol(i64 a, i64 n) {
    if (n <= 0 || (n & 1) == 0) throw DomainError("jacobi_symbol: modulus must be odd and positive");
    return jacobi_symbol_u(reduce(a, static_cast<u64>(n)), static_cast<u64>(n));
}

SquarefreeDecomposition squarefree_decompose(u64 n) {
    if (n == 0) throw DomainError("squarefree_decompose: n must be positive");
    SquarefreeDecomposition out{n, 1, 1};
    u64 rest = n;
    for (u64 q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) out.m *= q;
        if (e & 1) out.D *= q;
    }
    out.D *= rest;
    return out;
}

bool is_squarefree(u64 n) { return n != 0 && squarefree_part(n) == n; }

bool is_perfect_square(u64 n) {
    const u64 r = isqrt(n);
    return r * r == n;
}

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    if (n == 0) return out;
    for (u64 q = 2; q < 1000 && q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Adaptive Simpson in u = log t, where the integrand e^u / u is smooth on
// the whole range.
double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

}  // namespace

double log_integral(double x) {
    if (!(x > 2.0)) throw DomainError("log_integral: x must exceed 2");
    const std::function<double(double)> f = [](double u) { return std::exp(u) / u; };
    const double a = std::log(2.0), b = std::log(x);
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(a, b, fa, fm, fb);
    // x / log x is within a small factor of the answer; 1e-11 of it leaves
    // headroom under the 1e-9 relative target.
    const double scale = std::max(x / std::log(x) - 2.0 / std::log(2.0), (x - 2.0) / std::log(x));
    return adaptive(f, a, b, fa, fm, fb, whole, 1e-11 * scale, 60);
}

}  // namespace frobsieve
