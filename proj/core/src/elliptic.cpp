#include "frobsieve/elliptic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace frobsieve {

CurveQ::CurveQ(i64 a, i64 b) : a_(a), b_(b) {
    if (std::llabs(a) > kMaxCoefficient || std::llabs(b) > kMaxCoefficient) {
        throw DomainError("CurveQ: coefficients must satisfy |A|, |B| <= " + std::to_string(kMaxCoefficient));
    }
    core_ = 4 * a * a * a + 27 * b * b;
    if (core_ == 0) throw DomainError("CurveQ: singular curve (discriminant is zero)");
    bad_ = prime_factors(static_cast<u64>(std::llabs(core_)));
    bad_.push_back(2);
    bad_.push_back(3);
    std::sort(bad_.begin(), bad_.end());
    bad_.erase(std::unique(bad_.begin(), bad_.end()), bad_.end());
}

bool CurveQ::is_bad(u64 p) const noexcept {
    return p == 2 || p == 3 || core_ % static_cast<i64>(p) == 0;
}

CurveQ CurveQ::twist(i64 d) const { return CurveQ(a_ * d * d, b_ * d * d * d); }

namespace {

void require_good(const CurveQ& curve, u64 p) {
    if (p < 5 || !is_prime(p)) throw DomainError("trace: p = " + std::to_string(p) + " is not a prime > 3");
    if (curve.is_bad(p)) throw DomainError("trace: p = " + std::to_string(p) + " is a bad prime for the curve");
}

// Short-Weierstrass arithmetic over F_p in affine coordinates.
struct Point {
    u64 x = 0;
    u64 y = 0;
    bool inf = true;
};

class FpCurve {
public:
    FpCurve(u64 a, u64 b, u64 p) : a_(a % p), b_(b % p), p_(p) {}

    u64 p() const { return p_; }

    u64 rhs(u64 x) const { return (mul_mod(mul_mod(x, x, p_) + a_, x, p_) + b_) % p_; }

    Point neg(const Point& P) const { return P.inf ? P : Point{P.x, (p_ - P.y) % p_, false}; }

    Point add(const Point& P, const Point& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        u64 lambda;
        if (P.x == Q.x) {
            if ((P.y + Q.y) % p_ == 0) return {};
            const u64 num = (3 * mul_mod(P.x, P.x, p_) + a_) % p_;
            lambda = mul_mod(num, inv_mod(2 * P.y % p_, p_), p_);
        } else {
            const u64 num = (Q.y + p_ - P.y) % p_;
            const u64 den = (Q.x + p_ - P.x) % p_;
            lambda = mul_mod(num, inv_mod(den, p_), p_);
        }
        const u64 x3 = (mul_mod(lambda, lambda, p_) + 2 * p_ - P.x - Q.x) % p_;
        const u64 y3 = (mul_mod(lambda, (P.x + p_ - x3) % p_, p_) + p_ - P.y) % p_;
        return {x3, y3, false};
    }

    Point mul(Point P, u64 k) const {
        Point acc;
        while (k > 0) {
            if (k & 1) acc = add(acc, P);
            P = add(P, P);
            k >>= 1;
        }
        return acc;
    }

    /// Deterministic pseudo-random affine point driven by `state`.
    Point random_point(u64& state) const {
        for (;;) {
            const u64 x = splitmix(state) % p_;
            const u64 r = rhs(x);
            if (r == 0) return {x, 0, false};
            if (pow_mod(r, (p_ - 1) / 2, p_) != 1) continue;
            u64 y = sqrt_mod(r, p_);
            if (splitmix(state) & 1) y = p_ - y;
            return {x, y, false};
        }
    }

private:
    static u64 splitmix(u64& s) {
        u64 z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    u64 a_;
    u64 b_;
    u64 p_;
};

/// Exact order of P given a positive multiple n of it.
u64 order_from_multiple(const FpCurve& E, const Point& P, u64 n) {
    for (u64 q : prime_factors(n)) {
        while (n % q == 0 && E.mul(P, n / q).inf) n /= q;
    }
    return n;
}

/// Order of P, searching for a multiple inside [lo, hi] by baby-step /
/// giant-step. Returns 0 if no multiple is found (cannot happen for a
/// genuine point when [lo, hi] contains the group order).
u64 point_order(const FpCurve& E, const Point& P, u64 lo, u64 hi) {
    const u64 width = hi - lo;
    const u64 m = isqrt(width / 2) + 1;

    std::vector<std::pair<u64, u64>> baby;  // (x(jP), j)
    baby.reserve(m);
    Point jP = P;
    for (u64 j = 1; j <= m; ++j) {
        if (jP.inf) return order_from_multiple(E, P, j);
        baby.emplace_back(jP.x, j);
        jP = E.add(jP, P);
    }
    std::sort(baby.begin(), baby.end());
    for (std::size_t i = 1; i < baby.size(); ++i) {
        if (baby[i].first != baby[i - 1].first) continue;
        // jP = +-kP with j != k.
        const u64 j = baby[i].second, k = baby[i - 1].second;
        const Point a = E.mul(P, j), b = E.mul(P, k);
        return order_from_multiple(E, P, a.y == b.y ? (j > k ? j - k : k - j) : j + k);
    }

    const u64 step = 2 * m + 1;
    const Point giant = E.mul(P, step);
    Point R = E.mul(P, lo + m);
    for (u64 c = lo + m; c <= hi + m + step; c += step) {
        if (R.inf) return order_from_multiple(E, P, c);
        auto it = std::lower_bound(baby.begin(), baby.end(), std::pair<u64, u64>{R.x, 0});
        if (it != baby.end() && it->first == R.x) {
            const u64 j = it->second;
            const Point J = E.mul(P, j);
            return order_from_multiple(E, P, J.y == R.y ? c - j : c + j);
        }
        R = E.add(R, giant);
    }
    return 0;
}

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace

i64 ap_naive(const CurveQ& curve, u64 p) {
    require_good(curve, p);
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (u64 y = 1; y <= p / 2; ++y) chi[y * y % p] = 1;
    const u64 a = reduce(curve.a(), p), b = reduce(curve.b(), p);
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        const u64 r = (mul_mod(mul_mod(x, x, p) + a, x, p) + b) % p;
        sum += chi[r];
    }
    return -sum;
}

u64 count_points(const CurveQ& curve, u64 p) {
    return static_cast<u64>(static_cast<i64>(p) + 1 - ap_naive(curve, p));
}

u64 count_points_bruteforce(const CurveQ& curve, u64 p) {
    require_good(curve, p);
    const u64 a = reduce(curve.a(), p), b = reduce(curve.b(), p);
    u64 count = 1;  // point at infinity
    for (u64 x = 0; x < p; ++x) {
        const u64 r = (mul_mod(mul_mod(x, x, p) + a, x, p) + b) % p;
        for (u64 y = 0; y < p; ++y) {
            if (mul_mod(y, y, p) == r) ++count;
        }
    }
    return count;
}

i64 ap_bsgs(const CurveQ& curve, u64 p) {
    require_good(curve, p);
    if (p <= kBsgsMinPrime) return ap_naive(curve, p);

    const u64 span = isqrt(4 * p);  // |a_p| <= floor(2 sqrt p)
    const u64 lo = p + 1 - span, hi = p + 1 + span;

    const u64 a = reduce(curve.a(), p), b = reduce(curve.b(), p);
    const FpCurve E(a, b, p);

    u64 nonresidue = 2;
    while (pow_mod(nonresidue, (p - 1) / 2, p) != p - 1) ++nonresidue;
    const u64 d2 = mul_mod(nonresidue, nonresidue, p);
    const FpCurve T(mul_mod(a, d2, p), mul_mod(b, mul_mod(d2, nonresidue, p), p), p);

    u64 state = p * 0x2545f4914f6cdd1dULL ^ (static_cast<u64>(curve.a()) << 20) ^ static_cast<u64>(curve.b());
    u64 lcm_curve = 1, lcm_twist = 1;

    // The group order N lies in [lo, hi]; the twist has order 2p + 2 - N.
    auto unique_order = [&]() -> std::optional<u64> {
        std::optional<u64> found;
        for (u64 n = (lo + lcm_curve - 1) / lcm_curve * lcm_curve; n <= hi; n += lcm_curve) {
            if ((2 * p + 2 - n) % lcm_twist != 0) continue;
            if (found) return std::nullopt;
            found = n;
        }
        return found;
    };

    constexpr int kCurvePoints = 9;  // one plus up to 8 further points
    constexpr int kTwistPoints = 8;
    for (int i = 0; i < kCurvePoints + kTwistPoints; ++i) {
        const bool on_twist = i >= kCurvePoints;
        const FpCurve& G = on_twist ? T : E;
        const Point P = G.random_point(state);
        const u64 ord = point_order(G, P, lo, hi);
        if (ord == 0) break;
        (on_twist ? lcm_twist : lcm_curve) = lcm_u64(on_twist ? lcm_twist : lcm_curve, ord);
        if (auto n = unique_order()) return static_cast<i64>(p + 1) - static_cast<i64>(*n);
    }
    return ap_naive(curve, p);
}

i64 trace_of_frobenius(const CurveQ& curve, u64 p, TraceMethod method) {
    return method == TraceMethod::bsgs ? ap_bsgs(curve, p) : ap_naive(curve, p);
}

std::vector<TraceRecord> trace_range(const CurveQ& curve, u64 lo, u64 hi, TraceMethod method,
                                     std::vector<u64>* excluded) {
    std::vector<TraceRecord> out;
    for (u64 p : primes_in(lo, hi)) {
        if (curve.is_bad(p)) {
            if (excluded) excluded->push_back(p);
            continue;
        }
        out.push_back({p, trace_of_frobenius(curve, p, method)});
    }
    return out;
}

}  // namespace frobsieve
