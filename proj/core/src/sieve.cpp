#include "frobsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "frobsieve/charsum.hpp"
#include "frobsieve/gl2count.hpp"

namespace frobsieve {

SievePrimeSet build_prime_window(double z) {
    if (!(z >= kMinWindowZ) || !std::isfinite(z)) {
        throw DomainError(fmt::format("build_prime_window: z = {} gives an empty window or one containing 2", z));
    }
    const u64 hi = static_cast<u64>(std::floor(z));
    const u64 lo = static_cast<u64>(std::floor(z / 2));
    SievePrimeSet window{z, primes_in(lo, hi)};
    if (window.primes.empty()) throw DomainError("build_prime_window: empty window");
    return window;
}

Multiset curve_pair_multiset(const MatchResult& matches) {
    Multiset out;
    out.elements.reserve(matches.records.size());
    for (const auto& r : matches.records) {
        const u64 u = 4 * r.p - static_cast<u64>(r.a_p * r.a_p);
        const u64 v = 4 * r.p - static_cast<u64>(r.b_p * r.b_p);
        out.elements.push_back(u * v);
    }
    return out;
}

Multiset curve_pair_multiset(const CurveQ& e1, const CurveQ& e2, u64 x, const TraceOptions& options) {
    return curve_pair_multiset(count_equal_fields(e1, e2, x, options));
}

u64 square_count_exact(const Multiset& multiset) {
    return static_cast<u64>(std::count_if(multiset.elements.begin(), multiset.elements.end(), is_perfect_square));
}

namespace {

// Legendre symbols of every element against every window prime, plus the
// per-element count of window primes dividing it.
struct SymbolMatrix {
    std::vector<std::vector<signed char>> chi;  // [prime][element]
    std::vector<u64> omega;                     // [element]
};

SymbolMatrix symbol_matrix(const Multiset& multiset, const SievePrimeSet& window) {
    SymbolMatrix m;
    m.omega.assign(multiset.size(), 0);
    m.chi.reserve(window.P());
    for (u64 q : window.primes) {
        std::vector<signed char> row(multiset.size());
        for (std::size_t i = 0; i < multiset.size(); ++i) {
            const u64 alpha = multiset.elements[i];
            if (alpha == 0) throw DomainError("sieve: multiset elements must be positive");
            row[i] = static_cast<signed char>(jacobi_symbol_u(alpha % q, q));
            if (row[i] == 0) ++m.omega[i];
        }
        m.chi.push_back(std::move(row));
    }
    return m;
}

/// |sum_alpha (alpha / q_i q_j)| for every unordered pair i < j.
std::vector<u64> pair_sums(const SymbolMatrix& m) {
    std::vector<u64> out;
    const std::size_t P = m.chi.size();
    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = i + 1; j < P; ++j) {
            i64 s = 0;
            const auto& a = m.chi[i];
            const auto& b = m.chi[j];
            for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
            out.push_back(static_cast<u64>(s < 0 ? -s : s));
        }
    }
    return out;
}

}  // namespace

SieveReport sieve_bound_v1(const Multiset& multiset, const SievePrimeSet& window) {
    const double P = static_cast<double>(window.P());
    if (!multiset.elements.empty()) {
        const u64 largest = *std::max_element(multiset.elements.begin(), multiset.elements.end());
        if (std::log(static_cast<double>(largest)) > P) {
            throw DomainError(fmt::format("sieve_bound_v1: max element {} exceeds e^P with P = {}; choose a larger z",
                                          largest, window.P()));
        }
    }
    const SymbolMatrix m = symbol_matrix(multiset, window);
    const auto sums = pair_sums(m);

    SieveReport r;
    r.version = 1;
    r.z = window.z;
    r.P = window.P();
    r.size = multiset.size();
    r.exact_square_count = square_count_exact(multiset);
    r.term_main = static_cast<double>(multiset.size()) / P;
    // Ordered pairs: each unordered pair counted twice.
    r.term_char = 2.0 * static_cast<double>(std::accumulate(sums.begin(), sums.end(), u64{0})) / (P * P);
    r.bound_total = r.term_main + r.term_char;
    return r;
}

SieveReport sieve_bound_v2(const Multiset& multiset, const SievePrimeSet& window) {
    const SymbolMatrix m = symbol_matrix(multiset, window);
    const auto sums = pair_sums(m);
    const u64 max_pair = sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
    u64 omega_sum = 0, omega_sq = 0;
    for (u64 w : m.omega) {
        omega_sum += w;
        omega_sq += w * w;
    }

    SieveReport r;
    r.version = 2;
    r.z = window.z;
    r.P = window.P();
    r.size = multiset.size();
    r.exact_square_count = square_count_exact(multiset);
    const double P = static_cast<double>(r.P);
    r.term_main = static_cast<double>(r.size) / P;
    r.term_char = static_cast<double>(max_pair);
    r.term_linear = 2.0 * static_cast<double>(omega_sum) / P;
    r.term_quadratic = static_cast<double>(omega_sq) / (P * P);
    r.bound_total = r.term_main + r.term_char + r.term_linear + r.term_quadratic;

    // Exact form of S <= bound, scaled by P^2.
    const u128 P128 = r.P;
    const u128 rhs = P128 * r.size + P128 * P128 * max_pair + 2 * P128 * omega_sum + omega_sq;
    if (P128 * P128 * r.exact_square_count > rhs) {
        throw std::logic_error("sieve_bound_v2: square count exceeds the sieve bound");
    }
    return r;
}

std::string sieve_report_csv_header() {
    return "version,z,P,size,exact,term_main,term_char,term_linear,term_quadratic,bound_total";
}

std::string to_csv_row(const SieveReport& r) {
    return fmt::format("{},{:.10g},{},{},{},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g}", r.version, r.z, r.P, r.size,
                       r.exact_square_count, r.term_main, r.term_char, r.term_linear, r.term_quadratic, r.bound_total);
}

// ---------------------------------------------------------------------------

i64 prime_char_sum_direct(const MatchResult& matches, u64 q1, u64 q2) {
    require_distinct_odd_primes(q1, q2);
    const u64 n = q1 * q2;
    i64 sum = 0;
    for (const auto& r : matches.records) {
        if (r.p % q1 == 0 || r.p % q2 == 0) continue;
        const u64 u = 4 * r.p - static_cast<u64>(r.a_p * r.a_p);
        const u64 v = 4 * r.p - static_cast<u64>(r.b_p * r.b_p);
        sum += jacobi_symbol_u(mul_mod(u % n, v % n, n), n);
    }
    return sum;
}

i64 prime_char_sum_by_classes(const ChebotarevTable& table) {
    const u64 n = table.modulus();
    const i64 nn = static_cast<i64>(n);
    i64 sum = 0;
    for (i64 d = 1; d < nn; ++d) {
        if (std::gcd(static_cast<u64>(d), n) != 1) continue;
        for (i64 s = 0; s < nn; ++s) {
            const i64 u = 4 * d - s * s;
            for (i64 t = 0; t < nn; ++t) {
                const u64 count = table.at(static_cast<u64>(d), static_cast<u64>(s), static_cast<u64>(t));
                if (count == 0) continue;
                const i64 v = 4 * d - t * t;
                sum += jacobi_symbol(u * v, nn) * static_cast<i64>(count);
            }
        }
    }
    return sum;
}

i64 prime_char_sum(const CurveQ& e1, const CurveQ& e2, u64 x, u64 q1, u64 q2, const TraceOptions& options) {
    return prime_char_sum_direct(count_equal_fields(e1, e2, x, options), q1, q2);
}

// ---------------------------------------------------------------------------

namespace {

void require_x_at_least_100(double x, const char* what) {
    if (!(x >= 100.0)) throw DomainError(fmt::format("{}: x must be at least 100", what));
}

}  // namespace

double choose_z_grh(double x) {
    require_x_at_least_100(x, "choose_z_grh");
    return std::pow(x, 1.0 / 30.0) * std::pow(std::log(x), -1.0 / 15.0);
}

double choose_z_uncond(double x, double c3) {
    require_x_at_least_100(x, "choose_z_uncond");
    if (!(c3 > 0)) throw DomainError("choose_z_uncond: c3 must be positive");
    const double lx = std::log(x);
    return c3 * std::pow(lx, 1.0 / 42.0) * std::pow(std::log(lx), -1.0 / 21.0);
}

bool uncond_z_condition(double x, double z, double c2) {
    if (!(x > 1.0) || !(z > 0) || !(c2 > 0)) throw DomainError("uncond_z_condition: arguments must be positive");
    const double lz = std::log(z);
    if (lz == 0) return true;
    return std::log(c2) + 42.0 * lz + 2.0 * std::log(std::abs(lz)) <= std::log(std::log(x));
}

bool z_exceeds_log_power(double x, double z, double eps) { return z > std::pow(std::log(x), 1.0 + eps); }

double main_term_assembly(u64 q1, u64 q2, double x) {
    const double coefficient = class_ratio_leading(q1, q2).to_double();
    return log_integral(x) * coefficient * static_cast<double>(triple_sum_factored(q1, q2));
}

double theorem_bound_curves(double x, BoundShape which) {
    require_x_at_least_100(x, "theorem_bound_curves");
    const double lx = std::log(x);
    if (which == BoundShape::grh) return std::pow(x, 29.0 / 30.0) * std::pow(lx, 1.0 / 15.0);
    return x * std::pow(std::log(lx), 22.0 / 21.0) / std::pow(lx, 43.0 / 42.0);
}

double loglog_shape(double x) {
    if (!(x > std::exp(1.0))) throw DomainError("loglog_shape: x must exceed e");
    return std::log(std::log(x));
}

}  // namespace frobsieve
