#pragma once

// The square sieve in both forms, applied to the multiset
// {(4p - a_p^2)(4p - b_p^2)}: prime windows (z/2, z], exact square counts,
// the four sieve terms, the prime character sum in direct and residue-class
// form, the two z-choices and the bound shapes used for growth plots.

#include <string>
#include <vector>

#include "frobsieve/frobenius.hpp"

namespace frobsieve {

/// The odd primes q with z/2 < q <= z.
struct SievePrimeSet {
    double z = 0;
    std::vector<u64> primes;

    std::size_t P() const noexcept { return primes.size(); }
};

/// Smallest z accepted: below 4 the window is empty or contains 2, for
/// which the Jacobi symbol is undefined.
inline constexpr double kMinWindowZ = 4.0;

SievePrimeSet build_prime_window(double z);

struct Multiset {
    std::vector<u64> elements;  // each >= 1, duplicates allowed

    std::size_t size() const noexcept { return elements.size(); }
};

/// One element (4p - a_p^2)(4p - b_p^2) per record, ascending p.
Multiset curve_pair_multiset(const MatchResult& matches);
Multiset curve_pair_multiset(const CurveQ& e1, const CurveQ& e2, u64 x, const TraceOptions& options = {});

u64 square_count_exact(const Multiset& multiset);

struct SieveReport {
    int version = 0;
    double z = 0;
    std::size_t P = 0;
    std::size_t size = 0;
    u64 exact_square_count = 0;
    double term_main = 0;       // #A / P
    double term_char = 0;       // v1: (1/P^2) sum over q1 != q2; v2: max over q1 != q2
    double term_linear = 0;     // v2: (2/P) sum omega(alpha)
    double term_quadratic = 0;  // v2: (1/P^2) sum omega(alpha)^2
    double bound_total = 0;
};

/// First form. Requires max(A) <= e^P and throws DomainError otherwise.
/// Terms are reported without the implied constant, so bound_total is
/// descriptive, not an inequality.
SieveReport sieve_bound_v1(const Multiset& multiset, const SievePrimeSet& window);

/// Second form: exact_square_count <= bound_total always holds.
SieveReport sieve_bound_v2(const Multiset& multiset, const SievePrimeSet& window);

std::string sieve_report_csv_header();
std::string to_csv_row(const SieveReport& report);

/// sum over records with p not dividing q1 q2 of
/// ((4p - a_p^2)(4p - b_p^2) / q1 q2).
i64 prime_char_sum_direct(const MatchResult& matches, u64 q1, u64 q2);

/// Same sum regrouped by residue classes (d, s, t) mod q1 q2, weighting each
/// class symbol by the empirical class count.
i64 prime_char_sum_by_classes(const ChebotarevTable& table);

i64 prime_char_sum(const CurveQ& e1, const CurveQ& e2, u64 x, u64 q1, u64 q2, const TraceOptions& options = {});

/// x^(1/30) (log x)^(-1/15); x >= 100.
double choose_z_grh(double x);

/// c3 (log x)^(1/42) (log log x)^(-1/21); x >= 100, c3 > 0.
double choose_z_uncond(double x, double c3 = 1.0);

/// c2 z^42 (log z)^2 <= log x, computed in log space.
bool uncond_z_condition(double x, double z, double c2);

/// z > (log x)^(1 + eps).
bool z_exceeds_log_power(double x, double z, double eps);

/// li(x) * q1^2 q2^2 / ((q1-1)(q1^2-1)^2 (q2-1)(q2^2-1)^2) * triple sum.
double main_term_assembly(u64 q1, u64 q2, double x);

enum class BoundShape { grh, uncond };

/// x^(29/30) (log x)^(1/15), or x (log log x)^(22/21) / (log x)^(43/42);
/// unit constant, x >= 100.
double theorem_bound_curves(double x, BoundShape which);

/// log log x, the conjectured growth scale for non-isogenous pairs.
double loglog_shape(double x);

}  // namespace frobsieve
