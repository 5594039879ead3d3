#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frobsieve/config.hpp"
#include "frobsieve/gl2count.hpp"
#include "frobsieve/sieve.hpp"
#include "frobsieve/verify.hpp"

using namespace frobsieve;

namespace {

// Literal double loop over ordered pairs q1 != q2 for the first form.
double char_term_double_loop(const Multiset& a, const SievePrimeSet& w) {
    double sum = 0;
    for (u64 q1 : w.primes) {
        for (u64 q2 : w.primes) {
            if (q1 == q2) continue;
            i64 s = 0;
            for (u64 x : a.elements) s += jacobi_symbol_u(x, q1) * jacobi_symbol_u(x, q2);
            sum += static_cast<double>(std::llabs(s));
        }
    }
    return sum / static_cast<double>(w.P() * w.P());
}

u64 scan_squares(const Multiset& a) {
    u64 n = 0;
    for (u64 x : a.elements) {
        u64 r = 0;
        while ((r + 1) * (r + 1) <= x) ++r;
        n += r * r == x;
    }
    return n;
}

}  // namespace

TEST(Window, Examples) {
    EXPECT_EQ(build_prime_window(10).primes, (std::vector<u64>{7}));
    const auto w20 = build_prime_window(20);
    EXPECT_EQ(w20.primes, (std::vector<u64>{11, 13, 17, 19}));
    EXPECT_EQ(w20.P(), 4u);
    EXPECT_EQ(build_prime_window(4).primes, (std::vector<u64>{3}));
    EXPECT_EQ(build_prime_window(50).primes, (std::vector<u64>{29, 31, 37, 41, 43, 47}));
}

TEST(Window, RejectsSmallZ) {
    EXPECT_THROW(build_prime_window(2.5), DomainError);
    EXPECT_THROW(build_prime_window(3.5), DomainError);
    EXPECT_THROW(build_prime_window(std::nan("")), DomainError);
}

TEST(Window, PrimeCountAsymptotic) {
    for (double z : {1e3, 1e4, 1e5, 1e6}) {
        const double predicted = z / (2 * std::log(z));
        const double P = static_cast<double>(build_prime_window(z).P());
        EXPECT_LT(std::abs(P - predicted) / predicted, 0.25) << z;
    }
}

TEST(SquareCount, Examples) {
    EXPECT_EQ(square_count_exact({{1, 4, 9}}), 3u);
    EXPECT_EQ(square_count_exact({{2, 3, 5}}), 0u);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<u64> dist(1, 1'000'000);
    Multiset a;
    for (int i = 0; i < 1000; ++i) a.elements.push_back(i % 4 == 0 ? (dist(rng) % 1000) * (dist(rng) % 1000) : dist(rng));
    for (auto& x : a.elements) x = std::max<u64>(x, 1);
    EXPECT_EQ(square_count_exact(a), scan_squares(a));
}

TEST(SieveV1, SingletonAndSquares) {
    const auto w = build_prime_window(20);
    const SieveReport one = sieve_bound_v1({{1}}, w);
    EXPECT_DOUBLE_EQ(one.term_main, 0.25);
    EXPECT_EQ(one.version, 1);

    Multiset squares;
    for (u64 k = 1; k <= 7; ++k) squares.elements.push_back(k * k);  // max 49 <= e^4
    const SieveReport r = sieve_bound_v1(squares, w);
    const double n = static_cast<double>(squares.size());
    EXPECT_DOUBLE_EQ(r.term_char, 3.0 * n / 4.0);
    EXPECT_EQ(r.exact_square_count, squares.size());
}

TEST(SieveV1, MatchesDoubleLoop) {
    const auto w = build_prime_window(200);  // P = 21, e^P > 10^9
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<u64> dist(1, 1'000'000);
    Multiset a;
    for (int i = 0; i < 500; ++i) a.elements.push_back(dist(rng));
    const SieveReport r = sieve_bound_v1(a, w);
    EXPECT_NEAR(r.term_char, char_term_double_loop(a, w), 1e-9);
    EXPECT_DOUBLE_EQ(r.bound_total, r.term_main + r.term_char);
}

TEST(SieveV1, RejectsWhenPreconditionFails) {
    EXPECT_THROW(sieve_bound_v1({{100}}, build_prime_window(4)), DomainError);  // log 100 > P = 1
}

TEST(SieveV2, SingletonSquare) {
    const auto w = build_prime_window(20);
    const SieveReport r = sieve_bound_v2({{49}}, w);
    EXPECT_EQ(r.exact_square_count, 1u);
    EXPECT_DOUBLE_EQ(r.bound_total, 0.25 + 1.0);
    EXPECT_EQ(r.term_linear, 0.0);
}

TEST(SieveV2, RandomMultisetsNeverViolate) {
    const auto w = build_prime_window(50);
    for (const auto& a : random_sieve_multisets(100, 1000, 20240601)) {
        const SieveReport r = sieve_bound_v2(a, w);
        ASSERT_LE(static_cast<double>(r.exact_square_count), r.bound_total);
        ASSERT_GT(r.exact_square_count, 200u);
    }
}

TEST(SieveV2, OmegaTermsCountWindowDivisors) {
    const auto w = build_prime_window(20);  // 11, 13, 17, 19
    const SieveReport r = sieve_bound_v2({{11 * 13, 17, 2}}, w);
    EXPECT_DOUBLE_EQ(r.term_linear, 2.0 * 3.0 / 4.0);
    EXPECT_DOUBLE_EQ(r.term_quadratic, 5.0 / 16.0);
}

TEST(CurveMultiset, SquaresAreMatches) {
    const auto [e1, e2] = demo_pair();
    const MatchResult m = count_equal_fields(e1, e2, 10'000);
    const Multiset a = curve_pair_multiset(m);
    ASSERT_EQ(a.size(), m.records.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(is_perfect_square(a.elements[i]), m.records[i].matched);
        ASSERT_LE(a.elements[i], 16u * 10'000 * 10'000);
    }
    const SieveReport r = sieve_bound_v2(a, build_prime_window(30));
    EXPECT_EQ(r.exact_square_count, 16u);
    EXPECT_LE(16.0, r.bound_total);

    const Multiset self = curve_pair_multiset(e1, e1, 2000);
    EXPECT_EQ(square_count_exact(self), self.size());
}

TEST(PrimeCharSum, CrossPathAndFrozen) {
    const auto [e1, e2] = demo_pair();
    const MatchResult m = count_equal_fields(e1, e2, 10'000);
    EXPECT_EQ(prime_char_sum_direct(m, 3, 5), 28);
    EXPECT_EQ(prime_char_sum_by_classes(chebotarev_empirical(m, 3, 5)), 28);
    EXPECT_EQ(prime_char_sum(e1, e2, 10'000, 3, 5), 28);
    for (auto [q1, q2] : {std::pair<u64, u64>{3, 7}, {5, 7}, {3, 11}}) {
        const i64 direct = prime_char_sum_direct(m, q1, q2);
        EXPECT_EQ(direct, prime_char_sum_by_classes(chebotarev_empirical(m, q1, q2)));
        EXPECT_LE(std::llabs(direct), static_cast<i64>(m.records.size()));
    }
    EXPECT_GE(prime_char_sum(e1, e1, 5000, 3, 5), 0);
}

TEST(ZChoice, GrhFormula) {
    EXPECT_NEAR(choose_z_grh(std::exp(30.0)), std::exp(1.0) * std::pow(30.0, -1.0 / 15), 1e-12);
    double last = 0;
    for (double x = 100; x < 1e15; x *= 1.7) {
        const double z = choose_z_grh(x);
        EXPECT_GT(z, last);
        last = z;
    }
    EXPECT_THROW(choose_z_grh(99), DomainError);
}

TEST(ZChoice, GrhGrowthCondition) {
    // x^{1/30} overtakes (log x)^{1.1} only once log x is near 175.
    EXPECT_FALSE(z_exceeds_log_power(1e10, choose_z_grh(1e10), 0.1));
    EXPECT_FALSE(z_exceeds_log_power(std::exp(150.0), choose_z_grh(std::exp(150.0)), 0.1));
    EXPECT_TRUE(z_exceeds_log_power(std::exp(200.0), choose_z_grh(std::exp(200.0)), 0.1));
}

TEST(ZChoice, Unconditional) {
    const double l = std::log(1e6);
    EXPECT_NEAR(choose_z_uncond(1e6), std::pow(l, 1.0 / 42) * std::pow(std::log(l), -1.0 / 21), 1e-12);
    EXPECT_GT(choose_z_uncond(1e9), choose_z_uncond(1e6));
    EXPECT_NEAR(choose_z_uncond(1e6, 3.0), 3.0 * choose_z_uncond(1e6), 1e-12);
    EXPECT_TRUE(uncond_z_condition(1e100, choose_z_uncond(1e100), 1.0));
    EXPECT_FALSE(uncond_z_condition(1e6, 10.0, 1.0));
    EXPECT_THROW(choose_z_uncond(50), DomainError);
    EXPECT_THROW(choose_z_uncond(1e6, 0.0), DomainError);
}

TEST(MainTerm, Assembly) {
    const double coefficient = 225.0 / (2.0 * 64 * 4 * 576);
    EXPECT_NEAR(main_term_assembly(3, 5, 1e4), log_integral(1e4) * coefficient * 8, 1e-9);
    const double upper = log_integral(1e4) * 225.0 / (64.0 * 576);
    // The triple sum attains (q1 - 1)(q2 - 1), so the bound is reached.
    EXPECT_NEAR(main_term_assembly(3, 5, 1e4), upper, upper * 1e-12);
    EXPECT_GT(main_term_assembly(5, 7, 1e6), 0.0);
    EXPECT_THROW(main_term_assembly(3, 3, 1e4), DomainError);
}

TEST(BoundShapes, ValuesAndMonotonicity) {
    EXPECT_NEAR(theorem_bound_curves(1e6, BoundShape::grh), std::pow(10.0, 5.8) * std::pow(std::log(1e6), 1.0 / 15),
                1e-6);
    double g = 0, u = 0;
    for (double x = 1e3; x <= 1e9; x *= 1.5) {
        const double gx = theorem_bound_curves(x, BoundShape::grh), ux = theorem_bound_curves(x, BoundShape::uncond);
        EXPECT_GT(gx, g);
        EXPECT_GT(ux, u);
        g = gx;
        u = ux;
    }
    EXPECT_THROW(theorem_bound_curves(10, BoundShape::grh), DomainError);
    EXPECT_NEAR(loglog_shape(1e6), std::log(std::log(1e6)), 1e-15);
}
