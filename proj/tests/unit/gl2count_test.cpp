#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <string>

#include "frobsieve/gl2count.hpp"

using namespace frobsieve;

namespace {

std::vector<u64> units(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d < n; ++d) {
        if (std::gcd(d, n) == 1) out.push_back(d);
    }
    return out;
}

}  // namespace

TEST(DetTrace, FrozenCounts) {
    EXPECT_EQ(count_det_trace_bruteforce(3, 1, 0), 6u);
    EXPECT_EQ(count_det_trace_prime(3, 1, 0), 6);
    EXPECT_EQ(count_det_trace_formula(3, 5, 1, 0), 180);
    EXPECT_EQ(count_det_trace_formula(3, 5, 1, 2), 225);
    EXPECT_EQ(count_det_trace_bruteforce(15, 1, 0), 180u);
    EXPECT_EQ(count_det_trace_bruteforce(15, 1, 2), 225u);
    EXPECT_EQ(det_trace_histogram(3).group_order(), 48u);
    EXPECT_EQ(det_trace_histogram(15).group_order(), 23040u);
}

TEST(DetTrace, SinglePrimeFormulaExhaustive) {
    for (u64 q : {3, 5, 7, 11, 13}) {
        for (u64 d : units(q)) {
            for (u64 t = 0; t < q; ++t) {
                ASSERT_EQ(count_det_trace_prime(q, static_cast<i64>(d), static_cast<i64>(t)),
                          static_cast<i64>(count_det_trace_bruteforce(q, static_cast<i64>(d), static_cast<i64>(t))));
            }
        }
    }
}

TEST(DetTrace, PairFormulaExhaustive) {
    for (auto [q1, q2] : {std::pair<u64, u64>{3, 5}, {3, 7}, {5, 7}}) {
        const u64 n = q1 * q2;
        for (u64 d : units(n)) {
            for (u64 t = 0; t < n; ++t) {
                const i64 f = count_det_trace_formula(q1, q2, static_cast<i64>(d), static_cast<i64>(t));
                ASSERT_EQ(f, static_cast<i64>(count_det_trace_bruteforce(n, static_cast<i64>(d), static_cast<i64>(t))));
                ASSERT_EQ(f, count_det_trace_formula(q1, q2, static_cast<i64>(d), -static_cast<i64>(t)));
            }
        }
    }
}

TEST(DetTrace, CrtMatchesDirectEnumeration) {
    EXPECT_EQ(det_trace_histogram_crt(3, 5), det_trace_histogram(15));
    EXPECT_EQ(det_trace_histogram_crt(5, 7), det_trace_histogram(35));
}

TEST(DetTrace, ErrorPaths) {
    EXPECT_THROW(count_det_trace_formula(3, 5, 3, 0), DomainError);
    EXPECT_THROW(count_det_trace_formula(3, 3, 1, 0), DomainError);
    EXPECT_THROW(count_det_trace_formula(2, 5, 1, 0), DomainError);
    EXPECT_THROW(count_det_trace_bruteforce(37, 1, 0), DomainError);
    EXPECT_THROW(count_det_trace_bruteforce(9, 1, 0), DomainError);
    EXPECT_THROW(count_det_trace_bruteforce(15, 5, 0), DomainError);
    EXPECT_THROW(det_trace_histogram(36), DomainError);
}

TEST(OrderH, FormulaHistogramAndGroupOrder) {
    EXPECT_TRUE(order_H_formula(3, 5) == 66355200);
    EXPECT_TRUE(order_H_histogram(3, 5) == order_H_formula(3, 5));
    EXPECT_TRUE(order_H_histogram(3, 7) == order_H_formula(3, 7));
    const i128 g = det_trace_histogram(15).group_order();
    EXPECT_TRUE(g * g / 8 == order_H_formula(3, 5));
    EXPECT_TRUE(g * g % 8 == 0);
}

TEST(OrderH, UniformDeterminantHistogram) {
    const DetTraceHistogram h = det_trace_histogram(15);
    for (u64 d : units(15)) EXPECT_EQ(h.det_count(d), h.det_count(1));
}

TEST(OrderH, PartitionOfClassCounts) {
    for (auto [q1, q2] : {std::pair<u64, u64>{3, 5}, {5, 7}}) {
        const u64 n = q1 * q2;
        i128 total = 0;
        Rational ratio_total;
        for (u64 d : units(n)) {
            for (u64 s = 0; s < n; ++s) {
                for (u64 t = 0; t < n; ++t) {
                    const i64 di = static_cast<i64>(d), si = static_cast<i64>(s), ti = static_cast<i64>(t);
                    total += count_C_formula(q1, q2, di, si, ti);
                    ratio_total += class_ratio(q1, q2, di, si, ti);
                    ASSERT_EQ(class_ratio(q1, q2, di, si, ti), class_ratio_factored(q1, q2, di, si, ti));
                }
            }
        }
        EXPECT_TRUE(total == order_H_formula(q1, q2));
        EXPECT_EQ(ratio_total, Rational(1));
    }
}

TEST(ClassRatio, VanishingSymbolGivesLeadingTerm) {
    // t^2 = 4d makes every symbol vanish.
    EXPECT_EQ(class_ratio(3, 5, 1, 2, 2), class_ratio_leading(3, 5));
    EXPECT_EQ(class_ratio_leading(3, 5), Rational(225, 2 * 64 * 4 * 576));
}

TEST(ClassRatio, DeviationFromLeadingAt57) {
    const Rational leading = class_ratio_leading(5, 7);
    Rational worst;
    for (u64 d : units(35)) {
        for (i64 s = 0; s < 35; ++s) {
            for (i64 t = 0; t < 35; ++t) {
                const Rational dev = abs(class_ratio(5, 7, static_cast<i64>(d), s, t) - leading);
                if (worst < dev) worst = dev;
            }
        }
    }
    // Largest relative factor is (1 + 1/5)^2 (1 + 1/7)^2 - 1.
    EXPECT_EQ(worst, leading * Rational(36 * 64 - 25 * 49, 25 * 49));
    EXPECT_LT(worst, leading);
    RecordProperty("deviation_times_z7", std::to_string(worst.to_double() * std::pow(14.0, 7)));
}

TEST(GL2Count, ResultFields) {
    const GL2CountResult r = gl2_count(3, 5, 16, -1, 17);
    EXPECT_EQ(r.d, 1u);
    EXPECT_EQ(r.s, 14u);
    EXPECT_EQ(r.t, 2u);
    EXPECT_TRUE(r.countC == 180 * 225);
    EXPECT_EQ(r.ratio, Rational(r.countC, r.countH));
}

TEST(DegreeBound, Examples) {
    EXPECT_TRUE(degree_bound_check(3, 5, 5));
    EXPECT_TRUE(degree_bound_check(11, 13, 13));
    EXPECT_THROW(degree_bound_check(3, 11, 11), DomainError);
    EXPECT_THROW(degree_bound_check(11, 13, 12), DomainError);
}

TEST(Rational, ReducedArithmetic) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
    EXPECT_EQ((Rational(-3, 2)).str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), DomainError);
}
