#include <gtest/gtest.h>

#include "frobsieve/config.hpp"
#include "frobsieve/elliptic.hpp"

using namespace frobsieve;

TEST(CurveQ, DiscriminantAndBadPrimes) {
    const CurveQ e(0, 1);
    EXPECT_TRUE(e.discriminant() == -16 * 27);
    EXPECT_EQ(e.bad_primes(), (std::vector<u64>{2, 3}));
    const CurveQ f(1, 1);  // 4 + 27 = 31
    EXPECT_EQ(f.bad_primes(), (std::vector<u64>{2, 3, 31}));
    EXPECT_TRUE(f.is_bad(31));
    EXPECT_FALSE(f.is_bad(29));
}

TEST(CurveQ, RejectsSingularAndOversized) {
    EXPECT_THROW(CurveQ(0, 0), DomainError);
    EXPECT_THROW(CurveQ(-3, 2), DomainError);  // 4(-27) + 27*4 = 0
    EXPECT_THROW(CurveQ(CurveQ::kMaxCoefficient + 1, 1), DomainError);
}

TEST(Trace, FrozenSmallPrimes) {
    const CurveQ e(0, 1);
    EXPECT_EQ(count_points(e, 5), 6u);
    EXPECT_EQ(count_points(e, 7), 12u);
    EXPECT_EQ(ap_naive(e, 5), 0);
    EXPECT_EQ(ap_naive(e, 7), -4);
    EXPECT_EQ(ap_bsgs(e, 1009), 62);
}

TEST(Trace, FrozenLargerPrimes) {
    const CurveQ e(2, 3);
    EXPECT_EQ(ap_bsgs(e, 463), 24);
    EXPECT_EQ(ap_bsgs(e, 1009), -58);
    EXPECT_EQ(ap_bsgs(e, 9973), 88);
    EXPECT_EQ(ap_naive(e, 9973), 88);
}

TEST(Trace, SupersingularJ1728) {
    const CurveQ e(1, 0);
    for (u64 p : {7, 11, 19}) EXPECT_EQ(ap_naive(e, p), 0);
    for (u64 p : primes_in(3, 5000)) {
        if (p % 4 == 3) {
            EXPECT_EQ(ap_bsgs(e, p), 0) << p;
        }
    }
}

TEST(Trace, RejectsBadPrimes) {
    const CurveQ e(1, 1);
    EXPECT_THROW(ap_naive(e, 2), DomainError);
    EXPECT_THROW(ap_naive(e, 3), DomainError);
    EXPECT_THROW(ap_naive(e, 31), DomainError);
    EXPECT_THROW(ap_naive(e, 35), DomainError);
    EXPECT_THROW(ap_bsgs(e, 31), DomainError);
    EXPECT_THROW(count_points(e, 31), DomainError);
}

TEST(Trace, NaiveMatchesEnumeration) {
    for (const auto& e : reference_curves()) {
        for (u64 p : primes_in(3, 1000)) {
            if (e.is_bad(p)) continue;
            const i64 a = ap_naive(e, p);
            ASSERT_EQ(count_points_bruteforce(e, p), p + 1 - static_cast<u64>(a)) << e.a() << " " << e.b() << " " << p;
            ASSERT_EQ(count_points(e, p) + static_cast<u64>(a), p + 1);
            ASSERT_LE(a * a, 4 * static_cast<i64>(p));
        }
    }
}

TEST(Trace, BsgsMatchesNaiveBelow1e4) {
    for (const auto& e : reference_curves()) {
        for (u64 p : primes_in(3, 10'000)) {
            if (e.is_bad(p)) continue;
            ASSERT_EQ(ap_bsgs(e, p), ap_naive(e, p)) << e.a() << " " << e.b() << " " << p;
        }
    }
}

TEST(Trace, BsgsMatchesNaiveNearOneMillion) {
    const CurveQ e(-1, 1);
    for (u64 p : primes_in(999'000, 1'000'000)) {
        if (!e.is_bad(p)) {
            ASSERT_EQ(ap_bsgs(e, p), ap_naive(e, p)) << p;
        }
    }
}

TEST(Trace, HasseBoundOnAcceleratedPath) {
    const CurveQ e(7, -11);
    for (const auto& r : trace_range(e, 0, 200'000, TraceMethod::bsgs)) {
        ASSERT_LT(r.a_p * r.a_p, 4 * static_cast<i64>(r.p)) << r.p;
    }
}

TEST(Trace, TwistNegatesTrace) {
    const CurveQ e(2, 3);
    for (u64 p : primes_in(3, 500)) {
        if (e.is_bad(p)) continue;
        u64 d = 2;
        while (jacobi_symbol_u(d, p) != -1) ++d;
        const CurveQ t = e.twist(static_cast<i64>(d));
        if (t.is_bad(p)) continue;
        EXPECT_EQ(static_cast<i64>(p + 1 - count_points_bruteforce(t, p)),
                  -static_cast<i64>(p + 1 - count_points_bruteforce(e, p)));
    }
}

TEST(Trace, RangeSkipsBadPrimesAndIsAscending) {
    const CurveQ e(1, 1);
    const auto records = trace_range(e, 0, 100, TraceMethod::naive);
    ASSERT_FALSE(records.empty());
    EXPECT_EQ(records.front().p, 5u);
    for (std::size_t i = 1; i < records.size(); ++i) EXPECT_LT(records[i - 1].p, records[i].p);
    for (const auto& r : records) EXPECT_NE(r.p, 31u);
}
