#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "sgb/euclid.hpp"

using sgb::Grade;
using sgb::Integer;
using sgb::Rational;

TEST(Delta, Integers) {
    EXPECT_EQ(sgb::delta(Integer(-7)), Grade(7UL));
    EXPECT_EQ(sgb::delta(Integer(0)), Grade(0UL));
}

TEST(Delta, Rationals) {
    EXPECT_EQ(sgb::delta(Rational(3, 5)), Grade(1UL));
    EXPECT_EQ(sgb::delta(Rational(0)), Grade(0UL));
}

TEST(HatDelta, Integers) {
    EXPECT_EQ(sgb::hat_delta(Integer(1)), Grade(2UL));
    EXPECT_EQ(sgb::hat_delta(Integer(-1)), Grade(4UL));
    EXPECT_EQ(sgb::hat_delta(Integer(2)), Grade(5UL));
    EXPECT_EQ(sgb::hat_delta(Integer(-2)), Grade(7UL));
    EXPECT_EQ(sgb::hat_delta(Integer(0)), Grade(0UL));
}

TEST(HatDelta, RationalsRefineDelta) {
    EXPECT_EQ(sgb::hat_delta(Rational(1)), Grade(1UL));
    EXPECT_LT(sgb::hat_delta(Rational(0)), sgb::hat_delta(Rational(1)));
    std::vector<Grade> seen;
    for (long p = -6; p <= 6; ++p) {
        for (long q = 1; q <= 6; ++q) {
            Rational a(p, q);
            if (a.is_zero() || a == Rational(1)) continue;
            EXPECT_GT(sgb::hat_delta(a), sgb::hat_delta(Rational(1)));
        }
    }
    EXPECT_NE(sgb::hat_delta(Rational(2)), sgb::hat_delta(Rational(1, 2)));
}

TEST(HatDelta, IntegersRefineDelta) {
    for (long a = -30; a <= 30; ++a) {
        for (long b = -30; b <= 30; ++b) {
            if (sgb::delta(Integer(a)) < sgb::delta(Integer(b)))
                EXPECT_LT(sgb::hat_delta(Integer(a)), sgb::hat_delta(Integer(b)));
        }
    }
}

TEST(QuoRem, Examples) {
    auto [q, r] = sgb::quo_rem(Integer(6), Integer(4));
    EXPECT_EQ(q, Integer(1));
    EXPECT_EQ(r, Integer(2));
    auto [q2, r2] = sgb::quo_rem(Integer(8), Integer(2));
    EXPECT_EQ(q2, Integer(4));
    EXPECT_EQ(r2, Integer(0));
    auto [q3, r3] = sgb::quo_rem(Rational(3, 4), Rational(2, 5));
    EXPECT_EQ(q3, Rational(15, 8));
    EXPECT_TRUE(r3.is_zero());
}

TEST(QuoRem, ZeroDivisor) {
    EXPECT_THROW(sgb::quo_rem(Integer(3), Integer(0)), sgb::DomainError);
    EXPECT_THROW(sgb::quo_rem(Rational(3), Rational(0)), sgb::DomainError);
}

TEST(MinQuotient, Examples) {
    EXPECT_EQ(sgb::min_quotient(Integer(6), Integer(4)), Integer(1));
    EXPECT_EQ(sgb::min_quotient(Integer(1), Integer(2)), Integer(0));
    EXPECT_EQ(sgb::min_quotient(Rational(1, 3), Rational(2)), Rational(1, 6));
}

TEST(MinQuotient, MinimizesHatDeltaByScan) {
    for (long b = -25; b <= 25; ++b) {
        for (long a = -9; a <= 9; ++a) {
            if (a == 0) continue;
            const Integer q = sgb::min_quotient(Integer(b), Integer(a));
            const Grade got = sgb::hat_delta(Integer(b) - q * Integer(a));
            for (long t = -40; t <= 40; ++t) EXPECT_LE(got, sgb::hat_delta(Integer(b - t * a))) << b << " " << a;
            EXPECT_LT(sgb::delta(Integer(b) - q * Integer(a)), sgb::delta(Integer(a)));
        }
    }
}

TEST(NormalizingUnit, Examples) {
    EXPECT_EQ(sgb::normalizing_unit(Integer(-2)), Integer(-1));
    EXPECT_EQ(sgb::normalizing_unit(Integer(5)), Integer(1));
    EXPECT_EQ(sgb::normalizing_unit(Rational(3, 4)), Rational(4, 3));
    EXPECT_THROW(sgb::normalizing_unit(Integer(0)), sgb::DomainError);
}

TEST(Units, Predicates) {
    EXPECT_TRUE(sgb::is_unit(Integer(1)));
    EXPECT_TRUE(sgb::is_unit(Integer(-1)));
    EXPECT_FALSE(sgb::is_unit(Integer(2)));
    EXPECT_FALSE(sgb::is_unit(Integer(0)));
    EXPECT_TRUE(sgb::is_unit(Rational(2, 7)));
    EXPECT_FALSE(sgb::is_unit(Rational(0)));
    EXPECT_TRUE(sgb::is_normalized_scalar(Integer(3)));
    EXPECT_FALSE(sgb::is_normalized_scalar(Integer(-3)));
    EXPECT_TRUE(sgb::is_normalized_scalar(Rational(1)));
    EXPECT_FALSE(sgb::is_normalized_scalar(Rational(1, 2)));
}

TEST(ExtGcd, Examples) {
    auto g = sgb::ext_gcd(Integer(4), Integer(10));
    EXPECT_EQ(g.gcd, Integer(2));
    EXPECT_EQ(g.u * Integer(4) + g.v * Integer(10), Integer(2));
    auto h = sgb::ext_gcd(Integer(7), Integer(0));
    EXPECT_EQ(h.gcd, Integer(7));
    EXPECT_EQ(h.u, Integer(1));
    EXPECT_EQ(h.v, Integer(0));
    auto f = sgb::ext_gcd(Rational(3), Rational(5));
    EXPECT_EQ(f.gcd, Rational(1));
    EXPECT_EQ(f.u * Rational(3) + f.v * Rational(5), Rational(1));
    EXPECT_THROW(sgb::ext_gcd(Integer(0), Integer(0)), sgb::DomainError);
}

TEST(ExtGcd, BezoutIdentityRandom) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng);
        if (a == 0 && b == 0) continue;
        auto g = sgb::ext_gcd(Integer(a), Integer(b));
        EXPECT_EQ(g.u * Integer(a) + g.v * Integer(b), g.gcd);
        EXPECT_EQ(g.gcd, Integer(std::gcd(a, b)));
    }
}

TEST(Parse, Scalars) {
    EXPECT_EQ(Integer::parse("-12"), Integer(-12));
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_THROW(Integer::parse("1/2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}
