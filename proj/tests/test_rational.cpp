#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "contextlab/rational.hpp"

using contextlab::int128;
using contextlab::OverflowError;
using contextlab::Rational;

TEST(Rational, ReducesAndNormalizesSign) {
    Rational r(int128{6}, int128{-8});
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(int128{0}, int128{-5}), Rational(0));
    EXPECT_THROW(Rational(int128{1}, int128{0}), std::domain_error);
}

TEST(Rational, Arithmetic) {
    Rational half(int128{1}, int128{2});
    Rational third(int128{1}, int128{3});
    EXPECT_EQ(half + third, Rational(int128{5}, int128{6}));
    EXPECT_EQ(half - third, Rational(int128{1}, int128{6}));
    EXPECT_EQ(half * third, Rational(int128{1}, int128{6}));
    EXPECT_EQ(half / third, Rational(int128{3}, int128{2}));
    EXPECT_EQ(-half, Rational(int128{-1}, int128{2}));
    EXPECT_THROW(half / Rational(0), std::domain_error);
    EXPECT_LT(third, half);
    EXPECT_GT(Rational(-1), Rational(int128{-3}, int128{2}));
}

TEST(Rational, TextForm) {
    EXPECT_EQ(Rational(int128{9}, int128{2}).to_string(), "9/2");
    EXPECT_EQ(Rational(-7).to_string(), "-7");
    EXPECT_EQ(Rational::parse("-6/4"), Rational(int128{-3}, int128{2}));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational::parse("+3/-9"), Rational(int128{-1}, int128{3}));
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, OverflowRaisesInsteadOfWrapping) {
    const int128 big = std::numeric_limits<int128>::max() / 2 + 1;
    Rational r = Rational::from_int128(big);
    EXPECT_THROW(r + r, OverflowError);
    EXPECT_THROW(r * Rational(3), OverflowError);
    EXPECT_THROW(Rational::parse("1000000000000000000000000000000000000000000"), OverflowError);
}

TEST(Rational, FieldLawsOnRandomValues) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        Rational a(int128{num(rng)}, int128{den(rng)});
        Rational b(int128{num(rng)}, int128{den(rng)});
        Rational c(int128{num(rng)}, int128{den(rng)});
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ(Rational::parse(a.to_string()), a);
    }
}
