/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include <random>

#include <gtest/gtest.h>

#include "hyperfrac/rational.hpp"
#include "oracle.hpp"

using namespace hyperfrac;

TEST(Rational, ParseAndPrint)
{
	EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
	EXPECT_EQ(Rational::parse("-7"), Rational(-7));
	EXPECT_EQ(Rational(4, 6).str(), "2/3");
	EXPECT_EQ(Rational(5).str(), "5/1");
	EXPECT_THROW(Rational::parse("2/4", true), std::exception);
	EXPECT_THROW(Rational::parse("1/0"), std::exception);
	EXPECT_THROW(Rational::parse("x"), std::exception);
	EXPECT_THROW(Rational::parse(""), std::exception);
}

TEST(Rational, Powers)
{
	EXPECT_EQ(pow10_inv(3), Rational(1, 1000));
	EXPECT_EQ(pow2_inv(5), Rational(1, 32));
	EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
	EXPECT_EQ(pow(Rational(5, 7), 0), Rational(1));
}

TEST(Rational, DyadicRounding)
{
	Rational third(1, 3);
	Rational lo = floor_dyadic(third, 10), hi = ceil_dyadic(third, 10);
	EXPECT_EQ(lo, Rational(341, 1024));
	EXPECT_EQ(hi, Rational(342, 1024));
	EXPECT_EQ(floor_dyadic(Rational(3, 4), 2), Rational(3, 4));
	EXPECT_EQ(ceil_dyadic(Rational(-1, 3), 1), Rational(0));
}

TEST(Enclosure, ExactStaysExact)
{
	Enclosure a(Rational(1, 3)), b(Rational(2, 7));
	Enclosure c = a * b + a - b;
	EXPECT_TRUE(c.exact());
	EXPECT_EQ(c.lo(), Rational(1, 3) * Rational(2, 7) + Rational(1, 3) - Rational(2, 7));
}

TEST(Enclosure, PowerContainsExactValue)
{
	for (std::uint64_t e : {1, 7, 40, 300, 2000}) {
		Rational base(7553, 7562);
		Enclosure p = pow(Enclosure(base), e);
		Rational exact = pow(base, e);
		EXPECT_TRUE(p.contains(exact)) << e;
		EXPECT_LT(p.width(), pow2_inv(200)) << e;
	}
}

TEST(Enclosure, RandomChainsStayRigorous)
{
	std::mt19937_64 rng(11);
	std::uniform_int_distribution<long> num(1, 999983);
	for (int trial = 0; trial < 50; trial++) {
		Enclosure e(Rational(1));
		oracle::Q exact = 1;
		for (int step = 0; step < 60; step++) {
			long a = num(rng), b = num(rng) + 1;
			Rational f(a, (unsigned long)b);
			if (step % 3 == 2) {
				e += Enclosure(f);
				exact += oracle::q(f);
			} else {
				e *= Enclosure(f);
				exact *= oracle::q(f);
			}
		}
		EXPECT_TRUE(e.contains(oracle::r(exact)));
	}
}

TEST(Enclosure, Reciprocal)
{
	Enclosure e(Rational(2), Rational(4));
	Enclosure r = reciprocal(e);
	EXPECT_EQ(r.lo(), Rational(1, 4));
	EXPECT_EQ(r.hi(), Rational(1, 2));
	EXPECT_THROW(reciprocal(Enclosure(Rational(-1), Rational(1))), std::exception);
}
