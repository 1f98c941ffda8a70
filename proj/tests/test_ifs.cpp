/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include <random>

#include <gtest/gtest.h>

#include "hyperfrac/cantor_addressing.hpp"
#include "hyperfrac/ifs.hpp"
#include "oracle.hpp"

using namespace hyperfrac;

static IfsSystem affine_pair(Rational s, Rational b2)
{
	return IfsSystem({Affine{s, 0}, Affine{s, b2}}, Strictness::strict);
}

TEST(IntervalMap, EvaluateAndImage)
{
	IntervalMap a = Affine{Rational(-1, 2), 1};
	EXPECT_EQ(evaluate(a, Rational(1, 2)), Rational(3, 4));
	EXPECT_EQ(image(a, Interval(0, 1)), Interval(Rational(1, 2), 1));

	PiecewiseAffine pl({0, Rational(1, 2), 1}, {0, Rational(1, 4), 0});
	EXPECT_EQ(pl(Rational(1, 4)), Rational(1, 8));
	EXPECT_EQ(pl.image(Interval(Rational(1, 4), 1)), Interval(0, Rational(1, 4)));
	EXPECT_FALSE(pl.nondecreasing());
	EXPECT_EQ(pl.max_abs_slope(), Rational(1, 2));

	PiecewiseAffine clamp({Rational(1, 4), Rational(3, 4)}, {Rational(1, 10), Rational(2, 10)});
	EXPECT_EQ(clamp(0), Rational(1, 10));
	EXPECT_EQ(clamp(1), Rational(1, 5));
	EXPECT_THROW(PiecewiseAffine({0, 0}, {0, 1}), std::invalid_argument);
}

TEST(IntervalMap, WeakFamilies)
{
	IntervalMap wl = Parametric{"weak_left", {1, 0}};
	EXPECT_EQ(evaluate(wl, 1), Rational(1, 2));
	EXPECT_EQ(weak_contraction_check(wl).verdict, WeakCheck::certified_weak);
	IntervalMap wr = Parametric{"weak_right", {1, 0}};
	EXPECT_EQ(evaluate(wr, 0), Rational(-1, 2));
	EXPECT_TRUE(parametric_family_known("weak_left", 2));
	EXPECT_FALSE(parametric_family_known("nope", 2));

	/* chord slopes below 1 but approaching it near 0 */
	for (long k = 1; k <= 6; k++) {
		Rational x = pow10_inv(k), y = x / Rational(2);
		Rational chord = (evaluate(wl, x) - evaluate(wl, y)) / (x - y);
		EXPECT_LT(chord, Rational(1));
		EXPECT_GT(chord, Rational(1) - Rational(2) * x);
	}
}

TEST(IntervalMap, IdentityIsNotWeak)
{
	WeakCheck w = weak_contraction_check(Affine{1, 0});
	EXPECT_EQ(w.verdict, WeakCheck::certified_not_weak);
	ASSERT_TRUE(w.witness);
	EXPECT_EQ(w.witness->first, Rational(0));
	EXPECT_EQ(w.witness->second, Rational(1));
	EXPECT_EQ(weak_contraction_check(Affine{Rational(1, 2), 0}).verdict, WeakCheck::certified_weak);
}

TEST(IfsSystem, Validation)
{
	EXPECT_THROW(IfsSystem({Affine{1, 0}}, Strictness::strict), std::invalid_argument);
	EXPECT_THROW(IfsSystem({Affine{Rational(1, 2), Rational(3, 4)}}, Strictness::strict),
	             std::invalid_argument);
	EXPECT_THROW(IfsSystem({}, Strictness::strict), std::invalid_argument);
	EXPECT_NO_THROW(IfsSystem({Parametric{"weak_left", {1, 0}}}, Strictness::weak));
	EXPECT_THROW(IfsSystem({Parametric{"weak_left", {1, 0}}}, Strictness::strict),
	             std::invalid_argument);
}

TEST(Hutchinson, CantorIteratesMatchStageOracle)
{
	IfsSystem sys = affine_pair(Rational(1, 10), Rational(9, 10));
	CompactCover a = CompactCover::unit();
	for (unsigned n = 1; n <= 8; n++) {
		a = hutchinson_apply(sys, a);
		auto ref = oracle::cantor_stage(n);
		ASSERT_EQ(a.size(), ref.size());
		for (std::size_t i = 0; i < ref.size(); i++) {
			EXPECT_EQ(oracle::q(a.intervals()[i].lo), ref[i].first);
			EXPECT_EQ(oracle::q(a.intervals()[i].hi), ref[i].second);
		}
	}
}

TEST(Hutchinson, Monotone)
{
	std::mt19937_64 rng(29);
	std::vector<IntervalMap> maps{Affine{Rational(1, 3), 0}, Affine{Rational(-1, 4), 1},
	                              PiecewiseAffine({0, Rational(1, 2), 1}, {Rational(1, 2), Rational(1, 3), Rational(1, 2)})};
	for (int trial = 0; trial < 200; trial++) {
		CompactCover small = oracle::random_cover(rng), extra = oracle::random_cover(rng);
		CompactCover big = unite(small, extra);
		EXPECT_TRUE(hutchinson_apply(maps, big).contains(hutchinson_apply(maps, small)));
	}
}

TEST(Attractor, FullIntervalIsAFixedPoint)
{
	AttractorResult r = attractor_solve(affine_pair(Rational(1, 2), Rational(1, 2)), Rational(1, 1000));
	EXPECT_EQ(r.cover, CompactCover::unit());
	EXPECT_EQ(r.error_bound, Rational(0));
	EXPECT_EQ(r.iterations, 1u);
}

TEST(Attractor, DecimalCantorBanachStop)
{
	AttractorResult r = attractor_solve(affine_pair(Rational(1, 10), Rational(9, 10)),
	                                    Rational(1, 1000000));
	/* (1/10)^n (2/5) / (9/10) <= 10^-6 first at n = 6 */
	EXPECT_EQ(r.iterations, 6u);
	EXPECT_EQ(r.error_bound, Rational(4, 9) * pow10_inv(6));
	EXPECT_EQ(r.cover.intervals().size(), 64u);
	CompactCover ref = cantor_cover(6);
	auto c6 = ref.intervals(), got = r.cover.intervals();
	EXPECT_TRUE(std::equal(c6.begin(), c6.end(), got.begin(), got.end()));
	EXPECT_FALSE(r.heuristic);
}

TEST(Attractor, TernaryCantor)
{
	AttractorResult r = attractor_solve(affine_pair(Rational(1, 3), Rational(2, 3)), Rational(1, 100));
	/* d1 = 1/6, bound (1/3)^n (1/6) / (2/3) = (1/3)^n / 4 */
	EXPECT_EQ(r.iterations, 3u);
	EXPECT_EQ(r.error_bound, Rational(1, 108));
	EXPECT_EQ(r.cover.size(), 8u);
}

TEST(Attractor, StrictContractionRatioAndInvariance)
{
	std::vector<IfsSystem> systems{affine_pair(Rational(1, 3), Rational(2, 3)),
	                               affine_pair(Rational(1, 4), Rational(1, 2)),
	                               IfsSystem({Affine{Rational(-1, 3), Rational(1, 3)}, Affine{Rational(1, 3), Rational(2, 3)}},
	                                         Strictness::strict)};
	for (const auto &sys : systems) {
		CompactCover prev = CompactCover::unit(), cur = hutchinson_apply(sys, prev);
		for (int n = 0; n < 6; n++) {
			CompactCover next = hutchinson_apply(sys, cur);
			EXPECT_LE(hausdorff_distance(cur, next), sys.lipschitz() * hausdorff_distance(prev, cur));
			prev = cur;
			cur = next;
		}
		AttractorResult r = attractor_solve(sys, Rational(1, 500));
		EXPECT_LE(hausdorff_distance(hutchinson_apply(sys, r.cover), r.cover),
		          Rational(2) * r.error_bound);
	}
}

TEST(Attractor, WeakSystemIsHeuristic)
{
	IfsSystem sys({Parametric{"weak_left", {1, 0}}}, Strictness::weak);
	AttractorResult r = attractor_solve(sys, Rational(1, 100));
	EXPECT_TRUE(r.heuristic);
	EXPECT_LE(r.error_bound, Rational(1, 100));
	EXPECT_EQ(r.cover.min(), Rational(0));
}

TEST(Attractor, CapExceededCarriesLastIterate)
{
	IfsSystem sys({Parametric{"weak_left", {1, 0}}}, Strictness::weak);
	try {
		attractor_solve(sys, Rational(1, 1000000), 5);
		FAIL() << "expected the cap to trigger";
	} catch (const CapExceeded &e) {
		EXPECT_EQ(e.iterations, 5u);
		EXPECT_EQ(e.last.size(), 1u);
	}
}

TEST(IfsFile, ParseAndFormat)
{
	IfsSystem s = parse_ifs("ifs v1 strictness=weak\n# comment\n\naffine 1/10 0\n"
	                        "pl 0/1 0/1 1/1 1/3\nparam weak_left 1/1 0/1\n");
	EXPECT_EQ(s.maps().size(), 3u);
	EXPECT_THROW(parse_ifs("ifs v1 strictness=weak\nparam weak_left 1/1 0/1\n"
	                       "affine 1/1 0/1\n"), std::exception);
	IfsSystem t = parse_ifs("ifs v1 strictness=strict\naffine 1/10 0\naffine 1/10 9/10\n");
	IfsSystem u = parse_ifs(format_ifs(t));
	EXPECT_EQ(u.maps().size(), 2u);
	EXPECT_EQ(evaluate(u.maps()[1], 1), Rational(1));
	EXPECT_THROW(parse_ifs(""), ParseError);
	EXPECT_THROW(parse_ifs("ifs v1 strictness=strict\nrotate 1\n"), ParseError);
	EXPECT_THROW(parse_ifs("ifs v1 strictness=strict\naffine x 0\n"), ParseError);
}

TEST(Banach, Bound)
{
	EXPECT_EQ(banach_bound(Rational(1, 10), Rational(2, 5), 1), Rational(2, 45));
}
