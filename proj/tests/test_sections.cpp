/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include <gtest/gtest.h>

#include <random>

#include "hyperfrac/reduction.hpp"
#include "hyperfrac/sections.hpp"
#include "oracle.hpp"

using namespace hyperfrac;
using oracle::Q;

namespace {

const std::vector<SectionPlan> &plans3()
{
	static const std::vector<SectionPlan> p = build_sections(3);
	return p;
}

Q ceil_div(std::uint64_t a, std::uint64_t b)
{
	return Q(mpz_class(std::to_string((a + b - 1) / b)));
}

bool oracle_counting(std::uint64_t K, std::uint64_t k)
{
	Q lhs(mpz_class(std::to_string(K)));
	return lhs > ceil_div(K, 2) + ceil_div(K, 5) + Q(mpz_class(std::to_string(k)));
}

} // namespace

TEST(GapInequalities, ThresholdAtEightyOverEightyNine)
{
	std::mt19937_64 rng(3);
	std::uniform_int_distribution<long> num(1, 9999);
	for (int t = 0; t < 500; t++) {
		Q delta(num(rng), 10000);
		delta.canonicalize();
		for (unsigned n = 0; n <= 6; n++) {
			Lemma3Report r = lemma3_gap_checks(n, oracle::r(delta));
			EXPECT_EQ(r.first, delta > Q(1, 10));
			EXPECT_EQ(r.second, delta > Q(80, 89));
			EXPECT_EQ(r.pass, delta > Q(80, 89));
		}
	}
	EXPECT_FALSE(lemma3_gap_checks(4, Rational(80, 89)).pass);
}

TEST(Conditions, SlacksMatchTheirFormulas)
{
	std::mt19937_64 rng(5);
	std::uniform_int_distribution<long> num(1, 999);
	for (int t = 0; t < 500; t++) {
		Q q(num(rng), 1000), r(num(rng), 1000);
		if (q > r)
			std::swap(q, r);
		ConditionReport rep = check_conditions(oracle::r(q), oracle::r(r));
		Q g = Q(9, 10) * r - (1 - q), h = Q(9, 10) * q - (1 - q) / 2;
		bool want[kNumConditions] = {q > Q(80, 89), g > 0, h > 0, g > Q(4, 5), h > Q(4, 5),
		                             g + Q(9, 100) * q > Q(9, 10), h + Q(9, 100) * q > Q(9, 10)};
		bool all = true;
		for (int c = 0; c < kNumConditions; c++) {
			EXPECT_EQ(rep.holds[c], want[c]) << condition_name(Condition(c));
			all = all && want[c];
		}
		EXPECT_EQ(rep.all_hold, all);
		EXPECT_TRUE(rep.chart_holds);
	}
}

TEST(Conditions, ChartThresholds)
{
	EXPECT_FALSE(check_conditions_from_power(Rational(5, 14)).holds[kCond2p]);
	EXPECT_TRUE(check_conditions_from_power(Rational(5, 14) + pow2_inv(60)).holds[kCond2p]);
	EXPECT_TRUE(check_conditions_from_power(Rational(1, 2)).holds[kCond2p]);
	EXPECT_FALSE(check_conditions_from_power(Rational(13, 14)).holds[kCond3p]);
	EXPECT_FALSE(check_conditions_from_power(Rational(140, 149)).holds[kCond4p]);
	EXPECT_TRUE(check_conditions_from_power(Rational(191, 199)).all_hold);
	ConditionReport mid = check_conditions_from_power(Rational(139, 149));
	EXPECT_TRUE(mid.holds[kCond3p]);
	EXPECT_FALSE(mid.holds[kCond4p]);
	for (std::uint64_t k = 2; k <= 12; k++)
		for (long i = 1; i <= 999; i += 7)
			EXPECT_TRUE(check_delta_conditions(k, Rational(i, 1000)).chart_holds) << k << " " << i;
}

TEST(Conditions, CertifiedEnclosures)
{
	Enclosure q(Rational(96, 100), Rational(97, 100));
	auto c = certify_conditions(q, q);
	for (int k = 0; k < kNumConditions; k++)
		EXPECT_EQ(c[k], Certainty::pass);
	Enclosure wide(Rational(1, 2), Rational(99, 100));
	EXPECT_EQ(certify_conditions(wide, wide)[kCond1], Certainty::unknown);
	Enclosure low(Rational(1, 10), Rational(2, 10));
	EXPECT_EQ(certify_conditions(low, low)[kCond1], Certainty::fail);
}

TEST(Delta, ChoiceAndBernoulliBound)
{
	for (std::uint64_t k = 2; k <= 200; k++) {
		Q d = oracle::q(choose_delta(k));
		Q want = 1 - Q(9, 398 * long(k - 1));
		want.canonicalize();
		EXPECT_EQ(d, want);
		Q p = 1;
		for (std::uint64_t e = 0; e + 1 < k; e++)
			p *= d;
		EXPECT_GE(p, Q(389, 398)) << k;
		EXPECT_TRUE(check_delta_conditions(k, oracle::r(d)).all_hold) << k;
	}
}

TEST(Sections, FirstLevelByMeasure)
{
	/* the smallest i with 1.9 * #intervals * 10^-(i-1) < a_0 / 10 */
	Q eps = Q(19, 10) / 10;
	unsigned i = 1;
	for (;; i++) {
		std::size_t count = oracle::cantor_stage(i - 1).size();
		if (Q(19, 10) * Q(long(count)) * oracle::pow10_inv(i - 1) < eps)
			break;
	}
	const SectionPlan &p = plans3()[0];
	EXPECT_EQ(p.i_n, i);
	EXPECT_EQ(p.i_n, 3u);
	EXPECT_EQ(p.k_count, 4u);
	EXPECT_EQ(p.k_tilde, 20u);
	EXPECT_EQ(p.delta, Rational(7553, 7562));
	EXPECT_EQ(p.a_prev_sum.lo(), Rational(19, 10));
}

TEST(Sections, SecondLevelCountFromMaterializedCover)
{
	const SectionPlan &p1 = plans3()[0];
	const SectionPlan &p2 = plans3()[1];
	auto count_at = [&](unsigned i) {
		std::vector<CompactCover> parts{cantor_cover(i - 1)};
		for (std::uint64_t j = 1; j <= p1.k_tilde; j++)
			parts.push_back(expanded_member(p1, j, i - 1));
		std::size_t total = 0;
		for (const auto &c : parts)
			total += c.size();
		EXPECT_EQ(unite(std::span<const CompactCover>(parts)).size(), total);
		return total;
	};
	EXPECT_EQ(count_at(p2.i_n), p2.k_count);
	EXPECT_EQ(p2.k_count, 96u);
	EXPECT_EQ(p2.k_tilde, 960u);
	Q eps_hi = oracle::q(p1.a_n.hi()) / 20;
	Q eps_lo = oracle::q(p1.a_n.lo()) / 20;
	EXPECT_LT(Q(19, 10) * Q(long(count_at(p2.i_n))) * oracle::pow10_inv(p2.i_n - 1), eps_lo);
	EXPECT_GE(Q(19, 10) * Q(long(count_at(p2.i_n - 1))) * oracle::pow10_inv(p2.i_n - 2), eps_hi);
}

TEST(Sections, ConstructionCountFormula)
{
	const auto &p = plans3();
	EXPECT_EQ(construction_count(4, {}), 8u);
	EXPECT_EQ(construction_count(p[1].i_n, {p[0]}), p[1].k_count);
	EXPECT_EQ(construction_count(p[2].i_n, {p[0], p[1]}), p[2].k_count);
	EXPECT_EQ(p[2].i_n, 8u);
	EXPECT_EQ(p[2].k_count, 8448u);
	EXPECT_THROW(construction_count(2, {p[0]}), std::invalid_argument);
}

TEST(Sections, OffsetsAndMidpoints)
{
	const SectionPlan &p = plans3()[0];
	Q d = oracle::q(p.delta), I = oracle::q(p.interval), start = oracle::q(p.a_prev_sum.lo());
	Q off = start, pw = 1;
	MemberCursor cur(p);
	for (std::uint64_t j = 1; j <= p.k_tilde; j++, cur.next()) {
		ASSERT_FALSE(cur.done());
		Enclosure o = p.offset(j);
		EXPECT_TRUE(o.exact());
		EXPECT_EQ(oracle::q(o.lo()), off);
		EXPECT_EQ(oracle::q(p.member_mid(j).lo()), off + pw * I / 2);
		EXPECT_TRUE(cur.offset().contains(oracle::r(off)));
		EXPECT_TRUE(cur.mid().contains(oracle::r(off + pw * I / 2)));
		off += Q(19, 10) * I * pw;
		pw *= d;
	}
	EXPECT_TRUE(cur.done());
	EXPECT_TRUE(p.section_end().contains(oracle::r(off)));
}

TEST(Sections, PlansHalveAndCheck)
{
	const auto &p = plans3();
	for (std::size_t n = 0; n < p.size(); n++) {
		EXPECT_LE(p[n].a_n.hi(), p[n].a_prev.lo() / Rational(2));
		Enclosure next = n + 1 < p.size() ? p[n + 1].a_prev_sum : p[n].section_end();
		SectionCheck c = check_section(p[n], next);
		EXPECT_TRUE(c.pass) << c.detail;
		EXPECT_TRUE(c.halving && c.conditions && c.member_gaps && c.trailing_gap && c.count_bound);
	}
	EXPECT_THROW(build_sections(0), std::invalid_argument);
	EXPECT_THROW(build_sections(kMaxLevels + 1), std::invalid_argument);
}

TEST(Sections, PlanDumpMentionsEveryLevel)
{
	std::string s = format_plan(plans3());
	EXPECT_EQ(s.rfind("sectionplan v1 levels=3", 0), 0u);
	EXPECT_NE(s.find("k_tilde 960"), std::string::npos);
	EXPECT_NE(s.find("level 3"), std::string::npos);
}

TEST(Counting, PredicateMatchesOracle)
{
	for (std::uint64_t K = 0; K <= 400; K++)
		for (std::uint64_t k = 0; k <= 25; k++)
			ASSERT_EQ(counting_predicate(K, k), oracle_counting(K, k)) << K << " " << k;
	EXPECT_TRUE(counting_predicate(20, 5));
	EXPECT_FALSE(counting_predicate(21, 5));
	EXPECT_TRUE(counting_predicate(40, 10));
}

TEST(Counting, BoundIsLeastAndStable)
{
	for (std::uint64_t k = 1; k <= 20; k++) {
		auto r = counting_bound(k);
		ASSERT_TRUE(r);
		EXPECT_EQ(r->k_tilde, 20 * r->n);
		if (r->n > 1)
			EXPECT_FALSE(oracle_counting(20 * (r->n - 1), k));
		for (std::uint64_t n = r->n; 20 * n <= 1000; n++)
			EXPECT_TRUE(oracle_counting(20 * n, k)) << k << " " << n;
	}
	auto lvl = counting_bound(5, plans3());
	ASSERT_TRUE(lvl);
	EXPECT_EQ(lvl->n, 1u);
	EXPECT_FALSE(counting_bound(1000000, plans3()));
}

TEST(WeakStep, ExampleAndRejections)
{
	BitStream z = BitStream::zeros();
	WeakStepReport r = weak_step_inequality(z, Rational(1, 2), 2, {1, 0}, {0, 1}, 1);
	EXPECT_TRUE(r.pass) << r.rejected;
	EXPECT_TRUE(r.rejected.empty());
	EXPECT_GE(r.lhs, r.middle);
	EXPECT_GT(r.middle, r.rhs);
	EXPECT_FALSE(weak_step_inequality(BitStream::ones(), Rational(1, 2), 2, {1, 0}, {0, 1}, 1)
	                 .rejected.empty());
	EXPECT_FALSE(weak_step_inequality(z, Rational(1, 2), 2, {0, 1}, {1, 0}, 1).rejected.empty());
	EXPECT_FALSE(weak_step_inequality(z, Rational(1, 2), 2, {1, 1}, {1, 0}, 1).rejected.empty());
	EXPECT_FALSE(weak_step_inequality(z, Rational(1, 2), 2, {1, 1}, {1, 0, 0}, 1).rejected.empty());
}

TEST(WeakStep, ExhaustiveSmallWords)
{
	const SectionPlan &p = plans3()[0];
	BitStream tau = BitStream::parse("0100:period(0)");
	for (unsigned n = 1; n <= 5; n++)
		for (std::uint64_t a = 0; a < (1u << n); a++)
			for (std::uint64_t b = a + 1; b < (1u << n); b++) {
				BitWord y = bitword_from_index(a, n), x = bitword_from_index(b, n);
				for (unsigned m = 1; m <= n; m++)
					for (std::uint64_t j : {std::uint64_t(1), std::uint64_t(7), p.k_tilde}) {
						WeakStepReport r = weak_step_inequality(tau, p.delta, j, x, y, m);
						if (r.rejected.empty())
							ASSERT_TRUE(r.pass) << format_bitword(x) << " " << format_bitword(y);
					}
			}
}
