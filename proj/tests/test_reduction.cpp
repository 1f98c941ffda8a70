/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include <gtest/gtest.h>

#include "hyperfrac/borel.hpp"
#include "hyperfrac/reduction.hpp"
#include "oracle.hpp"

using namespace hyperfrac;

namespace {

const std::vector<SectionPlan> &plans2()
{
	static const std::vector<SectionPlan> p = build_sections(2);
	return p;
}

bool same(const CompactCover &a, const CompactCover &b)
{
	auto x = a.intervals(), y = b.intervals();
	return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

GridSet mixed()
{
	return GridSet({{1, Column::finite({3, 5, 6})}, {2, Column::cofinite_except({4})}},
	               Fill::empty, Tail::repeat);
}

} // namespace

TEST(Tau, ColumnBits)
{
	EXPECT_EQ(tau(mixed(), 1).prefix(7), (BitWord{0, 0, 1, 0, 1, 1, 0}));
	EXPECT_EQ(tau(mixed(), 2).prefix(5), (BitWord{1, 1, 1, 0, 1}));
	EXPECT_EQ(tau(mixed(), 7), tau(mixed(), 2));
	EXPECT_TRUE(tau(GridSet::empty(), 3).eventually_zero());
	EXPECT_TRUE(tau(GridSet::full(), 3).eventually_one());
}

TEST(Members, FirstMemberIgnoresTheGridSet)
{
	const SectionPlan &p = plans2()[0];
	for (const GridSet &g : {GridSet::empty(), GridSet::full(), mixed()})
		EXPECT_TRUE(same(distorted_member(g, p, 1, 6, true), expanded_member(p, 1, 6)));
}

TEST(Members, FullSetGivesExpandedMembers)
{
	const SectionPlan &p = plans2()[0];
	for (std::uint64_t j : {std::uint64_t(2), std::uint64_t(9), p.k_tilde})
		EXPECT_TRUE(same(distorted_member(GridSet::full(), p, j, 6, true), expanded_member(p, j, 6)));
}

TEST(Members, EmptySetGivesContractedMembers)
{
	const SectionPlan &p = plans2()[0];
	for (std::uint64_t j : {std::uint64_t(1), std::uint64_t(5), p.k_tilde}) {
		CompactCover c = contracted_member(p, j, 6);
		EXPECT_TRUE(same(distorted_member(GridSet::empty(), p, j, 6, true), c)) << j;
		EXPECT_EQ(c.min(), p.offset(j).lo());
		Rational width = oracle::r(oracle::q(p.delta_power(j - 1).lo()) * oracle::q(p.interval));
		EXPECT_EQ(c.diameter(), width);
	}
}

TEST(Members, TruncatedMemberContainsExact)
{
	const SectionPlan &p = plans2()[0];
	CompactCover e = distorted_member(mixed(), p, 7, 6, true);
	CompactCover t = distorted_member(mixed(), p, 7, 6, false);
	EXPECT_EQ(directed_distance(e, t), Rational(0));
}

TEST(Members, DepthBelowSectionIsRejected)
{
	const SectionPlan &p = plans2()[0];
	EXPECT_THROW(distorted_member(mixed(), p, 1, p.i_n - 1), std::invalid_argument);
	EXPECT_THROW(member_shape(mixed(), p, 0), std::out_of_range);
	EXPECT_THROW(member_shape(mixed(), p, p.k_tilde + 1), std::out_of_range);
}

TEST(Phi, CantorPartDoesNotDependOnTheSet)
{
	PhiResult a = phi(GridSet::empty(), 2, 6), b = phi(GridSet::full(), 2, 6);
	EXPECT_EQ(a.scale, b.scale);
	Rational top = ceil_dyadic(a.scale, kPhiGridBits);
	std::vector<Interval> ca, cb;
	for (const auto &c : a.cover.intervals())
		if (c.hi <= top)
			ca.push_back(c);
	for (const auto &c : b.cover.intervals())
		if (c.hi <= top)
			cb.push_back(c);
	EXPECT_EQ(ca.size(), 64u);
	EXPECT_EQ(ca, cb);
}

TEST(Phi, ScaleAndTail)
{
	PhiResult r = phi(mixed(), 2, 5);
	EXPECT_EQ(r.plans.size(), 3u);
	EXPECT_LE(r.scale * r.x.hi(), Rational(1));
	EXPECT_GT(r.scale * r.x.hi(), Rational(1) - pow2_inv(60));
	EXPECT_EQ(r.cover.max(), Rational(1));
	EXPECT_EQ(r.cover.min(), Rational(0));
	Rational tail_len = r.tail.hi - r.tail.lo;
	EXPECT_LE(tail_len, (r.x.hi() - r.x.lo()) / r.x.lo() + pow2_inv(63));
	EXPECT_LE(tail_len, Rational(2) * r.plans[2].a_n.hi() / r.x.lo() * Rational(2));
	ASSERT_EQ(r.sections.size(), 2u);
	EXPECT_LE(r.sections[0].hi - r.sections[1].lo, pow2_inv(kPhiGridBits));
	EXPECT_LT(r.sections[0].lo, r.sections[1].lo);
	EXPECT_LE(r.sections[1].hi, r.tail.lo + pow2_inv(kPhiGridBits));
}

TEST(Phi, GridRounding)
{
	PhiResult r = phi(mixed(), 1, 5);
	Rational grid = pow2_inv(kPhiGridBits);
	for (const auto &c : r.cover.intervals()) {
		EXPECT_EQ(floor_dyadic(c.lo, kPhiGridBits), c.lo);
		EXPECT_EQ(ceil_dyadic(c.hi, kPhiGridBits), c.hi);
		EXPECT_LE(c.length(), r.cover.resolution());
	}
	EXPECT_EQ(ceil_dyadic(r.cover.resolution(), kPhiGridBits), r.cover.resolution());
	EXPECT_GE(r.cover.resolution(), grid);
}

TEST(Phi, OnlyTheBuiltRowsMatter)
{
	/* agree on columns 1..2 and rows 1..6, differ beyond */
	GridSet a({{1, Column::finite({2, 9})}, {2, Column::finite({1, 3})}}, Fill::empty, Tail::empty);
	GridSet b({{1, Column::finite({2, 11, 12})}, {2, Column::cofinite_except({2, 4, 5, 6})},
	           {3, Column::full()}},
	          Fill::full, Tail::full);
	PhiResult pa = phi(a, 2, 6), pb = phi(b, 2, 6);
	EXPECT_TRUE(same(pa.cover, pb.cover));
	EXPECT_EQ(hausdorff_distance(pa.cover, pb.cover), Rational(0));
}

TEST(Phi, DistanceShrinksWithAgreement)
{
	GridSet a = GridSet::empty();
	GridSet b({{1, Column::empty()}}, Fill::full, Tail::full);
	PhiResult pa = phi(a, 2, 6), pb = phi(b, 2, 6);
	Rational d = hausdorff_distance(pa.cover, pb.cover);
	EXPECT_GT(d, Rational(0));
	Rational bound = Rational(2) * pa.plans[1].a_n.hi() / pa.x.lo() + pa.cover.resolution() +
	                 pb.cover.resolution();
	EXPECT_LE(d, bound);
	PhiResult qa = phi(GridSet::empty(), 2, 6), qb = phi(GridSet::full(), 2, 6);
	EXPECT_GT(hausdorff_distance(qa.cover, qb.cover), d);
}

TEST(Phi, DeeperCoversNest)
{
	for (const GridSet &g : {GridSet::empty(), mixed()}) {
		PhiResult r4 = phi(g, 2, 4), r5 = phi(g, 2, 5), r6 = phi(g, 2, 6);
		EXPECT_EQ(directed_distance(r5.cover, r4.cover), Rational(0));
		EXPECT_EQ(directed_distance(r6.cover, r5.cover), Rational(0));
		EXPECT_LE(r6.cover.size(), std::size_t(1) << 20);
	}
}

TEST(Phi, ResourceCap)
{
	EXPECT_THROW(phi(GridSet::empty(), 1, 6, 10), ResourceCap);
	EXPECT_THROW(phi(GridSet::empty(), 4, 6), ResourceCap);
	EXPECT_THROW(phi(GridSet::empty(), 0, 6), std::invalid_argument);
	EXPECT_THROW(phi(GridSet::empty(), 1, 0), std::invalid_argument);
}

TEST(Witness, CantorColumnScalesByATenth)
{
	const SectionPlan &p = plans2()[0];
	WitnessIfs w = witness_ifs_for_distorted_cantor(p, p.k_tilde, BitStream::ones(), 3);
	const auto &f1 = std::get<PiecewiseAffine>(w.maps[0]);
	const auto &f2 = std::get<PiecewiseAffine>(w.maps[1]);
	Rational shift = Rational(9) * pow10_inv(p.lead_zeros() + 1);
	for (std::size_t i = 0; i < f1.xs().size(); i++) {
		EXPECT_EQ(f1.ys()[i], f1.xs()[i] / Rational(10));
		EXPECT_EQ(f2.ys()[i], f1.xs()[i] / Rational(10) + shift);
	}
	WitnessCheck c = check_witness(w);
	EXPECT_TRUE(c.pass) << c.detail;
	EXPECT_EQ(c.max_ratio, Rational(1, 10));
}

TEST(Witness, MapsSendTheMaximumToItsShiftedAddress)
{
	const SectionPlan &p = plans2()[0];
	BitStream t = tau(mixed(), 1);
	WitnessIfs w = witness_ifs_for_distorted_cantor(p, 9, t, 4);
	unsigned q = p.lead_zeros();
	Rational top = w.shape.diameter().lo();
	BitWord zeros(q + 1, 0), one(q, 0);
	one.push_back(1);
	EXPECT_EQ(evaluate(w.maps[0], top), w.shape.value(BitStream(zeros, {1})).lo());
	EXPECT_EQ(evaluate(w.maps[1], top), w.shape.value(BitStream(one, {1})).lo());
	EXPECT_EQ(evaluate(w.maps[0], Rational(0)), Rational(0));
}

TEST(Witness, ChecksPassForSampleColumns)
{
	const SectionPlan &p = plans2()[0];
	for (const GridSet &g : {GridSet::empty(), GridSet::full(), mixed()})
		for (std::uint64_t j : {std::uint64_t(1), std::uint64_t(3), p.k_tilde}) {
			WitnessIfs w = witness_ifs_for_distorted_cantor(p, j, tau(g, 1), 5);
			WitnessCheck c = check_witness(w);
			EXPECT_TRUE(c.pass) << c.detail;
			EXPECT_LE(c.max_ratio, Rational(1, 5));
			EXPECT_NO_THROW(witness_system(w));
		}
}

TEST(Witness, Rejections)
{
	const SectionPlan &p = plans2()[0];
	EXPECT_THROW(witness_ifs_for_distorted_cantor(p, 0, BitStream::ones(), 2), std::out_of_range);
	EXPECT_THROW(witness_ifs_for_distorted_cantor(p, 1, BitStream::ones(), 17),
	             std::invalid_argument);
}

TEST(WeakStep, GridSetOverload)
{
	const SectionPlan &p = plans2()[0];
	WeakStepReport r = weak_step_inequality(mixed(), p, 4, {1, 0, 1}, {0, 1, 1}, 1);
	EXPECT_TRUE(r.pass) << r.rejected;
	WeakStepReport s = weak_step_inequality(mixed(), p, 4, {1, 0, 1}, {1, 0, 0}, 3);
	EXPECT_FALSE(s.rejected.empty());
}
