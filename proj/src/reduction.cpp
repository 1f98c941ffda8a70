/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/reduction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace hyperfrac {

BitStream tau(const GridSet &a, std::uint64_t n)
{
	return a.column_stream(n);
}

WeightedCantor member_shape(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                            unsigned known_rows)
{
	if (j < 1 || j > plan.k_tilde)
		throw std::out_of_range("member index outside 1..k_tilde");
	Enclosure f = plan.delta_power(j - 1);
	if (known_rows == 0)
		return WeightedCantor(plan.lead_zeros(), f, tau(a, plan.n));
	return WeightedCantor::truncated(plan.lead_zeros(), f, tau(a, plan.n), known_rows);
}

static void require_depth(const SectionPlan &plan, unsigned depth)
{
	if (depth < plan.i_n)
		throw std::invalid_argument("depth " + std::to_string(depth) + " is below i_" +
		                            std::to_string(plan.n) + " = " + std::to_string(plan.i_n));
}

CompactCover distorted_member(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                              unsigned depth, bool exact_weights)
{
	require_depth(plan, depth);
	WeightedCantor shape = member_shape(a, plan, j, exact_weights ? 0 : depth);
	return shape.centered_cover(depth, plan.member_mid(j));
}

static const Rational &exact_value(const Enclosure &e, const char *what)
{
	if (!e.exact())
		throw std::logic_error(std::string(what) + " is not known exactly at this level");
	return e.lo();
}

CompactCover contracted_member(const SectionPlan &plan, std::uint64_t j, unsigned depth)
{
	require_depth(plan, depth);
	CompactCover piece = addressed_cantor_cover(depth, plan.lead_zeros()).cover();
	return affine_image(piece, exact_value(plan.delta_power(j - 1), "delta power"),
	                    exact_value(plan.offset(j), "member offset"));
}

CompactCover expanded_member(const SectionPlan &plan, std::uint64_t j, unsigned depth)
{
	require_depth(plan, depth);
	CompactCover piece = addressed_cantor_cover(depth, plan.lead_zeros()).cover();
	return midpoint_recenter(piece, exact_value(plan.member_mid(j), "member midpoint"));
}

/* Members of a section whose leading zeros reach the depth are single
 * hulls of diameter 10^-p around their midpoints, independent of A; the
 * scaled hulls are kept per (levels, n). */
static const std::vector<Interval> &hull_section(unsigned levels, const SectionPlan &plan,
                                                 const Rational &s)
{
	static std::mutex mu;
	static std::map<std::pair<unsigned, unsigned>, std::vector<Interval>> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto &hulls = cache[{levels, plan.n}];
	if (hulls.empty()) {
		Rational half = pow10_inv(plan.lead_zeros()) / Rational(2);
		hulls.reserve(plan.k_tilde);
		for (MemberCursor cur(plan); !cur.done(); cur.next()) {
			Enclosure mid = cur.mid();
			hulls.emplace_back(floor_dyadic((mid.lo() - half) * s, kPhiGridBits),
			                   ceil_dyadic((mid.hi() + half) * s, kPhiGridBits));
		}
	}
	return hulls;
}

PhiResult phi(const GridSet &a, unsigned levels, unsigned depth, std::size_t max_intervals)
{
	if (levels < 1 || levels > kMaxLevels)
		throw std::invalid_argument("levels must lie in 1.." + std::to_string(kMaxLevels));
	if (depth < 1 || depth > kMaxCantorDepth)
		throw std::invalid_argument("depth must lie in 1.." + std::to_string(kMaxCantorDepth));

	PhiResult out{CompactCover::unit(), build_sections(std::min(levels + 1, kMaxLevels)),
	              Enclosure(), 0, 0, Interval(), {}};
	const auto &plans = out.plans;

	/* x lies between S = a_0 + ... + a_L and S + 2 a_(L+1) */
	const SectionPlan &last = plans[levels - 1];
	Enclosure S = last.section_end();
	Rational next_a = levels < plans.size() ? plans[levels].a_n.hi() : last.a_n.hi() / Rational(2);
	Rational x_lo = S.lo(), x_hi = S.hi() + Rational(2) * next_a;
	out.x = Enclosure(x_lo, x_hi);
	out.scale = floor_dyadic(Rational(1) / x_hi, kPhiGridBits);
	out.scale_error = x_hi * (Rational(1) / x_lo - out.scale);

	using u128 = unsigned __int128;
	u128 count = u128(1) << depth;
	for (unsigned n = 0; n < levels; n++) {
		unsigned p = plans[n].lead_zeros();
		unsigned free = depth > p ? depth - p : 0;
		if (free > 40)
			throw ResourceCap("phi would exceed the interval cap");
		count += u128(plans[n].k_tilde) << free;
	}
	if (count + 1 > max_intervals) {
		std::ostringstream os;
		os << "phi at " << levels << " levels and depth " << depth << " needs "
		   << std::uint64_t(std::min<u128>(count + 1, ~std::uint64_t(0)))
		   << " intervals, cap is " << max_intervals;
		throw ResourceCap(os.str());
	}

	const Rational &s = out.scale;
	std::vector<Interval> iv;
	iv.reserve(std::size_t(count) + 1);
	auto push = [&](const Rational &lo, const Rational &hi) {
		iv.emplace_back(floor_dyadic(lo * s, kPhiGridBits), ceil_dyadic(hi * s, kPhiGridBits));
	};

	CompactCover c0 = cantor_cover(depth);
	for (const auto &c : c0.intervals())
		push(c.lo, c.hi);

	for (unsigned n = 0; n < levels; n++) {
		const SectionPlan &plan = plans[n];
		unsigned p = plan.lead_zeros();
		unsigned d = std::max(depth, p);
		BitStream t = tau(a, plan.n);
		if (depth <= p) {
			const auto &hulls = hull_section(levels, plan, s);
			iv.insert(iv.end(), hulls.begin(), hulls.end());
			out.sections.emplace_back(floor_dyadic(plan.a_prev_sum.lo() * s, kPhiGridBits),
			                          ceil_dyadic(plan.section_end().hi() * s, kPhiGridBits));
			continue;
		}
		for (MemberCursor cur(plan); !cur.done(); cur.next()) {
			WeightedCantor shape = WeightedCantor::truncated(p, cur.power(), t, depth);
			CompactCover member = shape.centered_cover(d, cur.mid());
			for (const auto &c : member.intervals())
				push(c.lo, c.hi);
		}
		out.sections.emplace_back(floor_dyadic(plan.a_prev_sum.lo() * s, kPhiGridBits),
		                          ceil_dyadic(plan.section_end().hi() * s, kPhiGridBits));
	}

	out.tail = Interval(floor_dyadic(S.lo() * s, kPhiGridBits), Rational(1));
	iv.push_back(out.tail);

	CompactCover cover(std::move(iv));
	Rational width = 0;
	for (const auto &c : cover.intervals())
		width = max(width, c.length());
	out.cover = cover.with_resolution(ceil_dyadic(width + out.scale_error, kPhiGridBits));
	return out;
}

static Rational exact_knot(const Enclosure &e)
{
	if (!e.exact())
		throw ConstructionError("witness knots are not exact; lower the depth");
	return e.lo();
}

WitnessIfs witness_ifs_for_distorted_cantor(const SectionPlan &plan, std::uint64_t j,
                                            const BitStream &tau, unsigned extra_depth)
{
	if (j < 1 || j > plan.k_tilde)
		throw std::out_of_range("member index outside 1..k_tilde");
	if (extra_depth > 16)
		throw std::invalid_argument("witness depth too large");
	WeightedCantor shape(plan.lead_zeros(), plan.delta_power(j - 1), tau);
	const unsigned p = plan.lead_zeros();
	const unsigned d = p + extra_depth;
	const Rational td = exact_knot(shape.tail(d));
	const Rational td1 = exact_knot(shape.tail(d + 1));

	std::vector<Rational> xs, y0, y1;
	for (std::uint64_t v = 0; v < (std::uint64_t(1) << extra_depth); v++) {
		BitWord rest = bitword_from_index(v, extra_depth);
		BitWord s(p, 0);
		s.insert(s.end(), rest.begin(), rest.end());
		Rational lo = exact_knot(shape.prefix_value(s));
		xs.push_back(lo);
		xs.push_back(lo + td);
		for (std::uint8_t b : {0, 1}) {
			BitWord h(p, 0);
			h.push_back(b);
			h.insert(h.end(), rest.begin(), rest.end());
			Rational hlo = exact_knot(shape.prefix_value(h));
			auto &ys = b ? y1 : y0;
			ys.push_back(hlo);
			ys.push_back(hlo + td1);
		}
	}
	std::vector<IntervalMap> maps;
	maps.emplace_back(PiecewiseAffine(xs, std::move(y0)));
	maps.emplace_back(PiecewiseAffine(std::move(xs), std::move(y1)));
	return WitnessIfs{std::move(shape), d, std::move(maps)};
}

IfsSystem witness_system(const WitnessIfs &w)
{
	return IfsSystem(w.maps, Strictness::strict);
}

static bool same_intervals(const CompactCover &a, const CompactCover &b)
{
	auto x = a.intervals(), y = b.intervals();
	return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

WitnessCheck check_witness(const WitnessIfs &w)
{
	WitnessCheck rep{true, true, true, true, 0, 0, ""};
	const unsigned p = w.shape.lead_zeros();
	std::ostringstream detail;

	for (unsigned d = p; d <= w.depth; d++) {
		CompactCover img = hutchinson_apply(w.maps, w.shape.cover(d));
		if (!same_intervals(img, w.shape.cover(d + 1))) {
			rep.self_similar = false;
			detail << "S(C_" << d << ") differs from C_" << d + 1 << "; ";
		}
	}

	std::set<Rational> ends, hits;
	CompactCover top = w.shape.cover(w.depth + 1);
	for (const auto &c : top.intervals()) {
		ends.insert(c.lo);
		ends.insert(c.hi);
	}
	for (const auto &m : w.maps) {
		const auto &pl = std::get<PiecewiseAffine>(m);
		hits.insert(pl.ys().begin(), pl.ys().end());
		const auto &xs = pl.xs();
		const auto &ys = pl.ys();
		for (std::size_t i = 0; i < xs.size(); i++) {
			for (std::size_t k = i + 1; k < xs.size(); k++) {
				Rational dx = xs[k] - xs[i];
				Rational dy = abs(ys[k] - ys[i]);
				rep.chords_checked++;
				Rational ratio = dy / dx;
				if (ratio > rep.max_ratio)
					rep.max_ratio = ratio;
				if (dy * Rational(5) > dx)
					rep.chords = false;
			}
		}
	}
	if (ends != hits) {
		rep.endpoints = false;
		detail << "knot images differ from the endpoints at depth " << w.depth + 1 << "; ";
	}
	if (!rep.chords)
		detail << "a chord ratio exceeds 1/5; ";
	rep.pass = rep.self_similar && rep.endpoints && rep.chords;
	detail << "max chord ratio " << rep.max_ratio.to_double() << " over " << rep.chords_checked
	       << " chords";
	rep.detail = detail.str();
	return rep;
}

WeakStepReport weak_step_inequality(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                                    const BitWord &x, const BitWord &y, unsigned m)
{
	return weak_step_inequality(tau(a, plan.n), plan.delta, j, x, y, m);
}

} // namespace hyperfrac
