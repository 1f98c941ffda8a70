/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/sections.hpp"

#include <limits>
#include <sstream>

namespace hyperfrac {

Lemma3Report lemma3_gap_checks(unsigned n, const Rational &delta)
{
	if (delta.sign() <= 0 || delta >= 1)
		throw std::invalid_argument("delta must lie in (0,1)");
	Lemma3Report r;
	Rational big = Rational(8) * pow10_inv(n + 1);
	r.first_lhs = delta * big;
	r.first_rhs = Rational(8) * pow10_inv(n + 2);
	r.second_lhs = big;
	r.second_rhs = delta * (big + Rational(9) * pow10_inv(n + 2));
	r.first = r.first_lhs > r.first_rhs;
	r.second = r.second_lhs < r.second_rhs;
	r.pass = r.first && r.second;
	return r;
}

const char *condition_name(Condition c)
{
	static const char *names[] = {"(1)", "(2)", "(2')", "(3)", "(3')", "(4)", "(4')"};
	return names[c];
}

Rational condition_slack(Condition c, const Rational &q, const Rational &r)
{
	const Rational nine(9, 10), one(1);
	Rational gap_r = nine * r - (one - q);
	Rational gap_q = nine * q - (one - q) / Rational(2);
	switch (c) {
	case kCond1: return q - Rational(80, 89);
	case kCond2: return gap_r;
	case kCond2p: return gap_q;
	case kCond3: return gap_r - Rational(8, 10);
	case kCond3p: return gap_q - Rational(8, 10);
	case kCond4: return gap_r + Rational(9, 100) * q - nine;
	case kCond4p: return gap_q + Rational(9, 100) * q - nine;
	default: break;
	}
	throw std::invalid_argument("unknown condition");
}

ConditionReport check_conditions(const Rational &q, const Rational &r)
{
	ConditionReport rep;
	rep.q = q;
	rep.r = r;
	rep.all_hold = true;
	for (int c = 0; c < kNumConditions; c++) {
		rep.holds[c] = condition_slack(Condition(c), q, r).sign() > 0;
		rep.all_hold = rep.all_hold && rep.holds[c];
	}
	auto implies = [&](bool a, bool b, const char *what) {
		if (a && !b)
			rep.chart_violations.push_back(what);
	};
	auto iff = [&](bool a, bool b, const char *what) {
		if (a != b)
			rep.chart_violations.push_back(what);
	};
	const auto &h = rep.holds;
	implies(h[kCond1], h[kCond2], "(1) => (2)");
	implies(h[kCond1], h[kCond2p], "(1) => (2')");
	implies(q > Rational(10, 19), h[kCond2], "q > 10/19 => (2)");
	iff(h[kCond2p], q > Rational(5, 14), "(2') <=> q > 5/14");
	implies(q > Rational(18, 19), h[kCond3], "q > 18/19 => (3)");
	iff(h[kCond3p], q > Rational(13, 14), "(3') <=> q > 13/14");
	implies(q > Rational(190, 199), h[kCond4], "q > 190/199 => (4)");
	iff(h[kCond4p], q > Rational(140, 149), "(4') <=> q > 140/149");
	rep.chart_holds = rep.chart_violations.empty();
	return rep;
}

ConditionReport check_delta_conditions(std::uint64_t k_tilde, const Rational &delta)
{
	if (k_tilde < 2)
		throw std::invalid_argument("k_tilde must be at least 2");
	if (delta.sign() <= 0 || delta >= 1)
		throw std::invalid_argument("delta must lie in (0,1)");
	Rational r = pow(delta, k_tilde - 2);
	return check_conditions(r * delta, r);
}

ConditionReport check_conditions_from_power(const Rational &q)
{
	return check_conditions(q, q);
}

std::array<Certainty, kNumConditions> certify_conditions(const Enclosure &q, const Enclosure &r)
{
	std::array<Certainty, kNumConditions> out;
	for (int c = 0; c < kNumConditions; c++) {
		if (condition_slack(Condition(c), q.lo(), r.lo()).sign() > 0)
			out[c] = Certainty::pass;
		else if (condition_slack(Condition(c), q.hi(), r.hi()).sign() <= 0)
			out[c] = Certainty::fail;
		else
			out[c] = Certainty::unknown;
	}
	return out;
}

Rational choose_delta(std::uint64_t k_tilde)
{
	if (k_tilde < 2)
		throw std::invalid_argument("k_tilde must be at least 2");
	return Rational(1) - Rational(mpz_class(9), mpz_class(398) * mpz_class(std::to_string(k_tilde - 1)));
}

Enclosure SectionPlan::delta_power(std::uint64_t e) const
{
	return pow(Enclosure(delta), e);
}

Enclosure SectionPlan::offset(std::uint64_t j) const
{
	if (j < 1 || j > k_tilde)
		throw std::out_of_range("member index outside 1..k_tilde");
	Rational step = Rational(19, 10) * interval / (Rational(1) - delta);
	return a_prev_sum + (Enclosure(Rational(1)) - delta_power(j - 1)) * Enclosure(step);
}

Enclosure SectionPlan::member_mid(std::uint64_t j) const
{
	return offset(j) + delta_power(j - 1) * Enclosure(interval / Rational(2));
}

MemberCursor::MemberCursor(const SectionPlan &plan)
: plan_(plan), delta_(plan.delta), pw_(Rational(1)), offset_(plan.a_prev_sum),
  step_(Rational(19, 10) * plan.interval)
{
}

Enclosure MemberCursor::mid() const
{
	return offset_ + pw_ * Enclosure(plan_.interval / Rational(2));
}

void MemberCursor::next()
{
	offset_ += step_ * pw_;
	pw_ *= delta_;
	j_++;
}

std::uint64_t construction_count(unsigned i, const std::vector<SectionPlan> &earlier)
{
	using u128 = unsigned __int128;
	if (i < 1 || i > 64)
		throw std::out_of_range("construction depth out of range");
	u128 k = u128(1) << (i - 1);
	for (const auto &p : earlier) {
		if (i < p.i_n)
			throw std::invalid_argument("construction depth below an earlier i_n");
		if (i - p.i_n >= 64)
			throw std::overflow_error("construction count overflow");
		k += u128(p.k_tilde) << (i - p.i_n);
	}
	if (k > std::numeric_limits<std::uint64_t>::max())
		throw std::overflow_error("construction count overflow");
	return std::uint64_t(k);
}

static Rational rational_u64(std::uint64_t v)
{
	return Rational(mpz_class(std::to_string(v)), mpz_class(1));
}

std::vector<SectionPlan> build_sections(unsigned levels)
{
	if (levels < 1 || levels > kMaxLevels)
		throw std::invalid_argument("levels must lie in 1.." + std::to_string(kMaxLevels));
	std::vector<SectionPlan> plans;
	Enclosure a_prev(Rational(19, 10));
	Enclosure sum(Rational(19, 10));

	for (unsigned n = 1; n <= levels; n++) {
		SectionPlan p;
		p.n = n;
		p.a_prev = a_prev;
		p.a_prev_sum = sum;
		p.eps = a_prev * Enclosure(Rational(1, 10 * n));

		unsigned i = plans.empty() ? 1 : plans.back().i_n;
		for (;; i++) {
			std::uint64_t k = construction_count(i, plans);
			Rational lhs = Rational(19, 10) * rational_u64(k) * pow10_inv(i - 1);
			if (lhs < p.eps.lo()) {
				p.i_n = i;
				p.k_count = k;
				break;
			}
			if (lhs < p.eps.hi())
				throw ConstructionError("cannot decide the measure test at level " +
				                        std::to_string(n) + ", depth " + std::to_string(i));
		}
		unsigned __int128 kt = (unsigned __int128)p.k_count * 5 * n;
		if (kt > std::numeric_limits<std::uint64_t>::max())
			throw std::overflow_error("k_tilde overflow at level " + std::to_string(n));
		p.k_tilde = std::uint64_t(kt);
		p.delta = choose_delta(p.k_tilde);
		p.interval = pow10_inv(p.i_n - 1);
		Rational scale = Rational(19, 10) * p.interval / (Rational(1) - p.delta);
		p.a_n = (Enclosure(Rational(1)) - p.delta_power(p.k_tilde)) * Enclosure(scale);
		if (!(p.a_n.hi() <= a_prev.lo() / Rational(2)))
			throw ConstructionError("a_n <= a_(n-1)/2 fails at level " + std::to_string(n));

		a_prev = p.a_n;
		sum += p.a_n;
		plans.push_back(std::move(p));
	}
	return plans;
}

std::string format_plan(const std::vector<SectionPlan> &plans)
{
	std::ostringstream os;
	os << "sectionplan v1 levels=" << plans.size() << "\n";
	for (const auto &p : plans) {
		os << "level " << p.n << "\n"
		   << "  i_n " << p.i_n << "\n"
		   << "  k_count " << p.k_count << "\n"
		   << "  k_tilde " << p.k_tilde << "\n"
		   << "  delta " << p.delta << "\n"
		   << "  interval " << p.interval << "\n"
		   << "  eps " << p.eps.str() << "\n"
		   << "  a_prev_sum " << p.a_prev_sum.str() << "\n"
		   << "  a_n " << p.a_n.str() << "\n";
	}
	return os.str();
}

SectionCheck check_section(const SectionPlan &plan, const Enclosure &next_start)
{
	SectionCheck c{};
	std::ostringstream why;
	const Rational &I = plan.interval;

	c.halving = plan.a_n.hi() <= plan.a_prev.lo() / Rational(2);
	if (!c.halving)
		why << "a_n exceeds a_(n-1)/2; ";

	Enclosure r = plan.delta_power(plan.k_tilde - 2);
	Enclosure q = r * Enclosure(plan.delta);
	auto cert = certify_conditions(q, r);
	c.conditions = true;
	for (int k = 0; k < kNumConditions; k++)
		if (cert[k] != Certainty::pass) {
			c.conditions = false;
			why << "condition " << condition_name(Condition(k)) << " not certified; ";
		}

	c.count_bound = Rational(19, 10) * rational_u64(plan.k_count) * I < plan.eps.lo();
	if (!c.count_bound)
		why << "1.9 k |I| >= eps; ";

	/* |I| (0.9 r - (1 - q)) */
	Enclosure bound = (Enclosure(Rational(9, 10)) * r - (Enclosure(Rational(1)) - q)) * Enclosure(I);
	c.member_gaps = bound.lo().sign() > 0;
	Enclosure last_mid;
	if (plan.k_tilde <= kEnumerateGapsUpTo) {
		MemberCursor cur(plan);
		Enclosure prev = cur.mid();
		for (cur.next(); !cur.done(); cur.next()) {
			Enclosure m = cur.mid();
			Enclosure gap = m - prev - Enclosure(I);
			c.gaps_checked++;
			if (c.member_gaps && gap.lo() < bound.hi()) {
				c.member_gaps = false;
				why << "member gap " << cur.j() - 1 << " below the (2) bound; ";
			}
			prev = std::move(m);
		}
		last_mid = prev;
	} else {
		/* gaps decrease in j, so the last one is the smallest */
		Enclosure m1 = plan.member_mid(plan.k_tilde - 1);
		last_mid = plan.member_mid(plan.k_tilde);
		Enclosure gap = last_mid - m1 - Enclosure(I);
		c.gaps_checked = 1;
		if (gap.lo() < bound.hi())
			c.member_gaps = false;
	}
	if (!c.member_gaps)
		why << "member gaps not certified; ";

	Enclosure trailing = next_start - last_mid - Enclosure(I / Rational(2));
	c.trailing_gap = trailing.lo() > Rational(8, 10) * I;
	if (!c.trailing_gap)
		why << "gap behind the section not above 0.8|I|; ";

	c.pass = c.halving && c.conditions && c.count_bound && c.member_gaps && c.trailing_gap;
	c.detail = why.str();
	return c;
}

bool counting_predicate(std::uint64_t K, std::uint64_t k)
{
	return K > (K + 1) / 2 + (K + 4) / 5 + k;
}

std::optional<CountingResult> counting_bound(std::uint64_t k, std::uint64_t k_count,
                                             std::uint64_t n_max)
{
	for (std::uint64_t n = 1; n <= n_max; n++) {
		std::uint64_t K = k_count * 5 * n;
		if (counting_predicate(K, k))
			return CountingResult{n, K, (K + 1) / 2 + (K + 4) / 5 + k};
	}
	return std::nullopt;
}

std::optional<CountingResult> counting_bound(std::uint64_t k, const std::vector<SectionPlan> &plans)
{
	for (const auto &p : plans)
		if (counting_predicate(p.k_tilde, k))
			return CountingResult{p.n, p.k_tilde, (p.k_tilde + 1) / 2 + (p.k_tilde + 4) / 5 + k};
	return std::nullopt;
}

WeakStepReport weak_step_inequality(const BitStream &tau, const Rational &delta,
                                    std::uint64_t j, const BitWord &x, const BitWord &y,
                                    unsigned m)
{
	WeakStepReport rep{false, "", 0, 0, 0};
	if (x.size() != y.size())
		rep.rejected = "x and y must have equal length";
	else if (!(y < x))
		rep.rejected = "x must be lexicographically greater than y";
	else if (m < 1 || m > x.size())
		rep.rejected = "m must lie in 1..lh(x)";
	else if (tau.bit(m))
		rep.rejected = "tau(m) = 1; the step needs a row missing from A";
	else if (std::equal(x.begin(), x.begin() + m, y.begin()))
		rep.rejected = "x|m = y|m; m must reach the first difference";
	else if (delta.sign() <= 0 || delta >= 1)
		rep.rejected = "delta must lie in (0,1)";
	else if (j < 1)
		rep.rejected = "j starts at 1";
	if (!rep.rejected.empty())
		return rep;

	Rational dj1 = pow(delta, j - 1), dj = dj1 * delta;
	Rational rest_j = 0, dm = 0;
	BitWord px, py;
	for (std::size_t l = 1; l <= x.size(); l++) {
		px.push_back(x[l - 1]);
		py.push_back(y[l - 1]);
		Rational diff = d_value(px) - d_value(py);
		bool on = tau.bit(l);
		rep.lhs += on ? diff : diff * dj1;
		if (l == m)
			dm = diff;
		else
			rest_j += on ? diff : diff * dj;
	}
	rep.middle = rest_j + dm * dj1;
	rep.rhs = rest_j + dm * dj;
	rep.pass = rep.lhs >= rep.middle && rep.middle > rep.rhs;
	return rep;
}

} // namespace hyperfrac
