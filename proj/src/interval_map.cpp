/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/interval_map.hpp"

#include <algorithm>
#include <sstream>

namespace hyperfrac {

PiecewiseAffine::PiecewiseAffine(std::vector<Rational> xs, std::vector<Rational> ys)
: xs_(std::move(xs)), ys_(std::move(ys))
{
	if (xs_.empty() || xs_.size() != ys_.size())
		throw std::invalid_argument("piecewise map needs matching nonempty knot lists");
	for (std::size_t i = 1; i < xs_.size(); i++)
		if (!(xs_[i - 1] < xs_[i]))
			throw std::invalid_argument("piecewise map knots must be strictly increasing");
}

Rational PiecewiseAffine::operator()(const Rational &x) const
{
	if (x <= xs_.front())
		return ys_.front();
	if (x >= xs_.back())
		return ys_.back();
	auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
	std::size_t k = std::size_t(it - xs_.begin());
	const Rational &x0 = xs_[k - 1], &x1 = xs_[k];
	const Rational &y0 = ys_[k - 1], &y1 = ys_[k];
	return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rational PiecewiseAffine::max_abs_slope() const
{
	Rational m = 0;
	for (std::size_t i = 1; i < xs_.size(); i++)
		m = max(m, abs((ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1])));
	return m;
}

bool PiecewiseAffine::nondecreasing() const
{
	for (std::size_t i = 1; i < ys_.size(); i++)
		if (ys_[i] < ys_[i - 1])
			return false;
	return true;
}

Interval PiecewiseAffine::image(const Interval &iv) const
{
	Rational lo = (*this)(iv.lo), hi = lo;
	auto consider = [&](const Rational &y) {
		if (y < lo)
			lo = y;
		if (hi < y)
			hi = y;
	};
	consider((*this)(iv.hi));
	if (!nondecreasing()) {
		auto first = std::upper_bound(xs_.begin(), xs_.end(), iv.lo);
		for (auto it = first; it != xs_.end() && *it < iv.hi; ++it)
			consider(ys_[std::size_t(it - xs_.begin())]);
	}
	return {lo, hi};
}

bool parametric_family_known(const std::string &name, std::size_t nparams)
{
	return (name == "weak_left" || name == "weak_right") && nparams == 2;
}

Rational Parametric::operator()(const Rational &x) const
{
	if (!parametric_family_known(name, params.size()))
		throw std::invalid_argument("unknown parametric family '" + name + "'");
	const Rational &c = params[0], &b = params[1];
	if (name == "weak_left")
		return b + c * x / (c + x);
	Rational u = Rational(1) - x;
	return b - c * u / (c + u);
}

Rational evaluate(const IntervalMap &m, const Rational &x)
{
	return std::visit([&](const auto &f) { return f(x); }, m);
}

Interval image(const IntervalMap &m, const Interval &iv)
{
	if (auto *a = std::get_if<Affine>(&m)) {
		Rational l = (*a)(iv.lo), h = (*a)(iv.hi);
		if (h < l)
			std::swap(l, h);
		return {l, h};
	}
	if (auto *p = std::get_if<PiecewiseAffine>(&m))
		return p->image(iv);
	/* registered families are increasing */
	const auto &q = std::get<Parametric>(m);
	return {q(iv.lo), q(iv.hi)};
}

std::optional<Rational> lipschitz_bound(const IntervalMap &m)
{
	if (auto *a = std::get_if<Affine>(&m))
		return abs(a->slope);
	if (auto *p = std::get_if<PiecewiseAffine>(&m))
		return p->max_abs_slope();
	const auto &q = std::get<Parametric>(m);
	if (!parametric_family_known(q.name, q.params.size()) || q.params[0].sign() <= 0)
		return std::nullopt;
	return Rational(1);
}

WeakCheck weak_contraction_check(const IntervalMap &m)
{
	if (auto *a = std::get_if<Affine>(&m)) {
		if (abs(a->slope) < 1)
			return {WeakCheck::certified_weak, {}, "|slope| < 1"};
		return {WeakCheck::certified_not_weak, std::pair<Rational, Rational>(0, 1),
		        "|slope| >= 1"};
	}
	if (auto *p = std::get_if<PiecewiseAffine>(&m)) {
		const auto &xs = p->xs(), &ys = p->ys();
		for (std::size_t i = 1; i < xs.size(); i++) {
			Rational s = abs((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
			if (s >= 1)
				return {WeakCheck::certified_not_weak,
				        std::pair<Rational, Rational>(xs[i - 1], xs[i]),
				        "segment with |slope| >= 1"};
		}
		return {WeakCheck::certified_weak, {}, "every segment has |slope| < 1"};
	}
	const auto &q = std::get<Parametric>(m);
	if (!parametric_family_known(q.name, q.params.size()))
		return {WeakCheck::inconclusive, {}, "unregistered family"};
	if (q.params[0].sign() <= 0)
		return {WeakCheck::inconclusive, {}, "family parameter c must be positive"};
	return {WeakCheck::certified_weak, {},
	        "chord slope c^2/((c+x)(c+y)) < 1 for distinct x, y in [0,1]"};
}

std::string format_map(const IntervalMap &m)
{
	std::ostringstream os;
	if (auto *a = std::get_if<Affine>(&m)) {
		os << "affine " << a->slope << " " << a->offset;
	} else if (auto *p = std::get_if<PiecewiseAffine>(&m)) {
		os << "pl";
		for (std::size_t i = 0; i < p->xs().size(); i++)
			os << " " << p->xs()[i] << " " << p->ys()[i];
	} else {
		const auto &q = std::get<Parametric>(m);
		os << "param " << q.name;
		for (const auto &r : q.params)
			os << " " << r;
	}
	return os.str();
}

} // namespace hyperfrac
