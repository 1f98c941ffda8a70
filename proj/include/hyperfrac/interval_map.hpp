/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

/* y = slope * x + offset */
struct Affine {
	Rational slope, offset;

	Rational operator()(const Rational &x) const { return slope * x + offset; }
};

/* Continuous piecewise-affine map through (xs[i], ys[i]); xs strictly
 * increasing. Constant outside [xs.front(), xs.back()]. */
class PiecewiseAffine {
public:
	PiecewiseAffine(std::vector<Rational> xs, std::vector<Rational> ys);

	Rational operator()(const Rational &x) const;

	const std::vector<Rational> &xs() const { return xs_; }
	const std::vector<Rational> &ys() const { return ys_; }

	/* Largest |slope| over all segments (0 for a single knot). */
	Rational max_abs_slope() const;
	bool nondecreasing() const;

	/* Image of [lo, hi]: extremes over the endpoints and interior knots. */
	Interval image(const Interval &iv) const;

private:
	std::vector<Rational> xs_, ys_;
};

/* Named parametric families of increasing rational maps. Registered
 * families:
 *
 *   weak_left  c b : x -> b + c*x/(c+x)             derivative c^2/(c+x)^2
 *   weak_right c b : x -> b - c*(1-x)/(c+1-x)       derivative c^2/(c+1-x)^2
 *
 * For c > 0 both have Lipschitz constant exactly 1 on [0,1] and every chord
 * slope c^2/((c+x)(c+y)) is < 1, so they are weak but not strict
 * contractions. */
struct Parametric {
	std::string name;
	std::vector<Rational> params;

	Rational operator()(const Rational &x) const;
};

bool parametric_family_known(const std::string &name, std::size_t nparams);

using IntervalMap = std::variant<Affine, PiecewiseAffine, Parametric>;

Rational evaluate(const IntervalMap &m, const Rational &x);

/* Exact image of a closed interval. All registered maps are continuous and
 * rational, so this is exact. */
Interval image(const IntervalMap &m, const Interval &iv);

/* Certified Lipschitz constant, or nullopt when no certificate exists. */
std::optional<Rational> lipschitz_bound(const IntervalMap &m);

struct WeakCheck {
	enum Verdict { certified_weak, certified_not_weak, inconclusive };
	Verdict verdict;
	/* violating pair for certified_not_weak */
	std::optional<std::pair<Rational, Rational>> witness;
	std::string reason;
};

WeakCheck weak_contraction_check(const IntervalMap &m);

std::string format_map(const IntervalMap &m);

} // namespace hyperfrac
