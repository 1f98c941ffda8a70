/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/ifs.hpp"

#include <fstream>
#include <sstream>

namespace hyperfrac {

IfsSystem::IfsSystem(std::vector<IntervalMap> maps, Strictness strictness)
: maps_(std::move(maps)), strictness_(strictness), lipschitz_(0)
{
	if (maps_.empty())
		throw std::invalid_argument("IFS needs at least one map");
	for (std::size_t i = 0; i < maps_.size(); i++) {
		const auto &m = maps_[i];
		std::string where = "map " + std::to_string(i + 1) + " (" + format_map(m) + ")";
		Interval im = image(m, Interval(0, 1));
		if (im.lo < 0 || im.hi > 1)
			throw std::invalid_argument(where + " does not map [0,1] into itself");
		auto L = lipschitz_bound(m);
		lipschitz_ = L ? max(lipschitz_, *L) : max(lipschitz_, Rational(1));
		if (strictness_ == Strictness::strict) {
			if (!L || *L >= 1)
				throw std::invalid_argument(where + " is not a certified strict contraction");
		} else if (weak_contraction_check(m).verdict != WeakCheck::certified_weak) {
			throw std::invalid_argument(where + " is not a certified weak contraction");
		}
	}
}

CompactCover hutchinson_apply(const std::vector<IntervalMap> &maps, const CompactCover &c)
{
	std::vector<Interval> out;
	out.reserve(maps.size() * c.size());
	Rational L = 0;
	for (const auto &m : maps) {
		for (const auto &iv : c.intervals())
			out.push_back(image(m, iv));
		auto l = lipschitz_bound(m);
		L = max(L, l ? *l : Rational(1));
	}
	return CompactCover(std::move(out), c.resolution() * L);
}

CompactCover hutchinson_apply(const IfsSystem &sys, const CompactCover &c)
{
	return hutchinson_apply(sys.maps(), c);
}

Rational banach_bound(const Rational &L, const Rational &d1, std::uint64_t n)
{
	return pow(L, n) / (Rational(1) - L) * d1;
}

static bool same_points(const CompactCover &a, const CompactCover &b)
{
	if (a.size() != b.size())
		return false;
	for (std::size_t i = 0; i < a.size(); i++)
		if (!(a.intervals()[i] == b.intervals()[i]))
			return false;
	return true;
}

AttractorResult attractor_solve(const IfsSystem &sys, const Rational &tol, std::uint64_t cap)
{
	if (tol.sign() <= 0)
		throw std::invalid_argument("tolerance must be positive");
	CompactCover a = CompactCover::unit();
	bool strict = sys.strictness() == Strictness::strict;
	const Rational &L = sys.lipschitz();
	std::optional<Rational> d1;

	for (std::uint64_t n = 1;; n++) {
		if (n > cap)
			throw CapExceeded("iteration cap of " + std::to_string(cap) +
			                  " Hutchinson steps exceeded", a, n - 1);
		CompactCover next = hutchinson_apply(sys, a);
		if (next.size() > kMaxIterateIntervals)
			throw CapExceeded("iterate exceeds " + std::to_string(kMaxIterateIntervals) +
			                  " intervals", a, n - 1);
		if (same_points(a, next))
			return {next.with_resolution(0), 0, n, false};
		if (strict) {
			if (!d1)
				d1 = hausdorff_distance(a, next);
			Rational bound = banach_bound(L, *d1, n);
			if (bound <= tol)
				return {next.with_resolution(bound), bound, n, false};
		} else {
			Rational step = hausdorff_distance(a, next);
			if (step <= tol)
				return {next.with_resolution(step), step, n, true};
		}
		a = std::move(next);
	}
}

static std::vector<Rational> parse_rationals(std::istringstream &ls, std::size_t lineno)
{
	std::vector<Rational> v;
	std::string tok;
	while (ls >> tok) {
		try {
			v.push_back(Rational::parse(tok));
		} catch (const std::invalid_argument &e) {
			throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
		}
	}
	return v;
}

IfsSystem parse_ifs(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	std::size_t lineno = 0;
	std::optional<Strictness> strictness;
	std::vector<IntervalMap> maps;

	while (std::getline(in, line)) {
		lineno++;
		std::istringstream ls(line);
		std::string kw;
		if (!(ls >> kw) || kw[0] == '#')
			continue;
		if (!strictness) {
			std::string ver, st;
			ls >> ver >> st;
			if (kw != "ifs" || ver != "v1")
				throw ParseError("bad IFS header: '" + line + "'");
			if (st == "strictness=strict")
				strictness = Strictness::strict;
			else if (st == "strictness=weak")
				strictness = Strictness::weak;
			else
				throw ParseError("IFS header needs strictness=<strict|weak>");
			continue;
		}
		auto where = "line " + std::to_string(lineno);
		if (kw == "affine") {
			auto v = parse_rationals(ls, lineno);
			if (v.size() != 2)
				throw ParseError(where + ": affine takes <slope> <offset>");
			maps.emplace_back(Affine{v[0], v[1]});
		} else if (kw == "pl") {
			auto v = parse_rationals(ls, lineno);
			if (v.size() < 2 || v.size() % 2)
				throw ParseError(where + ": pl takes pairs <x> <y>");
			std::vector<Rational> xs, ys;
			for (std::size_t i = 0; i < v.size(); i += 2) {
				xs.push_back(v[i]);
				ys.push_back(v[i + 1]);
			}
			try {
				maps.emplace_back(PiecewiseAffine(std::move(xs), std::move(ys)));
			} catch (const std::invalid_argument &e) {
				throw ParseError(where + ": " + e.what());
			}
		} else if (kw == "param") {
			std::string name;
			if (!(ls >> name))
				throw ParseError(where + ": param needs a family name");
			auto v = parse_rationals(ls, lineno);
			if (!parametric_family_known(name, v.size()))
				throw ParseError(where + ": unknown parametric family '" + name +
				                 "' with " + std::to_string(v.size()) + " parameters");
			maps.emplace_back(Parametric{name, std::move(v)});
		} else {
			throw ParseError(where + ": unknown map kind '" + kw + "'");
		}
	}
	if (!strictness)
		throw ParseError("missing IFS header");
	try {
		return IfsSystem(std::move(maps), *strictness);
	} catch (const std::invalid_argument &e) {
		throw ParseError(e.what());
	}
}

IfsSystem read_ifs_file(const std::string &path)
{
	std::ifstream f(path);
	if (!f)
		throw ParseError("cannot open '" + path + "'");
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_ifs(ss.str());
}

std::string format_ifs(const IfsSystem &sys)
{
	std::ostringstream os;
	os << "ifs v1 strictness="
	   << (sys.strictness() == Strictness::strict ? "strict" : "weak") << "\n";
	for (const auto &m : sys.maps())
		os << format_map(m) << "\n";
	return os.str();
}

} // namespace hyperfrac
