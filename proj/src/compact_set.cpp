/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/compact_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hyperfrac {

Interval::Interval(Rational l, Rational h)
: lo(std::move(l)), hi(std::move(h))
{
	if (hi < lo)
		throw std::invalid_argument("interval with hi < lo");
}

static std::vector<Interval> normalize(std::vector<Interval> iv)
{
	std::sort(iv.begin(), iv.end(),
	          [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
	std::vector<Interval> out;
	out.reserve(iv.size());
	for (auto &i : iv) {
		if (!out.empty() && i.lo <= out.back().hi) {
			if (out.back().hi < i.hi)
				out.back().hi = std::move(i.hi);
		} else {
			out.push_back(std::move(i));
		}
	}
	return out;
}

CompactCover::CompactCover(std::vector<Interval> intervals, Rational resolution)
: intervals_(normalize(std::move(intervals))), resolution_(std::move(resolution))
{
	if (intervals_.empty())
		throw std::invalid_argument("empty compact cover");
	if (resolution_ < 0)
		throw std::invalid_argument("negative cover resolution");
}

CompactCover CompactCover::point(const Rational &p)
{
	return CompactCover({Interval::point(p)});
}

Rational CompactCover::measure() const
{
	Rational m = 0;
	for (const auto &i : intervals_)
		m += i.length();
	return m;
}

/* Index of the last interval with lo <= x, or npos. */
static std::size_t last_starting_before(std::span<const Interval> iv,
                                        const Rational &x)
{
	auto it = std::upper_bound(iv.begin(), iv.end(), x,
	          [](const Rational &v, const Interval &i) { return v < i.lo; });
	if (it == iv.begin())
		return std::size_t(-1);
	return std::size_t(it - iv.begin()) - 1;
}

bool CompactCover::contains(const Rational &x) const
{
	std::size_t k = last_starting_before(intervals_, x);
	return k != std::size_t(-1) && x <= intervals_[k].hi;
}

bool CompactCover::contains(const CompactCover &other) const
{
	for (const auto &i : other.intervals_) {
		std::size_t k = last_starting_before(intervals_, i.lo);
		if (k == std::size_t(-1) || !intervals_[k].contains(i))
			return false;
	}
	return true;
}

Rational CompactCover::distance_to(const Rational &x) const
{
	std::size_t k = last_starting_before(intervals_, x);
	if (k == std::size_t(-1))
		return intervals_.front().lo - x;
	if (x <= intervals_[k].hi)
		return 0;
	Rational d = x - intervals_[k].hi;
	if (k + 1 < intervals_.size())
		d = hyperfrac::min(d, intervals_[k + 1].lo - x);
	return d;
}

CompactCover CompactCover::with_resolution(Rational r) const
{
	CompactCover c = *this;
	if (r < 0)
		throw std::invalid_argument("negative cover resolution");
	c.resolution_ = std::move(r);
	return c;
}

/* dist(., b) restricted to one interval of a is piecewise linear; its
 * maximum sits at an endpoint or at the midpoint of a gap of b. */
Rational directed_distance(const CompactCover &a, const CompactCover &b)
{
	auto biv = b.intervals();
	Rational best = 0;
	for (const auto &i : a.intervals()) {
		best = max(best, b.distance_to(i.lo));
		best = max(best, b.distance_to(i.hi));
		std::size_t k = last_starting_before(biv, i.lo);
		std::size_t start = k == std::size_t(-1) ? 0 : k;
		for (std::size_t g = start; g + 1 < biv.size(); g++) {
			if (biv[g].hi >= i.hi)
				break;
			Rational m = (biv[g].hi + biv[g + 1].lo) / Rational(2);
			if (i.lo < m && m < i.hi)
				best = max(best, (biv[g + 1].lo - biv[g].hi) / Rational(2));
		}
	}
	return best;
}

Rational hausdorff_distance(const CompactCover &a, const CompactCover &b)
{
	return max(directed_distance(a, b), directed_distance(b, a));
}

CompactCover affine_image(const CompactCover &c, const Rational &scale,
                          const Rational &shift)
{
	if (scale.is_zero())
		throw std::invalid_argument("affine_image with zero scale; use CompactCover::point");
	std::vector<Interval> out;
	out.reserve(c.size());
	for (const auto &i : c.intervals_) {
		Rational a = scale * i.lo + shift, b = scale * i.hi + shift;
		if (scale.sign() > 0)
			out.emplace_back(std::move(a), std::move(b));
		else
			out.emplace_back(std::move(b), std::move(a));
	}
	if (scale.sign() < 0)
		std::reverse(out.begin(), out.end());
	return CompactCover(CompactCover::Normalized{}, std::move(out),
	                    c.resolution_ * abs(scale));
}

CompactCover unite(const CompactCover &a, const CompactCover &b)
{
	std::vector<Interval> merged;
	merged.reserve(a.size() + b.size());
	std::merge(a.intervals_.begin(), a.intervals_.end(),
	           b.intervals_.begin(), b.intervals_.end(),
	           std::back_inserter(merged),
	           [](const Interval &x, const Interval &y) { return x.lo < y.lo; });
	return CompactCover(std::move(merged), max(a.resolution_, b.resolution_));
}

CompactCover unite(std::span<const CompactCover> parts)
{
	if (parts.empty())
		throw std::invalid_argument("union of no covers");
	std::vector<Interval> all;
	Rational res = 0;
	for (const auto &p : parts) {
		all.insert(all.end(), p.intervals().begin(), p.intervals().end());
		res = max(res, p.resolution());
	}
	return CompactCover(std::move(all), res);
}

CompactCover midpoint_recenter(const CompactCover &c, const Rational &target_mid)
{
	Rational mid = (c.min() + c.max()) / Rational(2);
	return affine_image(c, 1, target_mid - mid);
}

std::string format_cover(const CompactCover &c, std::optional<unsigned> embed_dim)
{
	std::ostringstream os;
	os << "compactcover v1 resolution=" << c.resolution().str();
	if (embed_dim)
		os << " embed_dim=" << *embed_dim;
	os << "\n";
	for (const auto &i : c.intervals())
		os << i.lo.str() << " " << i.hi.str() << "\n";
	return os.str();
}

CoverFile parse_cover(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	if (!std::getline(in, line))
		throw ParseError("empty set file");

	std::istringstream hdr(line);
	std::string magic, version, tok;
	hdr >> magic >> version;
	if (magic != "compactcover" || version != "v1")
		throw ParseError("bad set file header: '" + line + "'");
	std::optional<Rational> res;
	std::optional<unsigned> embed;
	try {
		while (hdr >> tok) {
			if (tok.rfind("resolution=", 0) == 0) {
				res = Rational::parse(tok.substr(11), true);
			} else if (tok.rfind("embed_dim=", 0) == 0) {
				std::string v = tok.substr(10);
				if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
					throw ParseError("bad embed_dim '" + v + "'");
				embed = unsigned(std::stoul(v));
				if (*embed == 0)
					throw ParseError("embed_dim must be positive");
			} else {
				throw ParseError("unknown header field '" + tok + "'");
			}
		}
	} catch (const std::invalid_argument &e) {
		throw ParseError(e.what());
	}
	if (!res)
		throw ParseError("set file header lacks resolution=");
	if (*res < 0)
		throw ParseError("negative resolution");

	std::vector<Interval> iv;
	std::size_t lineno = 1;
	while (std::getline(in, line)) {
		lineno++;
		if (line.empty())
			continue;
		std::istringstream ls(line);
		std::string a, b, extra;
		if (!(ls >> a >> b) || (ls >> extra))
			throw ParseError("line " + std::to_string(lineno) +
			                 ": expected two rationals");
		try {
			Rational lo = Rational::parse(a, true), hi = Rational::parse(b, true);
			if (hi < lo)
				throw ParseError("line " + std::to_string(lineno) + ": hi < lo");
			if (!iv.empty() && lo <= iv.back().hi)
				throw ParseError("line " + std::to_string(lineno) +
				                 ": intervals must be disjoint and increasing");
			iv.emplace_back(std::move(lo), std::move(hi));
		} catch (const std::invalid_argument &e) {
			throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
		}
	}
	if (iv.empty())
		throw ParseError("set file has no intervals");
	return {CompactCover(std::move(iv), *res), embed};
}

CoverFile read_cover_file(const std::string &path)
{
	std::ifstream f(path);
	if (!f)
		throw ParseError("cannot open '" + path + "'");
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_cover(ss.str());
}

void write_cover_file(const std::string &path, const CompactCover &c,
                      std::optional<unsigned> embed_dim)
{
	std::ofstream f(path);
	if (!f)
		throw std::runtime_error("cannot write '" + path + "'");
	f << format_cover(c, embed_dim);
}

std::ostream &operator<<(std::ostream &os, const CompactCover &c)
{
	os << "{";
	for (std::size_t k = 0; k < c.size(); k++)
		os << (k ? ", " : "") << "[" << c.intervals()[k].lo << ", "
		   << c.intervals()[k].hi << "]";
	return os << "}";
}

} // namespace hyperfrac
