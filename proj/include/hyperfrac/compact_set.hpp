/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfrac/rational.hpp"

namespace hyperfrac {

struct ParseError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/* Closed interval [lo, hi]; a point is [p, p]. */
struct Interval {
	Rational lo, hi;

	Interval() = default;
	Interval(Rational lo, Rational hi);

	static Interval point(const Rational &p) { return {p, p}; }

	Rational length() const { return hi - lo; }
	Rational mid() const { return (lo + hi) / Rational(2); }
	bool contains(const Rational &x) const { return lo <= x && x <= hi; }
	bool contains(const Interval &o) const { return lo <= o.lo && o.hi <= hi; }

	friend bool operator==(const Interval &, const Interval &) = default;
};

/* A nonempty compact subset of the line, stored as a finite union of
 * pairwise disjoint closed rational intervals sorted by left endpoint.
 *
 * resolution bounds the Hausdorff distance between this finite union and
 * the (possibly infinite-depth) set it stands for; 0 means the union is
 * the set itself. Values are immutable once built. */
class CompactCover {
public:
	/* Sorts and merges overlapping or touching intervals. Throws on an
	 * empty list. */
	CompactCover(std::vector<Interval> intervals, Rational resolution = 0);

	static CompactCover point(const Rational &p);
	static CompactCover unit() { return CompactCover({{0, 1}}); }

	std::span<const Interval> intervals() const { return intervals_; }
	std::size_t size() const { return intervals_.size(); }
	const Rational &resolution() const { return resolution_; }

	const Rational &min() const { return intervals_.front().lo; }
	const Rational &max() const { return intervals_.back().hi; }
	Rational diameter() const { return max() - min(); }
	Rational measure() const;

	bool contains(const Rational &x) const;
	/* Every interval of other lies inside one interval of this cover. */
	bool contains(const CompactCover &other) const;

	/* Distance from x to the nearest point of the cover. */
	Rational distance_to(const Rational &x) const;

	CompactCover with_resolution(Rational r) const;

	/* Same point set and same resolution. */
	friend bool operator==(const CompactCover &, const CompactCover &) = default;

private:
	struct Normalized {};
	CompactCover(Normalized, std::vector<Interval> iv, Rational res)
	: intervals_(std::move(iv)), resolution_(std::move(res)) {}

	std::vector<Interval> intervals_;
	Rational resolution_;

	friend CompactCover unite(const CompactCover &, const CompactCover &);
	friend CompactCover affine_image(const CompactCover &, const Rational &,
	                                 const Rational &);
};

/* Exact Hausdorff distance between the two finite interval unions
 * (resolutions are ignored). */
Rational hausdorff_distance(const CompactCover &a, const CompactCover &b);

/* Directed part sup_{x in a} dist(x, b). */
Rational directed_distance(const CompactCover &a, const CompactCover &b);

/* Image under y -> scale*y + shift; scale must be nonzero. */
CompactCover affine_image(const CompactCover &c, const Rational &scale,
                          const Rational &shift);

CompactCover unite(const CompactCover &a, const CompactCover &b);
CompactCover unite(std::span<const CompactCover> parts);

/* Translate so that (min + max) / 2 == target_mid. */
CompactCover midpoint_recenter(const CompactCover &c, const Rational &target_mid);

/* Set file: "compactcover v1 resolution=<p>/<q> [embed_dim=<d>]" followed
 * by one "<p>/<q> <p>/<q>" line per interval. */
struct CoverFile {
	CompactCover cover;
	std::optional<unsigned> embed_dim;
};

std::string format_cover(const CompactCover &c,
                         std::optional<unsigned> embed_dim = std::nullopt);
CoverFile parse_cover(std::string_view text);

CoverFile read_cover_file(const std::string &path);
void write_cover_file(const std::string &path, const CompactCover &c,
                      std::optional<unsigned> embed_dim = std::nullopt);

std::ostream &operator<<(std::ostream &os, const CompactCover &c);

} // namespace hyperfrac
