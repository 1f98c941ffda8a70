/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfrac/interval_map.hpp"

namespace hyperfrac {

enum class Strictness { strict, weak };

/* A validated system of self-maps of [0,1]. Strict systems carry a
 * certified common Lipschitz constant below 1; weak systems consist of
 * certified weak contractions. */
class IfsSystem {
public:
	IfsSystem(std::vector<IntervalMap> maps, Strictness strictness);

	const std::vector<IntervalMap> &maps() const { return maps_; }
	Strictness strictness() const { return strictness_; }

	/* max Lipschitz bound over the maps; 1 if some map lacks one */
	const Rational &lipschitz() const { return lipschitz_; }

private:
	std::vector<IntervalMap> maps_;
	Strictness strictness_;
	Rational lipschitz_;
};

/* S(c) = union of the images; resolution scales by the Lipschitz bound. */
CompactCover hutchinson_apply(const IfsSystem &sys, const CompactCover &c);

/* Same as above for a bare map list, without IFS validation. */
CompactCover hutchinson_apply(const std::vector<IntervalMap> &maps, const CompactCover &c);

struct AttractorResult {
	CompactCover cover;
	Rational error_bound;
	std::uint64_t iterations;
	/* weak systems: error_bound is only the last Cauchy step */
	bool heuristic;
};

struct CapExceeded : std::runtime_error {
	CapExceeded(const std::string &what, CompactCover last, std::uint64_t iterations)
	: std::runtime_error(what), last(std::move(last)), iterations(iterations) {}

	CompactCover last;
	std::uint64_t iterations;
};

constexpr std::uint64_t kDefaultIterationCap = 1'000'000;
constexpr std::size_t kMaxIterateIntervals = std::size_t(1) << 22;

/* L^n / (1 - L) * d1 */
Rational banach_bound(const Rational &L, const Rational &d1, std::uint64_t n);

/* Iterates A_0 = [0,1], A_{n+1} = S(A_n). Strict systems stop as soon as the
 * a-priori Banach bound is <= tol (or S(A_n) == A_n); weak systems stop when
 * d_H(A_n, A_{n+1}) <= tol. Throws CapExceeded past cap iterations or when
 * an iterate grows beyond kMaxIterateIntervals. */
AttractorResult attractor_solve(const IfsSystem &sys, const Rational &tol,
                                std::uint64_t cap = kDefaultIterationCap);

/* IFS file: header "ifs v1 strictness=<strict|weak>", then one map per
 * line: "affine <slope> <offset>", "pl <x0> <y0> <x1> <y1> ...",
 * "param <name> <rationals...>". Blank lines and '#' comments are skipped. */
IfsSystem parse_ifs(std::string_view text);
IfsSystem read_ifs_file(const std::string &path);
std::string format_ifs(const IfsSystem &sys);

} // namespace hyperfrac
