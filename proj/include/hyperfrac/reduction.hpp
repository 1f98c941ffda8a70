/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfrac/grid_set.hpp"
#include "hyperfrac/ifs.hpp"
#include "hyperfrac/sections.hpp"
#include "hyperfrac/weighted_cantor.hpp"

namespace hyperfrac {

/* Thrown when a construction would materialize too many intervals. */
struct ResourceCap : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/* Row bits of column n of A. */
BitStream tau(const GridSet &a, std::uint64_t n);

/* The weighted Cantor set behind C_n^j(A), sitting at [0, diameter]. In
 * truncated mode only rows <= known_rows of the column are read. */
WeightedCantor member_shape(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                            unsigned known_rows = 0);

/* Depth-limited cover of C_n^j(A) with its midpoint moved to the midpoint
 * of the undistorted member. With exact weights every row of tau_n(A) is
 * used; otherwise rows past depth only contribute the range [delta^(j-1), 1].
 * depth >= i_n. */
CompactCover distorted_member(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                              unsigned depth, bool exact_weights = false);

/* C_n^j: the Cantor piece of depth >= i_n scaled by delta^(j-1) and placed
 * at its offset. Needs an exactly known offset. */
CompactCover contracted_member(const SectionPlan &plan, std::uint64_t j, unsigned depth);
/* E_n^j: the same piece at full size around the midpoint of C_n^j. */
CompactCover expanded_member(const SectionPlan &plan, std::uint64_t j, unsigned depth);

constexpr std::size_t kDefaultPhiCap = std::size_t(1) << 18;
constexpr unsigned kPhiGridBits = 64;

struct PhiResult {
	CompactCover cover;
	std::vector<SectionPlan> plans;  // levels + 1 when available
	Enclosure x;                     // limit point sum_n a_n
	Rational scale;                  // dyadic stand-in for 1/x, scale * x <= 1
	Rational scale_error;            // sup over the set of |y/x - scale * y|
	Interval tail;                   // image of every deeper section and x
	std::vector<Interval> sections;  // scaled hull of each built section
};

/* psi of C_0, sections 1..levels and a tail interval, at the given depth.
 * Members of sections whose leading zeros reach the depth are single
 * hulls. Endpoints are rounded outwards to the 2^-64 grid; the cover's
 * resolution bounds its Hausdorff distance to the ideal image. */
PhiResult phi(const GridSet &a, unsigned levels, unsigned depth,
              std::size_t max_intervals = kDefaultPhiCap);

/* The pair f_1, f_2 mapping the point of address x to those of x^0, x^1
 * (bit inserted at row i_n), piecewise affine through the cylinder ends at
 * depth i_n - 1 + extra_depth and constant outside the set. The set is
 * C_n^j(A) placed at [0, diameter]. */
struct WitnessIfs {
	WeightedCantor shape;
	unsigned depth;  // cylinder depth of the knots
	std::vector<IntervalMap> maps;
};

WitnessIfs witness_ifs_for_distorted_cantor(const SectionPlan &plan, std::uint64_t j,
                                            const BitStream &tau, unsigned extra_depth);

IfsSystem witness_system(const WitnessIfs &w);

struct WitnessCheck {
	bool pass;
	bool self_similar;     // S(cover_d) = cover_(d+1) for every knot-resolved depth
	bool endpoints;        // knots land exactly on the next depth's endpoints
	bool chords;           // |f(v) - f(w)| <= |v - w| / 5 over all knot pairs
	Rational max_ratio;
	std::uint64_t chords_checked;
	std::string detail;
};

WitnessCheck check_witness(const WitnessIfs &w);

/* weak_step_inequality with tau = tau_n(A) and the plan's delta. */
WeakStepReport weak_step_inequality(const GridSet &a, const SectionPlan &plan, std::uint64_t j,
                                    const BitWord &x, const BitWord &y, unsigned m);

} // namespace hyperfrac
