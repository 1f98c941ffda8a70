/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <vector>

#include "hyperfrac/cantor_addressing.hpp"

namespace hyperfrac {

/* The set { sum_l d_{x|l} w_l : x_k = 0 for k <= p } where w_l = 1 when
 * tau_l = 1 and w_l = f otherwise (f = delta^(j-1)). Swapping the sums,
 * a point is V(x) = sum_k x_k c_k with
 *
 *   c_k = 9/10^k W_k,   W_k = sum_{l >= k} 2^-(l-k+1) w_l = w_k/2 + W_{k+1}/2.
 *
 * The set has min 0 and max T_p, where T_d = sum_{k > d} c_k, and a depth-d
 * cylinder s spans [sum_{k<=d} s_k c_k, + T_d].
 *
 * In exact mode every row of tau is read and periodic tails are summed in
 * closed form. In truncated mode only rows <= known_rows are read; the
 * remaining weights are only known to lie in [f, 1], so covers built from
 * two tau agreeing on those rows coincide. */
class WeightedCantor {
public:
	WeightedCantor(unsigned lead_zeros, Enclosure factor, BitStream tau);

	static WeightedCantor truncated(unsigned lead_zeros, Enclosure factor,
	                                BitStream tau, unsigned known_rows);

	unsigned lead_zeros() const { return p_; }
	bool exact_mode() const { return !known_rows_; }
	const Enclosure &factor() const { return f_; }
	const BitStream &tau() const { return tau_; }

	Enclosure weight(std::uint64_t l) const;
	Enclosure weight_sum(std::uint64_t k) const;  // W_k
	Enclosure coeff(std::uint64_t k) const;       // c_k
	Enclosure tail(std::uint64_t d) const;        // T_d
	Enclosure diameter() const { return tail(p_); }

	/* V(x) for x with x_k = 0 for k <= p; exact mode only. */
	Enclosure value(const BitStream &x) const;
	/* sum over k <= lh(s) of s_k c_k */
	Enclosure prefix_value(const BitWord &s) const;

	/* Cylinder intervals [lo, hi + T_d] at the given depth, addresses in
	 * lex order; resolution is the largest width. depth >= p. */
	AddressedCover addressed_cover(unsigned depth) const;
	CompactCover cover(unsigned depth) const { return addressed_cover(depth).cover(); }

	/* Cover of the set translated so that its midpoint is mid. */
	CompactCover centered_cover(unsigned depth, const Enclosure &mid) const;

private:
	WeightedCantor(unsigned p, Enclosure f, BitStream tau, unsigned known_rows, bool);
	void build();

	unsigned p_;
	Enclosure f_;
	BitStream tau_;
	unsigned known_rows_ = 0;  // 0 in exact mode
	/* exact: W_1..W_{H+P}; truncated: W_1..W_R, then [f, 1] */
	std::vector<Enclosure> W_;
	std::uint64_t H_ = 0, P_ = 1;
};

/* g^delta_alpha at the point sum_l d_{x|l} with base delta^(j-1). */
struct DistortionParams {
	BitStream alpha;
	Rational delta;
	std::uint64_t j;
};

struct DistortedPoint {
	Rational prefix;  // sum over l <= N of d_{x|l} w_l
	Enclosure exact;  // the full series
};

DistortedPoint g_image_point(const DistortionParams &params, const BitStream &x, std::uint64_t N);

} // namespace hyperfrac
