/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/weighted_cantor.hpp"

#include <numeric>

namespace hyperfrac {

constexpr unsigned kMaxFreeBits = 24;

WeightedCantor::WeightedCantor(unsigned lead_zeros, Enclosure factor, BitStream tau)
: WeightedCantor(lead_zeros, std::move(factor), std::move(tau), 0, true)
{
}

WeightedCantor WeightedCantor::truncated(unsigned lead_zeros, Enclosure factor,
                                         BitStream tau, unsigned known_rows)
{
	if (known_rows == 0)
		throw std::invalid_argument("truncated weights need at least one known row");
	return WeightedCantor(lead_zeros, std::move(factor), std::move(tau), known_rows, true);
}

WeightedCantor::WeightedCantor(unsigned p, Enclosure f, BitStream tau, unsigned known_rows, bool)
: p_(p), f_(std::move(f)), tau_(std::move(tau)), known_rows_(known_rows)
{
	if (f_.lo().sign() <= 0 || f_.hi() > 1)
		throw std::invalid_argument("distortion factor must lie in (0,1]");
	build();
}

Enclosure WeightedCantor::weight(std::uint64_t l) const
{
	if (known_rows_ && l > known_rows_)
		return Enclosure(f_.lo(), Rational(1));
	return tau_.bit(l) ? Enclosure(Rational(1)) : f_;
}

void WeightedCantor::build()
{
	const Enclosure half(Rational(1, 2));
	if (known_rows_) {
		std::uint64_t R = known_rows_;
		W_.assign(R + 2, Enclosure());
		W_[R + 1] = Enclosure(f_.lo(), Rational(1));
		for (std::uint64_t k = R; k >= 1; k--)
			W_[k] = (weight(k) + W_[k + 1]) * half;
		return;
	}
	H_ = tau_.head().size();
	P_ = tau_.period().size();
	W_.assign(H_ + P_ + 1, Enclosure());
	Enclosure first(Rational(0));
	for (std::uint64_t i = 0; i < P_; i++)
		first += weight(H_ + 1 + i) * Enclosure(pow2_inv(unsigned(i + 1)));
	first *= Enclosure(Rational(1) / (Rational(1) - pow2_inv(unsigned(P_))));
	W_[H_ + 1] = first;
	for (std::uint64_t k = H_ + P_; k >= H_ + 2; k--) {
		const Enclosure &next = k + 1 == H_ + P_ + 1 ? W_[H_ + 1] : W_[k + 1];
		W_[k] = (weight(k) + next) * half;
	}
	for (std::uint64_t k = H_; k >= 1; k--)
		W_[k] = (weight(k) + W_[k + 1]) * half;
}

Enclosure WeightedCantor::weight_sum(std::uint64_t k) const
{
	if (k == 0)
		throw std::out_of_range("weight index starts at 1");
	if (known_rows_)
		return W_[std::min<std::uint64_t>(k, known_rows_ + 1)];
	if (k <= H_ + P_)
		return W_[k];
	return W_[H_ + 1 + (k - H_ - 1) % P_];
}

Enclosure WeightedCantor::coeff(std::uint64_t k) const
{
	return weight_sum(k) * Enclosure(Rational(9) * pow10_inv(unsigned(k)));
}

Enclosure WeightedCantor::tail(std::uint64_t d) const
{
	std::uint64_t base = known_rows_ ? known_rows_ : H_;
	if (d < base) {
		Enclosure s(Rational(0));
		for (std::uint64_t k = d + 1; k <= base; k++)
			s += coeff(k);
		return s + tail(base);
	}
	if (known_rows_) {
		Rational t = pow10_inv(unsigned(d));
		return Enclosure(f_.lo() * t, t);
	}
	Enclosure s(Rational(0));
	for (std::uint64_t i = 1; i <= P_; i++)
		s += coeff(d + i);
	return s * Enclosure(Rational(1) / (Rational(1) - pow10_inv(unsigned(P_))));
}

Enclosure WeightedCantor::value(const BitStream &x) const
{
	if (known_rows_)
		throw std::logic_error("point values need exact weights");
	for (unsigned k = 1; k <= p_; k++)
		if (x.bit(k))
			throw std::invalid_argument("address has a 1 among the leading zeros");
	std::uint64_t H2 = std::max<std::uint64_t>(H_, x.head().size());
	std::uint64_t P2 = std::lcm<std::uint64_t>(P_, x.period().size());
	Enclosure s(Rational(0)), per(Rational(0));
	for (std::uint64_t k = 1; k <= H2; k++)
		if (x.bit(k))
			s += coeff(k);
	for (std::uint64_t i = 1; i <= P2; i++)
		if (x.bit(H2 + i))
			per += coeff(H2 + i);
	return s + per * Enclosure(Rational(1) / (Rational(1) - pow10_inv(unsigned(P2))));
}

Enclosure WeightedCantor::prefix_value(const BitWord &s) const
{
	Enclosure v(Rational(0));
	for (std::size_t k = 1; k <= s.size(); k++)
		if (s[k - 1])
			v += coeff(k);
	return v;
}

AddressedCover WeightedCantor::addressed_cover(unsigned depth) const
{
	if (depth < p_)
		throw std::invalid_argument("cover depth " + std::to_string(depth) +
		                            " is below the " + std::to_string(p_) + " leading zeros");
	if (depth - p_ > kMaxFreeBits)
		throw std::invalid_argument("cover depth too large to materialize");
	std::vector<Enclosure> sums{Enclosure(Rational(0))};
	for (unsigned k = p_ + 1; k <= depth; k++) {
		Enclosure c = coeff(k);
		std::vector<Enclosure> next;
		next.reserve(sums.size() * 2);
		for (const auto &s : sums) {
			next.push_back(s);
			next.push_back(s + c);
		}
		sums = std::move(next);
	}
	Rational t = tail(depth).hi();
	AddressedCover out;
	out.depth = depth;
	out.resolution = 0;
	out.pieces.reserve(sums.size());
	for (std::size_t v = 0; v < sums.size(); v++) {
		BitWord a(p_, 0);
		BitWord rest = bitword_from_index(v, depth - p_);
		a.insert(a.end(), rest.begin(), rest.end());
		Interval iv(sums[v].lo(), sums[v].hi() + t);
		out.resolution = max(out.resolution, iv.length());
		out.pieces.push_back({std::move(a), std::move(iv)});
	}
	return out;
}

CompactCover WeightedCantor::centered_cover(unsigned depth, const Enclosure &mid) const
{
	if (depth < p_)
		throw std::invalid_argument("cover depth " + std::to_string(depth) +
		                            " is below the " + std::to_string(p_) + " leading zeros");
	if (depth - p_ > kMaxFreeBits)
		throw std::invalid_argument("cover depth too large to materialize");
	const Enclosure half(Rational(1, 2));
	std::vector<Enclosure> sums{mid};
	for (unsigned k = p_ + 1; k <= depth; k++) {
		Enclosure c = coeff(k) * half;
		std::vector<Enclosure> next;
		next.reserve(sums.size() * 2);
		for (const auto &s : sums) {
			next.push_back(s - c);
			next.push_back(s + c);
		}
		sums = std::move(next);
	}
	Rational t = tail(depth).hi() / Rational(2);
	std::vector<Interval> iv;
	iv.reserve(sums.size());
	Rational res = 0;
	for (const auto &s : sums) {
		iv.emplace_back(s.lo() - t, s.hi() + t);
		res = max(res, iv.back().length());
	}
	return CompactCover(std::move(iv), res);
}

DistortedPoint g_image_point(const DistortionParams &params, const BitStream &x, std::uint64_t N)
{
	if (params.delta.sign() <= 0 || params.delta >= 1)
		throw std::invalid_argument("delta must lie in (0,1)");
	if (params.j == 0)
		throw std::invalid_argument("power index j starts at 1");
	Rational f = pow(params.delta, params.j - 1);
	WeightedCantor wc(0, Enclosure(f), params.alpha);
	DistortedPoint out;
	out.prefix = 0;
	BitWord pre;
	for (std::uint64_t l = 1; l <= N; l++) {
		pre.push_back(x.bit(l));
		Rational d = d_value(pre);
		out.prefix += params.alpha.bit(l) ? d : d * f;
	}
	out.exact = wc.value(x);
	return out;
}

} // namespace hyperfrac
