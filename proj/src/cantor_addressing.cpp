/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/cantor_addressing.hpp"

#include <sstream>

namespace hyperfrac {

BitWord parse_bitword(std::string_view text)
{
	BitWord w;
	w.reserve(text.size());
	for (char ch : text) {
		if (ch != '0' && ch != '1')
			throw std::invalid_argument("bit word '" + std::string(text) +
			                            "' may only contain 0 and 1");
		w.push_back(std::uint8_t(ch - '0'));
	}
	return w;
}

std::string format_bitword(const BitWord &s)
{
	std::string out;
	out.reserve(s.size());
	for (auto b : s)
		out.push_back(char('0' + b));
	return out;
}

BitWord bitword_from_index(std::uint64_t v, unsigned n)
{
	BitWord w(n);
	for (unsigned k = 0; k < n; k++)
		w[n - 1 - k] = std::uint8_t((v >> k) & 1);
	return w;
}

BitStream::BitStream(BitWord head, BitWord period)
: head_(std::move(head)), period_(std::move(period))
{
	if (period_.empty())
		throw std::invalid_argument("bit stream period must be nonempty");
	for (auto b : head_)
		if (b > 1)
			throw std::invalid_argument("bit stream head holds a non-bit");
	for (auto b : period_)
		if (b > 1)
			throw std::invalid_argument("bit stream period holds a non-bit");
}

BitStream BitStream::parse(std::string_view text)
{
	auto colon = text.find(':');
	if (colon == std::string_view::npos)
		throw std::invalid_argument("bit stream '" + std::string(text) +
		                            "' needs the form <head>:<tail>");
	BitWord head = parse_bitword(text.substr(0, colon));
	std::string_view tail = text.substr(colon + 1);
	if (tail == "0const")
		return BitStream(std::move(head), {0});
	if (tail == "1const")
		return BitStream(std::move(head), {1});
	if (tail.size() > 8 && tail.substr(0, 7) == "period(" && tail.back() == ')') {
		BitWord p = parse_bitword(tail.substr(7, tail.size() - 8));
		return BitStream(std::move(head), std::move(p));
	}
	throw std::invalid_argument("unknown bit stream tail '" + std::string(tail) + "'");
}

std::string BitStream::str() const
{
	std::string out = format_bitword(head_) + ":";
	if (period_ == BitWord{0})
		return out + "0const";
	if (period_ == BitWord{1})
		return out + "1const";
	return out + "period(" + format_bitword(period_) + ")";
}

std::uint8_t BitStream::bit(std::uint64_t k) const
{
	if (k == 0)
		throw std::out_of_range("bit positions start at 1");
	if (k <= head_.size())
		return head_[k - 1];
	return period_[(k - head_.size() - 1) % period_.size()];
}

BitWord BitStream::prefix(std::size_t n) const
{
	BitWord w(n);
	for (std::size_t k = 1; k <= n; k++)
		w[k - 1] = bit(k);
	return w;
}

bool BitStream::eventually_zero() const
{
	for (auto b : period_)
		if (b)
			return false;
	return true;
}

bool BitStream::eventually_one() const
{
	for (auto b : period_)
		if (!b)
			return false;
	return true;
}

Rational e_term(const BitWord &s, std::uint64_t i)
{
	if (i == 0)
		throw std::out_of_range("e-term index starts at 1");
	if (s.empty() || s.back() == 0 || i < s.size())
		return 0;
	auto lh = unsigned(s.size());
	return Rational(9) * pow10_inv(lh) * pow2_inv(unsigned(i - lh + 1));
}

Rational d_value(const BitWord &s)
{
	Rational d = 0;
	for (std::size_t k = 1; k <= s.size(); k++)
		d += e_term(BitWord(s.begin(), s.begin() + std::ptrdiff_t(k)), s.size());
	return d;
}

Rational cantor_point(const BitStream &x)
{
	Rational head = 0;
	unsigned h = unsigned(x.head().size());
	for (unsigned k = 1; k <= h; k++)
		if (x.head()[k - 1])
			head += Rational(9) * pow10_inv(k);
	unsigned P = unsigned(x.period().size());
	Rational per = 0;
	for (unsigned i = 1; i <= P; i++)
		if (x.period()[i - 1])
			per += Rational(9) * pow10_inv(h + i);
	return head + per / (Rational(1) - pow10_inv(P));
}

AddressSum address_sum(const BitStream &x, std::uint64_t N)
{
	Rational partial = 0;
	BitWord w = x.prefix(N);
	BitWord pre;
	for (std::uint64_t n = 1; n <= N; n++) {
		pre.push_back(w[n - 1]);
		partial += d_value(pre);
	}
	return {partial, cantor_point(x)};
}

Rational address_series(const BitWord &word)
{
	std::size_t M = word.size();
	while (M > 0 && word[M - 1] == 0)
		M--;
	Rational sum = 0, last = 0;
	BitWord pre;
	for (std::size_t n = 1; n <= M; n++) {
		pre.push_back(word[n - 1]);
		last = d_value(pre);
		sum += last;
	}
	return sum + last;
}

CompactCover AddressedCover::cover() const
{
	std::vector<Interval> iv;
	iv.reserve(pieces.size());
	for (const auto &p : pieces)
		iv.push_back(p.iv);
	return CompactCover(std::move(iv), resolution);
}

AddressedCover addressed_cantor_cover(unsigned depth, unsigned lead_zeros)
{
	if (depth > kMaxCantorDepth)
		throw std::invalid_argument("cantor cover depth above " +
		                            std::to_string(kMaxCantorDepth));
	if (lead_zeros > depth)
		throw std::invalid_argument("cover depth below the number of leading zeros");
	AddressedCover out;
	out.depth = depth;
	out.resolution = pow10_inv(depth);
	unsigned free_bits = depth - lead_zeros;
	std::uint64_t count = std::uint64_t(1) << free_bits;
	out.pieces.reserve(count);
	Rational len = pow10_inv(depth);
	std::vector<Rational> digit(depth + 1);
	for (unsigned k = 1; k <= depth; k++)
		digit[k] = Rational(9) * pow10_inv(k);
	for (std::uint64_t v = 0; v < count; v++) {
		BitWord a(lead_zeros, 0);
		BitWord tail = bitword_from_index(v, free_bits);
		a.insert(a.end(), tail.begin(), tail.end());
		Rational left = 0;
		for (unsigned k = 1; k <= depth; k++)
			if (a[k - 1])
				left += digit[k];
		out.pieces.push_back({std::move(a), Interval(left, left + len)});
	}
	return out;
}

CompactCover cantor_cover(unsigned depth)
{
	if (depth > kMaxCantorDepth)
		throw std::invalid_argument("cantor cover depth above " +
		                            std::to_string(kMaxCantorDepth));
	std::vector<Rational> left{Rational(0)};
	for (unsigned k = 1; k <= depth; k++) {
		Rational digit = Rational(9) * pow10_inv(k);
		std::vector<Rational> next;
		next.reserve(left.size() * 2);
		for (const auto &l : left) {
			next.push_back(l);
			next.push_back(l + digit);
		}
		left = std::move(next);
	}
	Rational len = pow10_inv(depth);
	std::vector<Interval> iv;
	iv.reserve(left.size());
	for (auto &l : left) {
		Rational r = l + len;
		iv.emplace_back(std::move(l), std::move(r));
	}
	return CompactCover(std::move(iv), len);
}

std::array<std::optional<CompactCover>, 4> quadrant_sets(const AddressedCover &c, unsigned n)
{
	if (c.depth < n + 2)
		throw std::invalid_argument("quadrant sets at n = " + std::to_string(n) +
		                            " need depth >= " + std::to_string(n + 2));
	std::array<std::vector<Interval>, 4> parts;
	for (const auto &p : c.pieces)
		parts[2u * p.address[n] + p.address[n + 1]].push_back(p.iv);
	std::array<std::optional<CompactCover>, 4> out;
	for (int q = 0; q < 4; q++)
		if (!parts[q].empty())
			out[q] = CompactCover(std::move(parts[q]), c.resolution);
	return out;
}

Rational property1_tail_bound(std::uint64_t N)
{
	return Rational(9, 8) * pow2_inv(unsigned(N)) - Rational(1, 8) * pow10_inv(unsigned(N));
}

Property1Report verify_property1(const BitStream &x, std::uint64_t N)
{
	Property1Report r;
	auto s = address_sum(x, N);
	r.partial = s.partial;
	r.exact_limit = s.exact_limit;
	r.closed_form = 0;
	for (std::uint64_t k = 1; k <= N; k++)
		if (x.bit(k))
			r.closed_form += Rational(9) * pow10_inv(unsigned(k)) *
			                 (Rational(1) - pow2_inv(unsigned(N + 1 - k)));
	r.discrepancy = r.exact_limit - r.partial;
	r.tail_bound = property1_tail_bound(N);
	r.identity_holds = r.partial == r.closed_form;
	r.bound_holds = r.discrepancy.sign() >= 0 && r.discrepancy <= r.tail_bound;
	r.pass = r.identity_holds && r.bound_holds;
	return r;
}

Rational chain_lower_bound(unsigned n, unsigned m)
{
	auto c = proof_chain_check(n, m);
	return c.lhs - c.rhs;
}

ChainReport proof_chain_check(unsigned n, unsigned m)
{
	if (m < 1 || m > n)
		throw std::invalid_argument("chain check needs 1 <= m <= n");
	ChainReport r;
	r.lhs = Rational(9) * pow10_inv(m) * pow2_inv(n - m + 1);
	r.rhs = 0;
	for (unsigned i = m + 1; i <= n; i++)
		r.rhs += Rational(9) * pow10_inv(i) * pow2_inv(n - i + 1);
	Rational geom = Rational(9) * pow10_inv(m) * pow2_inv(n - m) * Rational(1, 8) *
	                (Rational(1) - pow(Rational(1, 5), n - m));
	r.closed_form_agrees = geom == r.rhs;
	mpz_class ten, two;
	mpz_ui_pow_ui(ten.get_mpz_t(), 10, n - m);
	mpz_ui_pow_ui(two.get_mpz_t(), 2, n - m);
	r.terminal_holds = 3 * ten > -two;
	r.pass = r.lhs > r.rhs && r.closed_form_agrees && r.terminal_holds;
	return r;
}

Property2Report verify_property2(unsigned maxlen)
{
	if (maxlen > kMaxProperty2Len)
		throw std::invalid_argument("property (2) check is limited to length " +
		                            std::to_string(kMaxProperty2Len));
	Property2Report rep{true, 0, 0, {}, {}, ""};
	for (unsigned n = 1; n <= maxlen; n++) {
		std::uint64_t count = std::uint64_t(1) << n;
		std::vector<Rational> d(count);
		for (std::uint64_t v = 0; v < count; v++)
			d[v] = d_value(bitword_from_index(v, n));
		std::vector<Rational> chain(n + 1);
		for (unsigned m = 1; m <= n; m++) {
			chain[m] = chain_lower_bound(n, m);
			rep.chain_checks++;
		}
		for (std::uint64_t a = 0; a < count; a++) {
			for (std::uint64_t b = a + 1; b < count; b++) {
				rep.comparisons++;
				/* first differing position from the top bit */
				unsigned m = n - unsigned(64 - __builtin_clzll(a ^ b)) + 1;
				Rational gap = d[b] - d[a];
				if (!(gap.sign() > 0) || gap < chain[m]) {
					rep.pass = false;
					rep.s = bitword_from_index(a, n);
					rep.t = bitword_from_index(b, n);
					std::ostringstream os;
					os << "d_s=" << d[a] << " d_t=" << d[b] << " chain bound=" << chain[m];
					rep.detail = os.str();
					return rep;
				}
			}
		}
	}
	return rep;
}

} // namespace hyperfrac
