/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

/* Finite 0/1 word; position k (1-based) is bits[k-1]. */
using BitWord = std::vector<std::uint8_t>;

BitWord parse_bitword(std::string_view text);
std::string format_bitword(const BitWord &s);

/* Word of length n whose bits are the binary digits of v, most
 * significant first, so increasing v runs through {0,1}^n in lex order. */
BitWord bitword_from_index(std::uint64_t v, unsigned n);

/* Eventually periodic infinite 0/1 sequence: head, then the period word
 * repeated forever. Constant tails are periods of length one. */
class BitStream {
public:
	BitStream() : period_{0} {}
	BitStream(BitWord head, BitWord period);

	static BitStream zeros() { return BitStream({}, {0}); }
	static BitStream ones() { return BitStream({}, {1}); }
	static BitStream finite_support(BitWord head) { return BitStream(std::move(head), {0}); }

	/* "<head>:0const", "<head>:1const", "<head>:period(<word>)"; head may be
	 * empty. */
	static BitStream parse(std::string_view text);
	std::string str() const;

	const BitWord &head() const { return head_; }
	const BitWord &period() const { return period_; }

	/* 1-based */
	std::uint8_t bit(std::uint64_t k) const;
	BitWord prefix(std::size_t n) const;

	bool eventually_zero() const;
	bool eventually_one() const;

	friend bool operator==(const BitStream &, const BitStream &) = default;

private:
	BitWord head_, period_;
};

/* i-th term (i >= 1) of the sequence e^s. */
Rational e_term(const BitWord &s, std::uint64_t i);

/* d_s = sum over k <= lh(s) of e^{s|k}_{lh(s)}, from the definition. */
Rational d_value(const BitWord &s);

/* sum over k with x_k = 1 of 9/10^k, in closed form. */
Rational cantor_point(const BitStream &x);

struct AddressSum {
	Rational partial;      // sum over n <= N of d_{x|n}
	Rational exact_limit;  // sum over k with x_k = 1 of 9/10^k
};

AddressSum address_sum(const BitStream &x, std::uint64_t N);

/* sum over all n of d_{x|n} for finitely supported x: the explicit part up
 * to the last 1 at position M, then the geometric tail d_{x|M} * (1/2 + 1/4
 * + ...) = d_{x|M}. */
Rational address_series(const BitWord &support_word);

/* The 2^depth intervals of the depth-th construction stage. */
CompactCover cantor_cover(unsigned depth);
constexpr unsigned kMaxCantorDepth = 22;

/* A construction-stage interval with the address of its cylinder. */
struct AddressedInterval {
	BitWord address;
	Interval iv;
};

struct AddressedCover {
	std::vector<AddressedInterval> pieces;
	unsigned depth;
	Rational resolution;

	CompactCover cover() const;
};

/* Cantor cover of D intersected with [0, 10^-lead_zeros], addressed. */
AddressedCover addressed_cantor_cover(unsigned depth, unsigned lead_zeros = 0);

/* E^n_1..E^n_4: pieces whose bits (n+1, n+2) are 00, 01, 10, 11. A quadrant
 * with no pieces is nullopt. Throws when depth < n + 2. */
std::array<std::optional<CompactCover>, 4> quadrant_sets(const AddressedCover &c, unsigned n);

struct Property1Report {
	bool pass;
	bool identity_holds;  // partial equals the closed form
	bool bound_holds;     // limit - partial within the tail bound
	Rational partial;
	Rational closed_form;
	Rational exact_limit;
	Rational discrepancy; // exact_limit - partial
	Rational tail_bound;
};

/* Tight tail bound (9/8) 2^-N - (1/8) 10^-N, attained at x = 111... */
Rational property1_tail_bound(std::uint64_t N);

Property1Report verify_property1(const BitStream &x, std::uint64_t N);

/* 9/10^m 2^-(n-m+1) - sum_{i=m+1..n} 9/10^i 2^-(n-i+1) */
Rational chain_lower_bound(unsigned n, unsigned m);

struct ChainReport {
	bool pass;
	Rational lhs, rhs;            // the two sides of the strict inequality
	bool closed_form_agrees;      // rhs matches its geometric-series form
	bool terminal_holds;          // 3 * 10^(n-m) > -2^(n-m)
};

ChainReport proof_chain_check(unsigned n, unsigned m);

struct Property2Report {
	bool pass;
	std::uint64_t comparisons;
	std::uint64_t chain_checks;
	/* first failure, if any */
	std::optional<BitWord> s, t;
	std::string detail;
};

/* Exhaustive over all equal-length pairs s <lex t with lh <= maxlen: checks
 * d_s < d_t and d_t - d_s >= chain_lower_bound(n, m). */
Property2Report verify_property2(unsigned maxlen);
constexpr unsigned kMaxProperty2Len = 12;

} // namespace hyperfrac
