/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperfrac {

/* Arbitrary-precision rational, always in lowest terms with a positive
 * denominator. Thin value wrapper over GMP's mpq. */
class Rational {
public:
	Rational() = default;
	Rational(long v) : v_(v) {}
	Rational(long num, unsigned long den);
	Rational(const mpz_class &num, const mpz_class &den);
	explicit Rational(const mpq_class &q);

	/* Accepts "p/q" or a bare integer "p". Non-canonical input ("2/4",
	 * "1/-2") is rejected when strict is set. */
	static Rational parse(std::string_view text, bool strict = false);

	mpz_class num() const { return v_.get_num(); }
	mpz_class den() const { return v_.get_den(); }
	const mpq_class &mpq() const { return v_; }

	int sign() const { return sgn(v_); }
	bool is_zero() const { return sign() == 0; }
	bool is_integer() const { return v_.get_den() == 1; }

	/* Total bit size of numerator and denominator. */
	std::size_t bits() const;

	double to_double() const { return v_.get_d(); }

	/* Lowest-terms "p/q"; integers keep the "/1". */
	std::string str() const;

	Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
	Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
	Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.v_ == b.v_;
	}
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
	mpq_class v_;
};

Rational abs(const Rational &r);
Rational pow(const Rational &base, std::uint64_t exp);
Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);

/* 1/10^k and 1/2^k, used everywhere in the decimal Cantor machinery. */
Rational pow10_inv(unsigned k);
Rational pow2_inv(unsigned k);

/* Rounds to the grid 2^-bits, downwards / upwards. */
Rational floor_dyadic(const Rational &r, unsigned bits);
Rational ceil_dyadic(const Rational &r, unsigned bits);

/* Closed rational enclosure [lo, hi] of a real quantity that is either
 * known exactly (lo == hi) or only bounded. Values whose exact form grows
 * beyond a bit budget are rounded outwards onto a dyadic grid, so long
 * chains of products stay cheap while every bound remains rigorous. */
class Enclosure {
public:
	static constexpr std::size_t kExactBudget = 1024;
	static constexpr unsigned kGridBits = 256;

	Enclosure() = default;
	Enclosure(Rational exact) : lo_(exact), hi_(std::move(exact)) {}
	Enclosure(Rational lo, Rational hi);

	const Rational &lo() const { return lo_; }
	const Rational &hi() const { return hi_; }
	Rational width() const { return hi_ - lo_; }
	bool exact() const { return lo_ == hi_; }

	/* Rounds outwards if either bound exceeds the exact budget. */
	Enclosure &tighten();

	bool contains(const Rational &r) const { return lo_ <= r && r <= hi_; }
	bool certainly_less(const Enclosure &o) const { return hi_ < o.lo_; }
	bool certainly_greater(const Enclosure &o) const { return lo_ > o.hi_; }

	Enclosure &operator+=(const Enclosure &o);
	Enclosure &operator-=(const Enclosure &o);
	Enclosure &operator*=(const Enclosure &o);

	friend Enclosure operator+(Enclosure a, const Enclosure &b) { return a += b; }
	friend Enclosure operator-(Enclosure a, const Enclosure &b) { return a -= b; }
	friend Enclosure operator*(Enclosure a, const Enclosure &b) { return a *= b; }
	friend Enclosure operator-(const Enclosure &a) { return Enclosure(-a.hi_, -a.lo_); }

	/* Convex hull of two enclosures. */
	friend Enclosure hull(const Enclosure &a, const Enclosure &b);

	std::string str() const;

private:
	Rational lo_, hi_;
};

/* Enclosure of base^exp for base >= 0, by square-and-multiply with
 * outward rounding. Exact whenever the result fits the exact budget. */
Enclosure pow(const Enclosure &base, std::uint64_t exp);

Enclosure reciprocal(const Enclosure &e);

} // namespace hyperfrac
