/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hyperfrac {

Rational::Rational(long num, unsigned long den)
: v_(num, den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den)
: v_(num, den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	v_.canonicalize();
}

Rational::Rational(const mpq_class &q)
: v_(q)
{
	v_.canonicalize();
}

static bool is_integer_literal(std::string_view s, bool allow_sign)
{
	if (s.empty())
		return false;
	std::size_t i = 0;
	if (allow_sign && (s[0] == '-' || s[0] == '+'))
		i = 1;
	if (i == s.size())
		return false;
	for (; i < s.size(); i++)
		if (s[i] < '0' || s[i] > '9')
			return false;
	return true;
}

Rational Rational::parse(std::string_view text, bool strict)
{
	auto slash = text.find('/');
	std::string_view ns = text.substr(0, slash);
	std::string_view ds = slash == std::string_view::npos
	                    ? std::string_view("1") : text.substr(slash + 1);
	if (strict && slash == std::string_view::npos)
		throw std::invalid_argument("rational '" + std::string(text) +
		                            "' lacks a denominator");
	if (!is_integer_literal(ns, true) || !is_integer_literal(ds, false))
		throw std::invalid_argument("malformed rational '" +
		                            std::string(text) + "'");
	std::string nstr(ns);
	if (nstr[0] == '+')
		nstr.erase(0, 1);
	mpz_class n(nstr, 10), d(std::string(ds), 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" +
		                            std::string(text) + "'");
	Rational r(n, d);
	if (strict && r.str() != text)
		throw std::invalid_argument("rational '" + std::string(text) +
		                            "' is not in lowest terms");
	return r;
}

std::size_t Rational::bits() const
{
	return mpz_sizeinbase(v_.get_num_mpz_t(), 2) +
	       mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

std::string Rational::str() const
{
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero");
	v_ /= o.v_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

Rational abs(const Rational &r)
{
	return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational &base, std::uint64_t exp)
{
	/* num and den are coprime, so are their powers; no gcd needed */
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), exp);
	mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), exp);
	mpq_class q;
	mpz_swap(mpq_numref(q.get_mpq_t()), n.get_mpz_t());
	mpz_swap(mpq_denref(q.get_mpq_t()), d.get_mpz_t());
	return Rational(q);
}

Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

Rational pow10_inv(unsigned k)
{
	mpz_class d;
	mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
	return Rational(mpz_class(1), d);
}

Rational pow2_inv(unsigned k)
{
	mpz_class d = 1;
	d <<= k;
	return Rational(mpz_class(1), d);
}

Rational floor_dyadic(const Rational &r, unsigned bits)
{
	mpz_class n = r.num();
	n <<= bits;
	mpz_class q;
	mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), r.mpq().get_den_mpz_t());
	mpz_class d = 1;
	d <<= bits;
	return Rational(q, d);
}

Rational ceil_dyadic(const Rational &r, unsigned bits)
{
	mpz_class n = r.num();
	n <<= bits;
	mpz_class q;
	mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), r.mpq().get_den_mpz_t());
	mpz_class d = 1;
	d <<= bits;
	return Rational(q, d);
}

Enclosure::Enclosure(Rational lo, Rational hi)
: lo_(std::move(lo)), hi_(std::move(hi))
{
	if (hi_ < lo_)
		throw std::invalid_argument("enclosure with lo > hi");
}

Enclosure &Enclosure::tighten()
{
	if (lo_.bits() > kExactBudget || hi_.bits() > kExactBudget) {
		Rational l = floor_dyadic(lo_, kGridBits);
		Rational h = ceil_dyadic(hi_, kGridBits);
		lo_ = std::move(l);
		hi_ = std::move(h);
	}
	return *this;
}

Enclosure &Enclosure::operator+=(const Enclosure &o)
{
	lo_ += o.lo_;
	hi_ += o.hi_;
	return tighten();
}

Enclosure &Enclosure::operator-=(const Enclosure &o)
{
	Rational l = lo_ - o.hi_;
	hi_ -= o.lo_;
	lo_ = std::move(l);
	return tighten();
}

Enclosure &Enclosure::operator*=(const Enclosure &o)
{
	if (exact() && o.exact()) {
		lo_ *= o.lo_;
		hi_ = lo_;
		return tighten();
	}
	if (lo_.sign() >= 0 && o.lo_.sign() >= 0) {
		lo_ *= o.lo_;
		hi_ *= o.hi_;
		return tighten();
	}
	Rational a = lo_ * o.lo_, b = lo_ * o.hi_;
	Rational c = hi_ * o.lo_, d = hi_ * o.hi_;
	lo_ = min(min(a, b), min(c, d));
	hi_ = max(max(a, b), max(c, d));
	return tighten();
}

Enclosure hull(const Enclosure &a, const Enclosure &b)
{
	return Enclosure(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

std::string Enclosure::str() const
{
	if (exact())
		return lo_.str();
	return "[" + lo_.str() + ", " + hi_.str() + "]";
}

Enclosure pow(const Enclosure &base, std::uint64_t exp)
{
	if (base.lo().sign() < 0)
		throw std::domain_error("enclosure power of a possibly negative base");
	if (base.exact()) {
		std::size_t est = base.lo().bits() * (exp ? exp : 1);
		if (est <= 2 * Enclosure::kExactBudget)
			return Enclosure(pow(base.lo(), exp)).tighten();
	}
	Enclosure result(Rational(1));
	Enclosure b = base;
	for (std::uint64_t e = exp; e; e >>= 1) {
		if (e & 1)
			result *= b;
		if (e > 1)
			b *= b;
	}
	return result;
}

Enclosure reciprocal(const Enclosure &e)
{
	if (e.lo().sign() <= 0 && e.hi().sign() >= 0)
		throw std::domain_error("reciprocal of an enclosure containing 0");
	Enclosure r(Rational(1) / e.hi(), Rational(1) / e.lo());
	return r.tighten();
}

} // namespace hyperfrac
