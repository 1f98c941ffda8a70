/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/borel.hpp"

#include <sstream>

namespace hyperfrac {

/* All columns past the last explicit one equal column(N + 1), so the
 * infinitary questions reduce to that single column. */

bool in_empty_times_fin(const GridSet &a)
{
	std::uint64_t N = a.last_column();
	for (std::uint64_t n = 1; n <= N + 1; n++)
		if (a.column(n).cofinite)
			return false;
	return true;
}

bool in_Z(const GridSet &a)
{
	return !a.column(a.last_column() + 1).cofinite;
}

bool infinitely_many_cofinite(const GridSet &a)
{
	return a.column(a.last_column() + 1).cofinite;
}

GridSet lemma2_map(const GridSet &b)
{
	std::uint64_t N = b.last_column();
	std::map<std::uint64_t, Column> out;
	Column acc = Column::empty();
	for (std::uint64_t n = 1; n <= N + 1; n++) {
		acc = acc.unite(b.column(n));
		out.emplace(n, acc);
	}
	return GridSet(std::move(out), Fill::empty, Tail::repeat);
}

GridSet complement(const GridSet &a)
{
	std::map<std::uint64_t, Column> out;
	for (const auto &[n, c] : a.columns())
		out.emplace(n, c.complement());
	Fill fill = a.fill() == Fill::full ? Fill::empty : Fill::full;
	Tail tail = a.tail() == Tail::empty  ? Tail::full
	          : a.tail() == Tail::full   ? Tail::empty
	                                     : Tail::repeat;
	return GridSet(std::move(out), fill, tail);
}

bool check_lemma2_instance(const GridSet &b, std::string *why)
{
	auto fail = [&](const std::string &msg) {
		if (why)
			*why = msg;
		return false;
	};
	GridSet f = lemma2_map(b);
	if (in_Z(f) != in_empty_times_fin(b))
		return fail("in_Z(f(B)) disagrees with B in empty x Fin");
	if (in_Z(b) != infinitely_many_cofinite(complement(b)))
		return fail("in_Z(B) disagrees with the complement having infinitely many cofinite columns");

	std::uint64_t N = std::max(b.last_column(), f.last_column()) + 2;
	std::uint64_t M = std::max(b.max_row(), f.max_row()) + 1;
	std::vector<Column> bc(N + 1), fc(N + 1);
	for (std::uint64_t n = 1; n <= N; n++) {
		bc[n] = b.column(n);
		fc[n] = f.column(n);
		if (n > 1 && !fc[n - 1].subset_of(fc[n]))
			return fail("columns of f(B) are not increasing at " + std::to_string(n));
	}
	for (std::uint64_t m = 1; m <= M; m++) {
		bool seen = false;
		for (std::uint64_t n = 1; n <= N; n++) {
			seen = seen || bc[n].contains(m);
			if (fc[n].contains(m) != seen)
				return fail("f(B) differs from the union at (" + std::to_string(n) + "," +
				            std::to_string(m) + ")");
		}
	}
	return true;
}

GridSet random_gridset(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> ncols(0, 6), idx(1, 8), bit(0, 1), tail(0, 2);
	std::map<std::uint64_t, Column> cols;
	int count = ncols(rng);
	for (int i = 0; i < count; i++) {
		std::vector<std::uint64_t> rows;
		for (std::uint64_t m = 1; m <= 8; m++)
			if (bit(rng))
				rows.push_back(m);
		Column c = bit(rng) ? Column::cofinite_except(std::move(rows)) : Column::finite(std::move(rows));
		cols[std::uint64_t(idx(rng))] = std::move(c);
	}
	Fill fill = bit(rng) ? Fill::full : Fill::empty;
	Tail t = Tail(tail(rng));
	if (cols.empty() && t == Tail::repeat)
		t = Tail::empty;
	return GridSet(std::move(cols), fill, t);
}

Lemma2Report verify_lemma2(const Lemma2Config &cfg)
{
	Lemma2Report rep{true, 0, 0, std::nullopt, ""};
	auto record = [&](const GridSet &b, const std::string &why) {
		rep.pass = false;
		rep.counterexample = b;
		rep.detail = why;
	};
	std::string why;

	if (cfg.exhaustive) {
		if (cfg.columns * cfg.rows > 24 || cfg.columns > 8)
			throw std::invalid_argument("exhaustive lemma2 range too large");
		const std::uint64_t patterns = std::uint64_t(1) << (cfg.columns * cfg.rows);
		const std::uint64_t kinds = std::uint64_t(1) << cfg.columns;
		const std::uint64_t row_mask = (std::uint64_t(1) << cfg.rows) - 1;
		for (std::uint64_t pat = 0; pat < patterns && rep.pass; pat++) {
			for (std::uint64_t kind = 0; kind < kinds && rep.pass; kind++) {
				std::map<std::uint64_t, Column> cols;
				for (unsigned n = 0; n < cfg.columns; n++) {
					std::uint64_t bits = (pat >> (n * cfg.rows)) & row_mask;
					bool cof = (kind >> n) & 1;
					Column c{cof, {}};
					for (unsigned m = 0; m < cfg.rows; m++)
						if (((bits >> m) & 1) != cof)
							c.rows.push_back(m + 1);
					cols.emplace(n + 1, std::move(c));
				}
				for (Tail t : {Tail::empty, Tail::full, Tail::repeat}) {
					if (cols.empty() && t == Tail::repeat)
						continue;
					GridSet b(cols, Fill::empty, t);
					rep.exhaustive_checked++;
					if (!check_lemma2_instance(b, &why)) {
						record(b, why);
						break;
					}
				}
			}
		}
	}

	std::mt19937_64 rng(cfg.seed);
	for (std::uint64_t i = 0; i < cfg.random && rep.pass; i++) {
		GridSet b = random_gridset(rng);
		rep.random_checked++;
		if (!check_lemma2_instance(b, &why))
			record(b, why);
	}
	if (rep.pass) {
		std::ostringstream os;
		os << rep.exhaustive_checked << " exhaustive and " << rep.random_checked
		   << " random instances agree";
		rep.detail = os.str();
	}
	return rep;
}

} // namespace hyperfrac
