/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/grid_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

static std::vector<std::uint64_t> normalize_rows(std::vector<std::uint64_t> v)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
	if (!v.empty() && v.front() == 0)
		throw std::invalid_argument("rows are numbered from 1");
	return v;
}

Column Column::finite(std::vector<std::uint64_t> members)
{
	return {false, normalize_rows(std::move(members))};
}

Column Column::cofinite_except(std::vector<std::uint64_t> excluded)
{
	return {true, normalize_rows(std::move(excluded))};
}

bool Column::contains(std::uint64_t m) const
{
	bool listed = std::binary_search(rows.begin(), rows.end(), m);
	return cofinite ? !listed : listed;
}

static std::vector<std::uint64_t> set_union(const std::vector<std::uint64_t> &a,
                                            const std::vector<std::uint64_t> &b)
{
	std::vector<std::uint64_t> out;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

static std::vector<std::uint64_t> set_intersection(const std::vector<std::uint64_t> &a,
                                                   const std::vector<std::uint64_t> &b)
{
	std::vector<std::uint64_t> out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

static std::vector<std::uint64_t> set_difference(const std::vector<std::uint64_t> &a,
                                                 const std::vector<std::uint64_t> &b)
{
	std::vector<std::uint64_t> out;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

Column Column::unite(const Column &o) const
{
	if (!cofinite && !o.cofinite)
		return {false, set_union(rows, o.rows)};
	if (cofinite && o.cofinite)
		return {true, set_intersection(rows, o.rows)};
	const Column &fin = cofinite ? o : *this;
	const Column &cof = cofinite ? *this : o;
	return {true, set_difference(cof.rows, fin.rows)};
}

bool Column::subset_of(const Column &o) const
{
	if (!cofinite && !o.cofinite)
		return std::includes(o.rows.begin(), o.rows.end(), rows.begin(), rows.end());
	if (!cofinite)
		return set_intersection(rows, o.rows).empty();
	if (!o.cofinite)
		return false;
	return std::includes(rows.begin(), rows.end(), o.rows.begin(), o.rows.end());
}

GridSet::GridSet(std::map<std::uint64_t, Column> columns, Fill fill, Tail tail)
: cols_(std::move(columns)), fill_(fill), tail_(tail)
{
	for (auto &[n, c] : cols_) {
		if (n == 0)
			throw std::invalid_argument("columns are numbered from 1");
		c.rows = normalize_rows(std::move(c.rows));
	}
	if (tail_ == Tail::repeat && cols_.empty())
		throw std::invalid_argument("tail=repeat needs at least one explicit column");
}

std::uint64_t GridSet::last_column() const
{
	return cols_.empty() ? 0 : cols_.rbegin()->first;
}

Column GridSet::column(std::uint64_t n) const
{
	if (n == 0)
		throw std::out_of_range("columns are numbered from 1");
	auto it = cols_.find(n);
	if (it != cols_.end())
		return it->second;
	std::uint64_t N = last_column();
	if (n < N)
		return fill_ == Fill::full ? Column::full() : Column::empty();
	switch (tail_) {
	case Tail::empty: return Column::empty();
	case Tail::full: return Column::full();
	case Tail::repeat: return cols_.rbegin()->second;
	}
	return Column::empty();
}

std::uint64_t GridSet::max_row() const
{
	std::uint64_t m = 0;
	for (const auto &[n, c] : cols_)
		if (!c.rows.empty())
			m = std::max(m, c.rows.back());
	return m;
}

bool GridSet::equivalent(const GridSet &o) const
{
	std::uint64_t N = std::max(last_column(), o.last_column()) + 1;
	for (std::uint64_t n = 1; n <= N; n++)
		if (!(column(n) == o.column(n)))
			return false;
	return true;
}

bool GridSet::subset_of(const GridSet &o) const
{
	std::uint64_t N = std::max(last_column(), o.last_column()) + 1;
	for (std::uint64_t n = 1; n <= N; n++)
		if (!column(n).subset_of(o.column(n)))
			return false;
	return true;
}

BitStream GridSet::column_stream(std::uint64_t n) const
{
	Column c = column(n);
	std::uint64_t len = c.rows.empty() ? 0 : c.rows.back();
	BitWord head(len, c.cofinite ? 1 : 0);
	for (auto m : c.rows)
		head[m - 1] = c.cofinite ? 0 : 1;
	return BitStream(std::move(head), {std::uint8_t(c.cofinite ? 1 : 0)});
}

static std::uint64_t parse_natural(const std::string &tok, const std::string &where)
{
	if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
		throw ParseError(where + ": expected a natural number, got '" + tok + "'");
	return std::stoull(tok);
}

GridSet parse_gridset(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	std::size_t lineno = 0;
	bool have_header = false;
	Fill fill = Fill::empty;
	std::optional<Tail> tail;
	std::map<std::uint64_t, Column> cols;

	while (std::getline(in, line)) {
		lineno++;
		std::istringstream ls(line);
		std::string kw;
		if (!(ls >> kw) || kw[0] == '#')
			continue;
		std::string where = "line " + std::to_string(lineno);
		if (!have_header) {
			std::string ver, tok;
			ls >> ver;
			if (kw != "gridset" || ver != "v1")
				throw ParseError("bad gridset header: '" + line + "'");
			bool have_default = false;
			while (ls >> tok) {
				if (tok == "default=empty" || tok == "default=full") {
					fill = tok == "default=full" ? Fill::full : Fill::empty;
					have_default = true;
				} else if (tok == "tail=empty") {
					tail = Tail::empty;
				} else if (tok == "tail=full") {
					tail = Tail::full;
				} else if (tok == "tail=repeat") {
					tail = Tail::repeat;
				} else {
					throw ParseError("unknown gridset header field '" + tok + "'");
				}
			}
			if (!have_default)
				throw ParseError("gridset header needs default=<empty|full>");
			have_header = true;
			continue;
		}
		if (kw != "col")
			throw ParseError(where + ": expected 'col'");
		std::string ntok, kind, tok;
		if (!(ls >> ntok >> kind))
			throw ParseError(where + ": expected 'col <n> <finite|cofinite> ...'");
		std::uint64_t n = parse_natural(ntok, where);
		if (n == 0)
			throw ParseError(where + ": columns are numbered from 1");
		if (kind != "finite" && kind != "cofinite")
			throw ParseError(where + ": unknown column kind '" + kind + "'");
		std::vector<std::uint64_t> rows;
		while (ls >> tok) {
			std::uint64_t m = parse_natural(tok, where);
			if (m == 0)
				throw ParseError(where + ": rows are numbered from 1");
			rows.push_back(m);
		}
		Column c = kind == "finite" ? Column::finite(std::move(rows))
		                            : Column::cofinite_except(std::move(rows));
		if (!cols.emplace(n, std::move(c)).second)
			throw ParseError(where + ": column " + std::to_string(n) + " listed twice");
	}
	if (!have_header)
		throw ParseError("missing gridset header");
	Tail t = tail ? *tail : (fill == Fill::full ? Tail::full : Tail::empty);
	try {
		return GridSet(std::move(cols), fill, t);
	} catch (const std::invalid_argument &e) {
		throw ParseError(e.what());
	}
}

GridSet read_gridset_file(const std::string &path)
{
	std::ifstream f(path);
	if (!f)
		throw ParseError("cannot open '" + path + "'");
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_gridset(ss.str());
}

std::string format_gridset(const GridSet &g)
{
	static const char *tails[] = {"empty", "full", "repeat"};
	std::ostringstream os;
	os << "gridset v1 default=" << (g.fill() == Fill::full ? "full" : "empty")
	   << " tail=" << tails[int(g.tail())] << "\n";
	for (const auto &[n, c] : g.columns()) {
		os << "col " << n << (c.cofinite ? " cofinite" : " finite");
		for (auto m : c.rows)
			os << " " << m;
		os << "\n";
	}
	return os.str();
}

} // namespace hyperfrac
