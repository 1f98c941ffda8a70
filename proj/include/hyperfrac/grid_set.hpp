/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperfrac/cantor_addressing.hpp"

namespace hyperfrac {

/* A finite or cofinite subset of {1, 2, ...}. rows are the members of a
 * finite column and the excluded rows of a cofinite one. */
struct Column {
	bool cofinite = false;
	std::vector<std::uint64_t> rows;  // sorted, unique, >= 1

	static Column empty() { return {}; }
	static Column full() { return {true, {}}; }
	static Column finite(std::vector<std::uint64_t> members);
	static Column cofinite_except(std::vector<std::uint64_t> excluded);

	bool contains(std::uint64_t m) const;
	bool subset_of(const Column &o) const;
	Column complement() const { return {!cofinite, rows}; }
	Column unite(const Column &o) const;

	friend bool operator==(const Column &, const Column &) = default;
};

enum class Fill { empty, full };
enum class Tail { empty, full, repeat };

/* A subset of N^2 given by finitely many explicit columns. Unlisted
 * columns below the last explicit one follow the default; columns past it
 * follow the tail rule (all empty, all full, or copies of the last
 * explicit column). Every column past the last explicit one is therefore
 * the same, which keeps the infinitary questions decidable. */
class GridSet {
public:
	GridSet(std::map<std::uint64_t, Column> columns = {}, Fill fill = Fill::empty,
	        Tail tail = Tail::empty);

	static GridSet empty() { return {}; }
	static GridSet full() { return GridSet({}, Fill::full, Tail::full); }

	const std::map<std::uint64_t, Column> &columns() const { return cols_; }
	Fill fill() const { return fill_; }
	Tail tail() const { return tail_; }

	/* index of the last explicit column, 0 if none */
	std::uint64_t last_column() const;

	Column column(std::uint64_t n) const;
	bool contains(std::uint64_t n, std::uint64_t m) const { return column(n).contains(m); }

	/* largest row mentioned anywhere, 0 if none */
	std::uint64_t max_row() const;

	/* Same set of pairs. */
	bool equivalent(const GridSet &o) const;
	bool subset_of(const GridSet &o) const;

	/* Bits of the n-th column: bit m is 1 iff (n, m) is in the set. */
	BitStream column_stream(std::uint64_t n) const;

private:
	std::map<std::uint64_t, Column> cols_;
	Fill fill_;
	Tail tail_;
};

/* "gridset v1 default=<empty|full> [tail=<empty|full|repeat>]" then lines
 * "col <n> finite <m>..." or "col <n> cofinite <m>...". Without a tail
 * field the tail follows the default. */
GridSet parse_gridset(std::string_view text);
GridSet read_gridset_file(const std::string &path);
std::string format_gridset(const GridSet &g);

} // namespace hyperfrac
