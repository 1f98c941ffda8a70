/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hyperfrac/grid_set.hpp"

namespace hyperfrac {

/* every column finite */
bool in_empty_times_fin(const GridSet &a);
/* infinitely many finite columns */
bool in_Z(const GridSet &a);
/* infinitely many cofinite columns */
bool infinitely_many_cofinite(const GridSet &a);

/* f(B)_n = B_1 u ... u B_n */
GridSet lemma2_map(const GridSet &b);
GridSet complement(const GridSet &a);

struct Lemma2Config {
	unsigned columns = 4;        // exhaustive: columns 1..columns
	unsigned rows = 4;           // exhaustive: rows 1..rows
	bool exhaustive = true;
	std::uint64_t random = 10000;
	std::uint64_t seed = 7;
};

struct Lemma2Report {
	bool pass;
	std::uint64_t exhaustive_checked;
	std::uint64_t random_checked;
	std::optional<GridSet> counterexample;
	std::string detail;
};

/* Checks one instance: the preimage identity, the complement identity,
 * increasing columns of f(B), and pointwise agreement with the union
 * definition on the rows and columns the descriptors mention. */
bool check_lemma2_instance(const GridSet &b, std::string *why = nullptr);

/* A random descriptor drawn from columns and rows in 1..8. */
GridSet random_gridset(std::mt19937_64 &rng);

Lemma2Report verify_lemma2(const Lemma2Config &cfg);

} // namespace hyperfrac
