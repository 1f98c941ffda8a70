/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperfrac {

struct CheckLine {
	std::string name;
	bool pass;
	std::string detail;
};

struct VerifyOptions {
	unsigned maxlen = 10;          // remark2
	std::uint64_t ktilde_lo = 2;   // conditions
	std::uint64_t ktilde_hi = 50;
	std::uint64_t delta_hi = 200;  // delta: k_tilde in 2..delta_hi
	std::uint64_t random = 10000;  // lemma2
	std::uint64_t seed = 7;
	bool exhaustive = true;        // lemma2
	unsigned levels = 4;           // sections
};

const std::vector<std::string> &verify_suite_names();

/* One line per check. "all" runs every suite. Throws std::invalid_argument
 * on an unknown suite. */
std::vector<CheckLine> run_verify_suite(const std::string &suite, const VerifyOptions &opt);

std::string format_check_line(const CheckLine &c);

} // namespace hyperfrac
