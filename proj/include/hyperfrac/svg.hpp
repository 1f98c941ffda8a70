/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <string>

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

constexpr int kSvgDigits = 12;

struct SvgOptions {
	unsigned width = 1000;
	unsigned height = 40;
	unsigned embed_dim = 1;  // the set is drawn on the first axis
};

/* One rectangle per interval, [0,1] spread over the width. Coordinates are
 * printed with kSvgDigits significant digits, so the picture is lossy while
 * the cover files stay exact. */
std::string render_svg(const CompactCover &c, const SvgOptions &opt = {});

} // namespace hyperfrac
