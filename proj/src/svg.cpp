/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/svg.hpp"

#include <sstream>

namespace hyperfrac {

static std::string num(const Rational &r)
{
	std::ostringstream os;
	os.precision(kSvgDigits);
	os << r.to_double();
	return os.str();
}

std::string render_svg(const CompactCover &c, const SvgOptions &opt)
{
	if (opt.width == 0 || opt.height == 0 || opt.embed_dim == 0)
		throw std::invalid_argument("svg width, height and embed_dim must be positive");
	const Rational w(long(opt.width)), h(long(opt.height));
	const unsigned margin = 10;
	std::ostringstream os;
	os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
	   << "<!-- hyperfrac render: " << c.size() << " intervals, coordinates rounded to "
	   << kSvgDigits << " significant digits -->\n"
	   << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width + 2 * margin
	   << "\" height=\"" << opt.height + 2 * margin << "\" viewBox=\"" << -long(margin) << " "
	   << -long(margin) << " " << opt.width + 2 * margin << " " << opt.height + 2 * margin
	   << "\">\n"
	   << "<desc>embed_dim=" << opt.embed_dim << " resolution=" << c.resolution().str()
	   << "</desc>\n"
	   << "<line x1=\"0\" y1=\"" << opt.height << "\" x2=\"" << opt.width << "\" y2=\""
	   << opt.height << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
	if (opt.embed_dim > 1)
		os << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << opt.height
		   << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
	os << "<g fill=\"black\" shape-rendering=\"crispEdges\">\n";
	for (const auto &iv : c.intervals())
		os << "<rect x=\"" << num(iv.lo * w) << "\" y=\"0\" width=\"" << num(iv.length() * w)
		   << "\" height=\"" << num(h) << "\"/>\n";
	os << "</g>\n</svg>\n";
	return os.str();
}

} // namespace hyperfrac
