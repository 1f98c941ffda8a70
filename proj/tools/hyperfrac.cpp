/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperfrac/borel.hpp"
#include "hyperfrac/ifs.hpp"
#include "hyperfrac/reduction.hpp"
#include "hyperfrac/svg.hpp"
#include "hyperfrac/verify.hpp"

using namespace hyperfrac;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string &s, const char *what)
{
	if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
		throw UsageError(std::string(what) + " must be a natural number, got '" + s + "'");
	return std::stoull(s);
}

std::uint64_t default_cap()
{
	const char *env = std::getenv("HYPERFRAC_CAP");
	if (!env)
		return kDefaultIterationCap;
	std::uint64_t v = parse_u64(env, "HYPERFRAC_CAP");
	if (v == 0)
		throw UsageError("HYPERFRAC_CAP must be at least 1");
	return v;
}

void write_text(const std::string &path, const std::string &text)
{
	std::ofstream f(path, std::ios::binary);
	if (!f || !(f << text))
		throw std::runtime_error("cannot write '" + path + "'");
}

struct Flags {
	std::string input, input_b, out, plan_out, tol = "1/1000000", cap, suite = "all";
	std::string ktilde;
	unsigned depth = 6, levels = 2, maxlen = 10, height = 40;
	std::optional<unsigned> embed_dim;
	std::uint64_t seed = 7, random = 10000;
};

int cmd_attractor(const Flags &f)
{
	Rational tol = Rational::parse(f.tol);
	if (tol.sign() <= 0)
		throw UsageError("--tol must be positive");
	std::uint64_t cap = f.cap.empty() ? default_cap() : parse_u64(f.cap, "--cap");
	if (cap == 0)
		throw UsageError("--cap must be at least 1");
	IfsSystem sys = read_ifs_file(f.input);
	AttractorResult r = attractor_solve(sys, tol, cap);
	std::string text = format_cover(r.cover.with_resolution(max(r.cover.resolution(), r.error_bound)));
	if (f.out.empty())
		std::cout << text;
	else
		write_text(f.out, text);
	std::cout << "certificate iterations=" << r.iterations << " intervals=" << r.cover.size()
	          << " error_bound=" << r.error_bound
	          << (r.heuristic ? " heuristic=yes (weak system, Cauchy step only)" : " heuristic=no")
	          << "\n";
	return kOk;
}

int cmd_reduce(const Flags &f)
{
	GridSet a = read_gridset_file(f.input);
	std::size_t cap = f.cap.empty() ? kDefaultPhiCap : parse_u64(f.cap, "--cap");
	PhiResult r = phi(a, f.levels, f.depth, cap);
	std::string text = format_cover(r.cover);
	if (f.out.empty())
		std::cout << text;
	else
		write_text(f.out, text);
	std::string plan_path = !f.plan_out.empty() ? f.plan_out : f.out.empty() ? "" : f.out + ".plan";
	if (!plan_path.empty())
		write_text(plan_path, format_plan(r.plans));
	std::cout << "certificate levels=" << f.levels << " depth=" << f.depth
	          << " intervals=" << r.cover.size() << " resolution=" << r.cover.resolution()
	          << " scale=" << r.scale << " x_in=[" << r.x.lo().to_double() << ", "
	          << r.x.hi().to_double() << "]\n";
	return kOk;
}

int cmd_verify(const Flags &f)
{
	VerifyOptions opt;
	opt.maxlen = f.maxlen;
	opt.seed = f.seed;
	opt.random = f.random;
	opt.levels = f.levels;
	if (f.maxlen < 1 || f.maxlen > kMaxProperty2Len)
		throw UsageError("--maxlen must lie in 1.." + std::to_string(kMaxProperty2Len));
	if (f.levels < 1 || f.levels > kMaxLevels)
		throw UsageError("--levels must lie in 1.." + std::to_string(kMaxLevels));
	if (!f.ktilde.empty()) {
		auto dots = f.ktilde.find("..");
		if (dots == std::string::npos)
			throw UsageError("--ktilde expects a..b");
		opt.ktilde_lo = parse_u64(f.ktilde.substr(0, dots), "--ktilde");
		opt.ktilde_hi = parse_u64(f.ktilde.substr(dots + 2), "--ktilde");
		if (opt.ktilde_lo < 2 || opt.ktilde_hi < opt.ktilde_lo)
			throw UsageError("--ktilde needs 2 <= a <= b");
	}
	std::vector<CheckLine> lines;
	try {
		lines = run_verify_suite(f.suite, opt);
	} catch (const std::invalid_argument &e) {
		throw UsageError(e.what());
	}
	bool all = true;
	for (const auto &c : lines) {
		std::cout << format_check_line(c) << "\n";
		all = all && c.pass;
	}
	std::cout << "summary " << (all ? "PASS" : "FAIL") << " checks=" << lines.size() << "\n";
	return all ? kOk : kVerifyFail;
}

int cmd_hausdorff(const Flags &f)
{
	CoverFile a = read_cover_file(f.input), b = read_cover_file(f.input_b);
	Rational d = hausdorff_distance(a.cover, b.cover);
	Rational slack = a.cover.resolution() + b.cover.resolution();
	std::cout << d << "\n";
	std::cout << "# ideal sets: distance within [" << max(Rational(0), d - slack) << ", "
	          << d + slack << "] (resolutions " << a.cover.resolution() << " + "
	          << b.cover.resolution() << ")\n";
	return kOk;
}

int cmd_render(const Flags &f)
{
	CoverFile c = read_cover_file(f.input);
	SvgOptions opt;
	opt.height = f.height;
	opt.embed_dim = f.embed_dim ? *f.embed_dim : c.embed_dim.value_or(1);
	if (opt.height == 0 || opt.embed_dim == 0)
		throw UsageError("--height and --embed-dim must be positive");
	std::string svg = render_svg(c.cover, opt);
	if (f.out.empty())
		std::cout << svg;
	else
		write_text(f.out, svg);
	return kOk;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"hyperfrac: exact compact sets, IFS attractors and the section reduction"};
	app.require_subcommand(1);
	Flags f;

	auto *att = app.add_subcommand("attractor", "iterate an IFS file to its attractor");
	att->add_option("ifs", f.input, "IFS file")->required();
	att->add_option("--tol", f.tol, "tolerance p/q");
	att->add_option("--cap", f.cap, "iteration cap (default HYPERFRAC_CAP or 1000000)");
	att->add_option("--out", f.out, "cover file to write");

	auto *red = app.add_subcommand("reduce", "approximate phi(A) for a gridset file");
	red->add_option("gridset", f.input, "gridset file")->required();
	red->add_option("--levels", f.levels, "sections to build")->check(CLI::Range(1u, kMaxLevels));
	red->add_option("--depth", f.depth, "construction depth")->check(CLI::Range(1u, kMaxCantorDepth));
	red->add_option("--cap", f.cap, "interval cap");
	red->add_option("--out", f.out, "cover file to write");
	red->add_option("--plan", f.plan_out, "section plan dump (default <out>.plan)");

	auto *ver = app.add_subcommand("verify", "run verification suites");
	ver->add_option("suite", f.suite, "suite name")
		->check(CLI::IsMember(verify_suite_names()));
	ver->add_option("--maxlen", f.maxlen, "remark2: longest word");
	ver->add_option("--ktilde", f.ktilde, "conditions: range a..b");
	ver->add_option("--random", f.random, "lemma2: random instances");
	ver->add_option("--seed", f.seed, "lemma2: seed");
	ver->add_option("--levels", f.levels, "sections: levels to build");

	auto *hau = app.add_subcommand("hausdorff", "exact Hausdorff distance of two cover files");
	hau->add_option("a", f.input, "cover file")->required();
	hau->add_option("b", f.input_b, "cover file")->required();

	auto *ren = app.add_subcommand("render", "draw a cover file as SVG");
	ren->add_option("cover", f.input, "cover file")->required();
	ren->add_option("--out", f.out, "SVG file to write");
	ren->add_option("--height", f.height, "bar height");
	ren->add_option("--embed-dim", f.embed_dim, "ambient dimension of the drawing");

	ver->callback([&] { if (!ver->count("--levels")) f.levels = 4; });

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kUsage;
	}

	try {
		if (*att)
			return cmd_attractor(f);
		if (*red)
			return cmd_reduce(f);
		if (*ver)
			return cmd_verify(f);
		if (*hau)
			return cmd_hausdorff(f);
		if (*ren)
			return cmd_render(f);
	} catch (const CapExceeded &e) {
		std::cerr << "error: " << e.what() << " (last iterate has " << e.last.size()
		          << " intervals)\n";
		return kResource;
	} catch (const ResourceCap &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kResource;
	} catch (const UsageError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const ParseError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	}
	return kUsage;
}
