/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#include "hyperfrac/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "hyperfrac/borel.hpp"
#include "hyperfrac/reduction.hpp"

namespace hyperfrac {

using Suite = std::function<void(const VerifyOptions &, std::vector<CheckLine> &)>;

static void remark2(const VerifyOptions &opt, std::vector<CheckLine> &out)
{
	Property2Report r = verify_property2(opt.maxlen);
	std::ostringstream os;
	os << "maxlen=" << opt.maxlen << " comparisons=" << r.comparisons
	   << " chain_checks=" << r.chain_checks;
	if (!r.pass)
		os << " counterexample s=" << format_bitword(*r.s) << " t=" << format_bitword(*r.t)
		   << " " << r.detail;
	out.push_back({"remark2.order", r.pass, os.str()});
}

static void chain(const VerifyOptions &, std::vector<CheckLine> &out)
{
	std::uint64_t checked = 0;
	std::ostringstream os;
	bool pass = true;
	for (unsigned n = 2; n <= 20 && pass; n++)
		for (unsigned m = 1; m < n && pass; m++) {
			ChainReport c = proof_chain_check(n, m);
			checked++;
			if (!c.pass) {
				pass = false;
				os << "fails at n=" << n << " m=" << m << " lhs=" << c.lhs << " rhs=" << c.rhs << " ";
			}
		}
	os << "pairs=" << checked << " range=1<=m<n<=20";
	out.push_back({"remark2.chain", pass, os.str()});
}

static void property1(const VerifyOptions &, std::vector<CheckLine> &out)
{
	bool pass = true;
	std::ostringstream os;
	for (std::uint64_t v = 0; v < 256 && pass; v++) {
		BitWord w = bitword_from_index(v, 8);
		Rational direct = 0;
		for (unsigned k = 1; k <= 8; k++)
			if (w[k - 1])
				direct += Rational(9) * pow10_inv(k);
		Property1Report r = verify_property1(BitStream::finite_support(w), 8);
		if (!r.pass || r.exact_limit != direct || address_series(w) != direct) {
			pass = false;
			os << "fails at x=" << format_bitword(w) << " ";
		}
	}
	os << "supports=256 rows=1..8";
	out.push_back({"property1.series", pass, os.str()});
}

static void conditions(const VerifyOptions &opt, std::vector<CheckLine> &out)
{
	if (opt.ktilde_lo < 2 || opt.ktilde_hi < opt.ktilde_lo)
		throw std::invalid_argument("--ktilde needs 2 <= a <= b");
	std::uint64_t checked = 0, violations = 0;
	std::ostringstream os;
	for (std::uint64_t k = opt.ktilde_lo; k <= opt.ktilde_hi; k++)
		for (long i = 1; i <= 999; i++) {
			ConditionReport r = check_delta_conditions(k, Rational(i, 1000));
			checked++;
			if (!r.chart_holds) {
				if (violations == 0)
					os << "first violation k_tilde=" << k << " delta=" << i << "/1000 "
					   << r.chart_violations.front() << " ";
				violations++;
			}
		}
	os << "cases=" << checked << " violations=" << violations;
	out.push_back({"conditions.chart", violations == 0, os.str()});

	ConditionReport top = check_conditions_from_power(Rational(191, 199));
	out.push_back({"conditions.q=191/199", top.all_hold, "all seven hold at q=191/199"});
	ConditionReport mid = check_conditions_from_power(Rational(139, 149));
	bool ok = !mid.holds[kCond4p] && mid.holds[kCond3p];
	out.push_back({"conditions.q=139/149", ok, "(4') fails and (3') holds at q=139/149"});
}

static void lemma3(const VerifyOptions &, std::vector<CheckLine> &out)
{
	std::uint64_t checked = 0;
	bool pass = true;
	std::ostringstream os;
	for (long i = 1; i <= 999; i++) {
		Rational delta(i, 1000);
		if (!(delta > Rational(80, 89)))
			continue;
		for (unsigned n = 0; n <= 10; n++) {
			checked++;
			if (!lemma3_gap_checks(n, delta).pass && pass) {
				pass = false;
				os << "fails at delta=" << delta << " n=" << n << " ";
			}
		}
	}
	os << "cases=" << checked;
	out.push_back({"lemma3.above_80/89", pass, os.str()});

	bool sharp = true;
	for (unsigned n = 0; n <= 10; n++)
		sharp = sharp && !lemma3_gap_checks(n, Rational(79, 89)).pass;
	out.push_back({"lemma3.sharp_79/89", sharp, "some inequality fails at delta=79/89 for n<=10"});
}

static void delta(const VerifyOptions &opt, std::vector<CheckLine> &out)
{
	bool pass = true;
	std::ostringstream os;
	for (std::uint64_t k = 2; k <= opt.delta_hi; k++) {
		Rational d = choose_delta(k);
		if (!(pow(d, k - 1) > Rational(190, 199)) || !check_delta_conditions(k, d).all_hold) {
			pass = false;
			os << "fails at k_tilde=" << k << " ";
			break;
		}
	}
	os << "k_tilde=2.." << opt.delta_hi;
	out.push_back({"delta.certificate", pass, os.str()});
}

static void sections(const VerifyOptions &opt, std::vector<CheckLine> &out)
{
	std::vector<SectionPlan> plans;
	try {
		plans = build_sections(opt.levels);
	} catch (const ConstructionError &e) {
		out.push_back({"sections.build", false, e.what()});
		return;
	}
	for (const auto &p : plans) {
		SectionCheck c = check_section(p, p.section_end());
		std::ostringstream os;
		os << "i_n=" << p.i_n << " k=" << p.k_count << " k_tilde=" << p.k_tilde
		   << " gaps_checked=" << c.gaps_checked << " a_n~" << p.a_n.hi().to_double();
		if (!c.pass)
			os << " " << c.detail;
		out.push_back({"sections.level" + std::to_string(p.n), c.pass, os.str()});
	}
}

static void counting(const VerifyOptions &, std::vector<CheckLine> &out)
{
	bool pass = true;
	std::ostringstream os;
	for (std::uint64_t k = 1; k <= 20; k++) {
		auto r = counting_bound(k);
		if (!r) {
			pass = false;
			os << "no bound for k=" << k << " ";
			continue;
		}
		for (std::uint64_t n = r->n; 20 * n <= 1000; n++)
			if (!counting_predicate(20 * n, k)) {
				pass = false;
				os << "predicate drops at k=" << k << " k_tilde=" << 20 * n << " ";
				break;
			}
		if (k == 1 || k == 20)
			os << "k=" << k << ":n=" << r->n << " ";
	}
	os << "k=1..20 k_tilde<=1000";
	out.push_back({"counting.bound", pass, os.str()});
}

static GridSet mixed_gridset()
{
	return GridSet({{1, Column::finite({3, 5, 6})}, {2, Column::cofinite_except({4})}},
	               Fill::empty, Tail::repeat);
}

static void witness(const VerifyOptions &, std::vector<CheckLine> &out)
{
	std::vector<SectionPlan> plans = build_sections(1);
	const SectionPlan &p = plans[0];
	const std::pair<const char *, GridSet> sets[] = {
		{"empty", GridSet::empty()}, {"full", GridSet::full()}, {"mixed", mixed_gridset()}};
	for (std::uint64_t j : {std::uint64_t(1), p.k_tilde})
		for (const auto &[name, g] : sets) {
			WitnessIfs w = witness_ifs_for_distorted_cantor(p, j, tau(g, 1), p.i_n + 4 - p.lead_zeros());
			WitnessCheck c = check_witness(w);
			bool strict = true;
			try {
				witness_system(w);
			} catch (const std::invalid_argument &) {
				strict = false;
			}
			std::ostringstream os;
			os << "depth=" << w.depth << " " << c.detail << " max_ratio=" << c.max_ratio;
			out.push_back({"witness.j=" + std::to_string(j) + "." + name, c.pass && strict, os.str()});
		}
}

static void lemma2(const VerifyOptions &opt, std::vector<CheckLine> &out)
{
	Lemma2Config cfg;
	cfg.random = opt.random;
	cfg.seed = opt.seed;
	cfg.exhaustive = opt.exhaustive;
	Lemma2Report r = verify_lemma2(cfg);
	std::string detail = r.detail + " seed=" + std::to_string(opt.seed);
	if (r.counterexample)
		detail += " counterexample: " + format_gridset(*r.counterexample);
	out.push_back({"lemma2.preimage", r.pass, detail});
}

static const std::vector<std::pair<std::string, Suite>> &suites()
{
	static const std::vector<std::pair<std::string, Suite>> s = {
		{"remark2", [](auto &o, auto &v) { remark2(o, v); chain(o, v); }},
		{"property1", property1},
		{"chain", chain},
		{"conditions", conditions},
		{"lemma3", lemma3},
		{"delta", delta},
		{"sections", sections},
		{"counting", counting},
		{"witness", witness},
		{"lemma2", lemma2},
	};
	return s;
}

const std::vector<std::string> &verify_suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto &[n, s] : suites())
			v.push_back(n);
		v.push_back("all");
		return v;
	}();
	return names;
}

std::vector<CheckLine> run_verify_suite(const std::string &suite, const VerifyOptions &opt)
{
	std::vector<CheckLine> out;
	for (const auto &[name, run] : suites()) {
		if (suite == "all") {
			if (name != "chain")
				run(opt, out);
		} else if (suite == name) {
			run(opt, out);
			return out;
		}
	}
	if (suite != "all")
		throw std::invalid_argument("unknown verify suite '" + suite + "'");
	return out;
}

std::string format_check_line(const CheckLine &c)
{
	return c.name + " " + (c.pass ? "PASS" : "FAIL") + " " + c.detail;
}

} // namespace hyperfrac
