/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The hyperfrac Authors
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfrac/cantor_addressing.hpp"

namespace hyperfrac {

/* Raised when the inductive construction breaks one of its own invariants. */
struct ConstructionError : std::logic_error {
	using std::logic_error::logic_error;
};

struct Lemma3Report {
	bool pass;
	bool first;   // delta * 8/10^(n+1) > 8/10^(n+2)
	bool second;  // 8/10^(n+1) < delta * (8/10^(n+1) + 9/10^(n+2))
	Rational first_lhs, first_rhs, second_lhs, second_rhs;
};

Lemma3Report lemma3_gap_checks(unsigned n, const Rational &delta);

/* The seven conditions on q = delta^(k-1) and r = delta^(k-2), with the
 * interval length cancelled:
 *
 *   (1)  q > 80/89
 *   (2)  0.9 r > 1 - q
 *   (2') 0.9 q > (1 - q)/2
 *   (3)  0.9 r - (1 - q) > 0.8
 *   (3') 0.9 q - (1 - q)/2 > 0.8
 *   (4)  0.9 < 0.9 r - (1 - q) + 0.09 q
 *   (4') 0.9 < 0.9 q - (1 - q)/2 + 0.09 q
 *
 * Every left side is increasing in q and r. */
enum Condition { kCond1, kCond2, kCond2p, kCond3, kCond3p, kCond4, kCond4p, kNumConditions };

const char *condition_name(Condition c);

/* Slack of a condition: positive iff it holds. */
Rational condition_slack(Condition c, const Rational &q, const Rational &r);

struct ConditionReport {
	Rational q, r;
	std::array<bool, kNumConditions> holds;
	bool all_hold;
	/* the threshold chart:
	 *   (1) => (2), (2');  q > 10/19 => (2);  (2') <=> q > 5/14;
	 *   q > 18/19 => (3);  (3') <=> q > 13/14;
	 *   q > 190/199 => (4);  (4') <=> q > 140/149 */
	bool chart_holds;
	std::vector<std::string> chart_violations;
};

ConditionReport check_conditions(const Rational &q, const Rational &r);

/* q and r from delta by exact powers. */
ConditionReport check_delta_conditions(std::uint64_t k_tilde, const Rational &delta);

/* Only q known: r >= q, so passing at r = q is conclusive. */
ConditionReport check_conditions_from_power(const Rational &q);

enum class Certainty { pass, fail, unknown };

/* Three-valued version over enclosures of q and r. */
std::array<Certainty, kNumConditions> certify_conditions(const Enclosure &q, const Enclosure &r);

/* 1 - 9/(398 (k_tilde - 1)); Bernoulli gives delta^(k_tilde-1) >= 389/398. */
Rational choose_delta(std::uint64_t k_tilde);

struct SectionPlan {
	unsigned n;
	unsigned i_n;
	std::uint64_t k_count;
	std::uint64_t k_tilde;
	Rational delta;
	Enclosure eps;
	Enclosure a_prev;      // a_{n-1}
	Enclosure a_prev_sum;  // a_0 + ... + a_{n-1}: left end of the section
	Enclosure a_n;
	Rational interval;     // |I| = 10^-(i_n - 1)

	unsigned lead_zeros() const { return i_n - 1; }
	Enclosure delta_power(std::uint64_t e) const;
	/* left end of C_n^j */
	Enclosure offset(std::uint64_t j) const;
	Enclosure member_mid(std::uint64_t j) const;
	Enclosure section_end() const { return a_prev_sum + a_n; }
};

/* Walks j = 1..k_tilde computing delta^(j-1), offset and midpoint
 * incrementally. */
class MemberCursor {
public:
	explicit MemberCursor(const SectionPlan &plan);

	std::uint64_t j() const { return j_; }
	bool done() const { return j_ > plan_.k_tilde; }
	const Enclosure &power() const { return pw_; }
	const Enclosure &offset() const { return offset_; }
	Enclosure mid() const;
	void next();

private:
	const SectionPlan &plan_;
	std::uint64_t j_ = 1;
	Enclosure delta_, pw_, offset_, step_;
};

constexpr unsigned kMaxLevels = 6;

/* Number of depth-i construction intervals of C_{n-1}: the 2^(i-1) of C_0
 * plus 2^(i - i_l) for each of the k_tilde_l expanded members of level l. */
std::uint64_t construction_count(unsigned i, const std::vector<SectionPlan> &earlier);

std::vector<SectionPlan> build_sections(unsigned levels);

std::string format_plan(const std::vector<SectionPlan> &plans);

struct SectionCheck {
	bool pass;
	bool halving;         // a_n <= a_{n-1}/2
	bool conditions;      // all seven certified
	bool member_gaps;     // worst-case expanded gaps >= the (2) bound > 0
	bool trailing_gap;    // gap behind the section > 0.8 |I|
	bool count_bound;     // 1.9 k |I| < eps
	std::uint64_t gaps_checked;
	std::string detail;
};

constexpr std::uint64_t kEnumerateGapsUpTo = std::uint64_t(1) << 20;

/* next_start is where the following section begins. */
SectionCheck check_section(const SectionPlan &plan, const Enclosure &next_start);

struct CountingResult {
	std::uint64_t n;
	std::uint64_t k_tilde;
	std::uint64_t rhs;  // ceil(K/2) + ceil(K/5) + k
};

bool counting_predicate(std::uint64_t K, std::uint64_t k);

/* Least n with the predicate at K = k_count * 5 * n. */
std::optional<CountingResult> counting_bound(std::uint64_t k, std::uint64_t k_count = 4,
                                             std::uint64_t n_max = 1'000'000);

/* Least built level whose k_tilde satisfies the predicate. */
std::optional<CountingResult> counting_bound(std::uint64_t k, const std::vector<SectionPlan> &plans);

struct WeakStepReport {
	bool pass;
	std::string rejected;  // precondition failure, empty otherwise
	Rational lhs, middle, rhs;
};

/* The chain sum_l (d_{x|l} - d_{y|l}) delta^((j-1)(1-tau_l)) >=
 * [same with exponent j off row m] + (d_{x|m} - d_{y|m}) delta^(j-1) >
 * [same] + (d_{x|m} - d_{y|m}) delta^j, for x >lex y of equal length. */
WeakStepReport weak_step_inequality(const BitStream &tau, const Rational &delta,
                                    std::uint64_t j, const BitWord &x, const BitWord &y,
                                    unsigned m);

} // namespace hyperfrac
