/*
 *   Copyright 2026 comtrace contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file sostruct.hpp
 *
 * Stratified order structures (X, prec, wc):
 *   S1  wc irreflexive
 *   S2  prec within wc
 *   S3  a wc b wc c and a != c imply a wc c
 *   S4  a wc b prec c or a prec b wc c imply a prec c
 *
 * Points are opaque names; structures built from step sequences use
 * occurrence names such as `a.1`.
 */

#ifndef COMTRACE_SOSTRUCT_HPP
#define COMTRACE_SOSTRUCT_HPP

#include <comtrace/congruence.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ct {

	struct SoStructure {
		std::vector< std::string > points;
		Relation prec;
		Relation wc;

		bool operator==( const SoStructure &other ) const noexcept {
			return points == other.points && prec == other.prec && wc == other.wc;
		}
	};

	/** First violated axiom with its witness, or nothing. */
	std::optional< std::string > so_violation( const Relation &prec, const Relation &wc, const std::vector< std::string > &points );

	/** AxiomViolation on failure. */
	SoStructure validate_so( std::vector< std::string > points, Relation prec, Relation wc );

	/** Structure file with `carrier:`, `prec:` and `wc:` lines. */
	SoStructure parse_so_text( std::string_view text );

	/** The local invariants of s before closure. */
	RelStructure so_local_invariants( const Alphabet &alphabet, const StepSeq &s );

	/** Diamond closure of the local invariants; InlNotEmpty for g-comtrace alphabets. */
	SoStructure so_of_stepseq( const Alphabet &alphabet, const StepSeq &s );

	/** (X, intersection of orders, intersection of weak orders) over the class. */
	SoStructure so_of_class( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/** Stratified orders with prec inside the order and wc inside its weak form. */
	std::vector< Relation > extensions_so( const SoStructure &so, std::size_t cap = kDefaultCarrierCap );

	/**
	 * sim_S: incomparable under prec.
	 * ser_S: incomparable under prec and not (b wc a).
	 * Events follow the point order.
	 */
	Alphabet alphabet_of_so( const SoStructure &so );

	/** (X, order minus ser_S, weak order minus ser_S^-1). */
	SoStructure so_of_extension( const SoStructure &so, const Alphabet &theta, const Relation &order );

	struct ComtraceOfSo {
		Alphabet theta;
		ClassSet cls;
	};

	/**
	 * {Omega of every extension} over the derived alphabet. Checks that it
	 * equals the enumerated class of any member and that each extension
	 * reproduces so; InvariantBroken otherwise.
	 */
	ComtraceOfSo comtrace_of_so( const SoStructure &so, std::size_t carrier_cap = kDefaultCarrierCap, std::size_t class_cap = kDefaultClassCap );

	/**
	 * Pairs seen in both orders are simultaneous in some member.
	 * Returns the first violating pair, if any.
	 */
	std::optional< Pair > pi3_witness( const std::vector< Relation > &orders );

	bool pi3_check( const std::vector< Relation > &orders );

} // namespace ct

#endif
