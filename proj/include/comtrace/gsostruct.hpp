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
 * @file gsostruct.hpp
 *
 * Generalized stratified order structures (X, cmt, wc): wc irreflexive,
 * cmt symmetric and irreflexive, and (X, cmt n wc, wc) a so-structure.
 */

#ifndef COMTRACE_GSOSTRUCT_HPP
#define COMTRACE_GSOSTRUCT_HPP

#include <comtrace/sostruct.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ct {

	struct GsoStructure {
		std::vector< std::string > points;
		/** never simultaneous */
		Relation cmt;
		/** not later than */
		Relation wc;

		bool operator==( const GsoStructure &other ) const noexcept {
			return points == other.points && cmt == other.cmt && wc == other.wc;
		}
	};

	std::optional< std::string > gso_violation( const Relation &cmt, const Relation &wc, const std::vector< std::string > &points );

	GsoStructure validate_gso( std::vector< std::string > points, Relation cmt, Relation wc );

	/** Structure file with `carrier:`, `cmt:` and `wc:` lines; cmt is symmetrized. */
	GsoStructure parse_gso_text( std::string_view text );

	/** (X, sym(prec), wc) for a so-structure. */
	GsoStructure gso_of_so( const SoStructure &so );

	struct InvariantTriple {
		Relation cmt;
		Relation wc;
		Relation prec;
	};

	/** The three local invariants of s, term by term. */
	InvariantTriple invariant_relations( const Alphabet &alphabet, const StepSeq &s );

	/** Bowtie closure of (prec u cmt, prec u wc). */
	GsoStructure gso_of_stepseq( const Alphabet &alphabet, const StepSeq &s );

	/** (X, intersection of sym(order), intersection of weak orders) over the class. */
	GsoStructure gso_of_class( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/** Stratified orders separating cmt pairs and respecting wc weakly. */
	std::vector< Relation > extensions_gso( const GsoStructure &g, std::size_t cap = kDefaultCarrierCap );

	/**
	 * sim_G: not cmt.
	 * ser_G: not cmt and not (b wc a).
	 * inl_G: cmt and unrelated by wc.
	 */
	Alphabet alphabet_of_gso( const GsoStructure &g );

	/** (X, sym(order minus ser_G) u inl_G, weak order minus (ser_G^-1 u inl_G)). */
	GsoStructure gso_of_extension( const GsoStructure &g, const Alphabet &theta, const Relation &order );

	struct GcomtraceOfGso {
		Alphabet theta;
		ClassSet cls;
	};

	/** {Omega of every extension}; same checks as the comtrace case. */
	GcomtraceOfGso gcomtrace_of_gso( const GsoStructure &g, std::size_t carrier_cap = kDefaultCarrierCap, std::size_t class_cap = kDefaultClassCap );

	inline constexpr std::size_t kSemicanMinsCap = 20;

	/**
	 * Builds the <lex-least member step by step from a structure induced by
	 * a step sequence. labels maps points to events of alphabet, whose
	 * index order is <E. EmptyZ if no admissible stratum exists.
	 */
	StepSeq semican( const GsoStructure &g, const std::vector< std::size_t > &labels, const Alphabet &alphabet );

	struct Serializability {
		/** least B containing a with A = (A\B)B */
		Step left = 0;
		/** least C containing a with A = C(A\C) */
		Step right = 0;
		/** non-serializable D containing a with A = xDy */
		Step core = 0;
		StepSeq left_witness;
		StepSeq right_witness;
		StepSeq core_witness;
		/** all three witnesses lie in the class of A */
		bool verified = false;
	};

	Serializability step_serializability( const Alphabet &alphabet, Step a, std::size_t event );

} // namespace ct

#endif
