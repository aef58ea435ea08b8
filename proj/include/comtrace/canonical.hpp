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
 * @file canonical.hpp
 *
 * Step order <st and its lexicographic lift <lex, forward dependency,
 * canonical forms for comtraces, GMC and MC predicates, g-canonical forms
 * and the Foata form of traces.
 */

#ifndef COMTRACE_CANONICAL_HPP
#define COMTRACE_CANONICAL_HPP

#include <comtrace/congruence.hpp>

#include <compare>
#include <optional>
#include <vector>

namespace ct {

	/**
	 * A <st B iff |A| > |B|, or |A| = |B| and min(A\B) <E min(B\A).
	 */
	std::strong_ordering compare_steps( Step a, Step b ) noexcept;

	/** Lexicographic lift of <st; a proper prefix is smaller. */
	std::strong_ordering compare_lex( const StepSeq &s, const StepSeq &t ) noexcept;

	enum class CompareMode { step, lex };

	/** Step mode compares the first steps only; both must be single steps. */
	std::strong_ordering compare( const StepSeq &s, const StepSeq &t, CompareMode mode );

	/** A sub-step C of B with A x C and C x (B\C) within ser. */
	struct FdWitness {
		Step a = 0;
		Step b = 0;
		Step c = 0;
	};

	/**
	 * Forward dependency of the adjacent pair (A, B). Among valid witnesses
	 * the <st-least one is returned (largest, then <E-least difference).
	 * InlNotEmpty for g-comtrace alphabets.
	 */
	std::optional< FdWitness > forward_dependent( const Alphabet &alphabet, Step a, Step b );

	bool is_canonical( const Alphabet &alphabet, const StepSeq &s );

	/**
	 * The canonical member of [s] by local rewriting: while some adjacent
	 * pair is forward dependent, move the witness of the leftmost one into
	 * the earlier step.
	 */
	StepSeq canonicalize( const Alphabet &alphabet, const StepSeq &s );

	/** The canonical member found by filtering the enumerated class. */
	StepSeq canonicalize_by_class( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/** Size of the largest first step over the class of s (0 for lambda). */
	std::size_t max_first_step( ClassCache &cache, const StepSeq &s );

	bool is_gmc( ClassCache &cache, const StepSeq &s );

	bool is_gmc( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/** Smallest 1-based i whose step is maximally concurrent in s. */
	std::size_t mc_index( ClassCache &cache, const StepSeq &s );

	bool is_mc( ClassCache &cache, const StepSeq &s );

	bool is_mc( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/** The <lex-least member of [s]. */
	StepSeq g_canonical( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	StepSeq lex_min( const std::vector< StepSeq > &members );

	struct FoataForm {
		/** maximal fully commutative blocks of the input, in order */
		std::vector< Word > decomposition;
		/** the Foata normal form of the trace, blocks sorted by <E */
		std::vector< Word > foata;
		/** st(x1)...st(xk) of the input decomposition */
		StepSeq max_steps;
	};

	/** NotTraceAlphabet unless inl is empty and sim = ser. */
	FoataForm foata_trace( const Alphabet &alphabet, const Word &x );

	/**
	 * GMC-form of a word: the maximal decomposition with every letter of a
	 * block dependent on some distinct letter of the previous block.
	 */
	bool is_trace_gmc( const Alphabet &alphabet, const Word &x );

} // namespace ct

#endif
