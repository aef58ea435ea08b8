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
 * @file stepseq.hpp
 *
 * Step sequences, their occurrence-enumerated form, cancellation and
 * projection, and the correspondence with finite stratified orders.
 *
 * Literal syntax: `lambda` or one or more `{e1,e2,...}` steps. Members
 * render in <E order.
 */

#ifndef COMTRACE_STEPSEQ_HPP
#define COMTRACE_STEPSEQ_HPP

#include <comtrace/alphabet.hpp>
#include <comtrace/relation.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ct {

	using StepSeq = std::vector< Step >;

	/** A plain sequence of events, used for traces. */
	using Word = std::vector< std::size_t >;

	/** Parses a literal; each step must be a step of the alphabet. */
	StepSeq parse_stepseq( const Alphabet &alphabet, std::string_view text );

	std::string render_step( const Alphabet &alphabet, Step s );

	std::string render( const Alphabet &alphabet, const StepSeq &s );

	/** x -> {x1}{x2}...{xn} */
	StepSeq lift_word( const Word &x );

	/** e^(index), index counted from 1. */
	struct Occurrence {
		std::size_t event = 0;
		std::size_t index = 0;

		bool operator==( const Occurrence & ) const = default;
	};

	/**
	 * The carrier is sorted by (event, index), which makes it identical for
	 * all step sequences with the same event counts. Positions are 1-based.
	 */
	struct EnumeratedStepSequence {
		std::vector< Occurrence > carrier;
		std::vector< std::size_t > position;
		std::vector< std::vector< std::size_t > > steps;

		std::size_t size() const noexcept { return carrier.size(); }

		std::size_t label( std::size_t i ) const noexcept { return carrier[ i ].event; }

		std::vector< std::size_t > labels() const;
	};

	EnumeratedStepSequence enumerate_occurrences( const StepSeq &s );

	/** `a.1` */
	std::string occurrence_name( const Alphabet &alphabet, const Occurrence &o );

	std::vector< std::string > occurrence_names( const Alphabet &alphabet, const EnumeratedStepSequence &en );

	using EventCounts = std::array< std::size_t, kMaxEvents >;

	struct WeightCounts {
		std::size_t weight = 0;
		EventCounts counts{};
	};

	WeightCounts weight_and_counts( const StepSeq &s );

	enum class Side { left, right };

	/**
	 * Removes the rightmost (Side::right) or leftmost (Side::left)
	 * occurrence of an event; a step that becomes empty is dropped.
	 * Absent events leave s unchanged.
	 */
	StepSeq cancel( const StepSeq &s, std::size_t event, Side side );

	/** Cancels every member of a step, event by event. */
	StepSeq cancel_step( const StepSeq &s, Step a, Side side );

	/**
	 * Cancels a step sequence: from the right, the last step goes first;
	 * from the left, the first step goes first.
	 */
	StepSeq cancel_seq( const StepSeq &s, const StepSeq &t, Side side );

	/** Intersects every step with d and drops the empty ones. */
	StepSeq project( const StepSeq &s, Step d );

	/** alpha before beta iff pos(alpha) < pos(beta). */
	Relation order_of( const EnumeratedStepSequence &en );

	Relation order_of( const StepSeq &s );

	/**
	 * Strata of a stratified order listed earliest first, each sorted.
	 * NotStratified otherwise.
	 */
	std::vector< std::vector< std::size_t > > sequence_of( const Relation &order );

	/** Maps strata of carrier points to a step sequence through labels. */
	StepSeq steps_from_strata(
		const std::vector< std::vector< std::size_t > > &strata,
		const std::vector< std::size_t > &labels
	);

	/** Renders strata with point names, e.g. `{a.1,b.1}{c.1}`. */
	std::string render_strata(
		const std::vector< std::vector< std::size_t > > &strata,
		const std::vector< std::string > &points
	);

} // namespace ct

#endif
