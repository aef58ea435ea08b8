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
 * @file oracle.hpp
 *
 * Brute-force reference implementations used to check the library.
 * Nothing here calls into the rewriting, closure or extension code
 * under test; only the alphabet accessors and plain value types.
 */

#ifndef COMTRACE_TESTS_ORACLE_HPP
#define COMTRACE_TESTS_ORACLE_HPP

#include <comtrace/stepseq.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

	using PairSet = std::set< std::vector< ct::Pair > >;

	/** Every nonempty subset whose members are pairwise sim. */
	std::vector< ct::Step > cliques( const ct::Alphabet &theta );

	/** t rewrites to u in one split or one inl swap. */
	bool one_step( const ct::Alphabet &theta, const ct::StepSeq &t, const ct::StepSeq &u );

	/** All step sequences with the same event counts as s. */
	std::vector< ct::StepSeq > same_counts( const ct::Alphabet &theta, const ct::StepSeq &s );

	/** Connected component of s under one_step in either direction. */
	std::set< ct::StepSeq > brute_class( const ct::Alphabet &theta, const ct::StepSeq &s );

	/** (event, index) -> 1-based step position */
	using Positions = std::map< std::pair< std::size_t, std::size_t >, std::size_t >;

	Positions positions( const ct::StepSeq &s );

	/** Occurrences of s sorted by (event, index). */
	std::vector< std::pair< std::size_t, std::size_t > > carrier( const ct::StepSeq &s );

	struct Positional {
		ct::Relation always_before;    // pos < pos in every member
		ct::Relation never_after;      // distinct, pos <= pos in every member
		ct::Relation always_apart;     // pos != pos in every member
	};

	Positional positional( const std::vector< ct::StepSeq > &members );

	/** Stratified order of a step sequence over its sorted carrier. */
	ct::Relation order( const ct::StepSeq &s );

	/** All stratified orders on n points, via surjections onto 0..k-1. */
	std::vector< ct::Relation > stratified_orders( std::size_t n );

	std::vector< ct::Relation > total_orders( std::size_t n );

	/** All strict partial orders on n points. */
	std::vector< ct::Relation > posets( std::size_t n );

	bool is_stratified( const ct::Relation &r );

	/** Step order on name lists: larger first, then least differing name. */
	bool step_less( const std::vector< std::string > &a, const std::vector< std::string > &b );

	bool lex_less( const ct::Alphabet &theta, const ct::StepSeq &s, const ct::StepSeq &t );

	ct::StepSeq lex_min( const ct::Alphabet &theta, const std::vector< ct::StepSeq > &members );

	PairSet as_set( const std::vector< ct::Relation > &rels );

	/** Brute transitive closure by repeated squaring of the pair set. */
	ct::Relation closure( const ct::Relation &r, bool reflexive );

} // namespace oracle

#endif
