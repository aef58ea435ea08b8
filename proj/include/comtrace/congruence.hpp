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
 * @file congruence.hpp
 *
 * The one-step rewrites generated by
 *   EQ1  A = BC   when B u C = A, B n C = {}, B x C within ser
 *   EQ2  AB = BA  when A x B within inl
 * and the equivalence classes they span.
 */

#ifndef COMTRACE_CONGRUENCE_HPP
#define COMTRACE_CONGRUENCE_HPP

#include <comtrace/stepseq.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ct {

	inline constexpr std::size_t kDefaultClassCap = 100000;

	/** Every t reachable from s by one rewrite in either direction, sorted. */
	std::vector< StepSeq > rewrite_neighbors( const Alphabet &alphabet, const StepSeq &s );

	/**
	 * A materialized (g-)comtrace. Members are ordered by their rendered
	 * text; the representative is the first of them.
	 */
	class ClassSet {

		public:

			ClassSet() = default;

			ClassSet( const Alphabet &alphabet, std::vector< StepSeq > members );

			const std::vector< StepSeq > & members() const noexcept { return members_; }

			const std::vector< std::string > & texts() const noexcept { return texts_; }

			const StepSeq & representative() const { return members_.front(); }

			std::size_t size() const noexcept { return members_.size(); }

			bool contains( const StepSeq &s ) const;

			bool operator==( const ClassSet &other ) const noexcept { return members_ == other.members_; }

		private:

			std::vector< StepSeq > members_;
			std::vector< std::string > texts_;
			std::vector< StepSeq > sorted_;
	};

	/** Breadth-first closure of rewrite_neighbors; ClassCapExceeded past cap members. */
	ClassSet enumerate_class( const Alphabet &alphabet, const StepSeq &s, std::size_t cap = kDefaultClassCap );

	/**
	 * s and t are congruent. Differing event counts answer false at once;
	 * when inl is empty the canonical forms are compared, otherwise the
	 * class of s is enumerated.
	 */
	bool equivalent( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, std::size_t cap = kDefaultClassCap );

	/** Membership of t in the enumerated class of s; no shortcut. */
	bool equivalent_by_class( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, std::size_t cap = kDefaultClassCap );

	/** [s] composed with [t], i.e. the class of st. */
	ClassSet compose_classes( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, std::size_t cap = kDefaultClassCap );

	/**
	 * Memo of enumerated classes over one alphabet. Every member of an
	 * enumerated class maps to the shared ClassSet. Not thread-safe.
	 */
	class ClassCache {

		public:

			ClassCache( const Alphabet &alphabet, std::size_t cap = kDefaultClassCap ) :
				alphabet_( alphabet ), cap_( cap )
			{}

			const ClassSet & get( const StepSeq &s );

			const Alphabet & alphabet() const noexcept { return alphabet_; }

			std::size_t cap() const noexcept { return cap_; }

		private:

			const Alphabet &alphabet_;
			std::size_t cap_;
			std::map< StepSeq, std::shared_ptr< const ClassSet > > memo_;
	};

} // namespace ct

#endif
