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
 * @file lang.hpp
 *
 * Finite step-sequence languages and the (g-)comtrace languages they
 * generate. Stars are truncated at a factor bound n, i.e. the union of
 * L^0 ... L^n.
 */

#ifndef COMTRACE_LANG_HPP
#define COMTRACE_LANG_HPP

#include <comtrace/congruence.hpp>

#include <map>
#include <set>

namespace ct {

	inline constexpr std::size_t kDefaultLanguageCap = 100000;

	using Language = std::set< StepSeq >;

	/** A set of classes, keyed by their least member under vector order. */
	class GcLanguage {

		public:

			void insert( const ClassSet &cls );

			std::size_t size() const noexcept { return classes_.size(); }

			bool contains_class( const ClassSet &cls ) const;

			/** Some class of the language holds s. */
			bool covers( const StepSeq &s ) const;

			/** Every class of this language is a class of other. */
			bool subset_of( const GcLanguage &other ) const;

			const std::map< StepSeq, ClassSet > & classes() const noexcept { return classes_; }

			bool operator==( const GcLanguage &other ) const;

		private:

			std::map< StepSeq, ClassSet > classes_;
	};

	/** [L] */
	GcLanguage lift( const Alphabet &alphabet, const Language &l, std::size_t cap = kDefaultClassCap );

	/** Union of all classes of the language. */
	Language flatten( const GcLanguage &g );

	Language concat( const Language &a, const Language &b, std::size_t cap = kDefaultLanguageCap );

	GcLanguage concat( const Alphabet &alphabet, const GcLanguage &a, const GcLanguage &b, std::size_t cap = kDefaultClassCap );

	Language unite( const Language &a, const Language &b );

	GcLanguage unite( const GcLanguage &a, const GcLanguage &b );

	/** L^0 u ... u L^n; BoundExceeded past cap words. */
	Language star( const Language &l, std::size_t n, std::size_t cap = kDefaultLanguageCap );

	GcLanguage star( const Alphabet &alphabet, const GcLanguage &g, std::size_t n, std::size_t cap = kDefaultClassCap );

	/** All step-level prefixes, lambda included. */
	Language prefix_closure( const Language &l );

	/** ({a,b,c}, sim {a~c}, ser {(c,a)}). */
	Alphabet priority_alphabet();

	/** Prefixes of words of ({c}* u {a}{b} u {a,c}{b})* with at most bound steps. */
	Language priority_language( std::size_t bound );

} // namespace ct

#endif
