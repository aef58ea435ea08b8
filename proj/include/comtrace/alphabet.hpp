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
 * @file alphabet.hpp
 *
 * Trace, comtrace and g-comtrace alphabets (E, sim, ser, inl).
 *
 * Events are indexed 0..n-1 in the order <E (lexicographic on names unless
 * an explicit order is given). A step is a bit mask over event indices, so
 * an alphabet holds at most 64 events.
 */

#ifndef COMTRACE_ALPHABET_HPP
#define COMTRACE_ALPHABET_HPP

#include <comtrace/structio.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ct {

	using Step = std::uint64_t;

	inline constexpr std::size_t kMaxEvents = 64;

	inline constexpr std::size_t kDefaultUniverseCap = std::size_t( 1 ) << 16;

	inline constexpr Step bit( const std::size_t i ) noexcept { return Step( 1 ) << i; }

	/** Raw alphabet description; sim and inl are symmetrized on validation. */
	struct AlphabetSpec {
		std::vector< std::string > events;
		std::vector< NamePair > sim;
		std::vector< NamePair > ser;
		std::vector< NamePair > inl;
	};

	AlphabetSpec parse_alphabet_text( std::string_view text );

	class Alphabet {

		public:

			std::size_t size() const noexcept { return names_.size(); }

			const std::vector< std::string > & events() const noexcept { return names_; }

			const std::string & name( std::size_t e ) const { return names_[ e ]; }

			std::optional< std::size_t > find( std::string_view name ) const;

			/** Rows of the relations as event masks. */
			Step sim_row( std::size_t e ) const noexcept { return sim_[ e ]; }
			Step ser_row( std::size_t e ) const noexcept { return ser_[ e ]; }
			Step inl_row( std::size_t e ) const noexcept { return inl_[ e ]; }

			bool sim( std::size_t a, std::size_t b ) const noexcept { return ( sim_[ a ] >> b ) & 1u; }
			bool ser( std::size_t a, std::size_t b ) const noexcept { return ( ser_[ a ] >> b ) & 1u; }
			bool inl( std::size_t a, std::size_t b ) const noexcept { return ( inl_[ a ] >> b ) & 1u; }

			/** A x B within ser. */
			bool ser_product( Step a, Step b ) const noexcept;

			/** A x B within inl. */
			bool inl_product( Step a, Step b ) const noexcept;

			/** Nonempty sim-clique of known events; no universe is materialized. */
			bool is_step( Step s ) const noexcept;

			Step all_events() const noexcept;

			bool has_inl() const noexcept;

			/** inl empty and sim = ser. */
			bool is_lifted_trace() const noexcept;

			/** Back to a description with symmetric pairs listed once. */
			AlphabetSpec to_spec() const;

			bool operator==( const Alphabet &other ) const noexcept {
				return names_ == other.names_ && sim_ == other.sim_ && ser_ == other.ser_ && inl_ == other.inl_;
			}

		private:

			friend Alphabet validate_alphabet( const AlphabetSpec &, const std::vector< std::string > * );

			std::vector< std::string > names_;
			std::vector< Step > sim_;
			std::vector< Step > ser_;
			std::vector< Step > inl_;
	};

	/**
	 * Validates a description. The optional order fixes <E; it must be a
	 * permutation of the events. Raises the first violated invariant.
	 */
	Alphabet validate_alphabet( const AlphabetSpec &raw, const std::vector< std::string > *order = nullptr );

	/** Every nonempty sim-clique, by size then lexicographically. */
	std::vector< Step > steps_universe( const Alphabet &alphabet, std::size_t cap = kDefaultUniverseCap );

	struct DerivedRelations {
		/** ser n ser^-1, as rows */
		std::vector< Step > ind;
		/** sim minus (ser u ser^-1), as rows */
		std::vector< Step > syn;
		/** nonempty steps whose distinct pairs all lie in syn */
		std::vector< Step > syn_steps;
	};

	DerivedRelations derived_relations( const Alphabet &alphabet );

	/** (events, ind, ind, empty); ind pairs are symmetrized. */
	Alphabet lift_trace_alphabet( const std::vector< std::string > &events, const std::vector< NamePair > &ind );

	/** Members of a step in <E order. */
	std::vector< std::size_t > step_members( Step s );

	/** Least member under <E; s must be nonempty. */
	std::size_t step_min( Step s ) noexcept;

	std::size_t step_size( Step s ) noexcept;

} // namespace ct

#endif
