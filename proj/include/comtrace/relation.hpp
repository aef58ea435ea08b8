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
 * @file relation.hpp
 *
 * Finite binary relations over an indexed carrier {0, ..., n-1}, the
 * closure operators built on them, order classification and extension
 * enumeration.
 *
 * Storage is a dense bit matrix. Iteration over pairs is row-major, so
 * every listing is deterministic.
 */

#ifndef COMTRACE_RELATION_HPP
#define COMTRACE_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ct {

	using Pair = std::pair< std::size_t, std::size_t >;

	class Relation {

		public:

			Relation() = default;

			explicit Relation( std::size_t n );

			static Relation identity( std::size_t n );

			static Relation full( std::size_t n );

			static Relation from_pairs( std::size_t n, const std::vector< Pair > &pairs );

			std::size_t size() const noexcept { return n_; }

			bool test( std::size_t i, std::size_t j ) const noexcept {
				return ( bits_[ i * w_ + ( j >> 6 ) ] >> ( j & 63 ) ) & 1u;
			}

			void set( std::size_t i, std::size_t j ) noexcept {
				bits_[ i * w_ + ( j >> 6 ) ] |= std::uint64_t( 1 ) << ( j & 63 );
			}

			void reset( std::size_t i, std::size_t j ) noexcept {
				bits_[ i * w_ + ( j >> 6 ) ] &= ~( std::uint64_t( 1 ) << ( j & 63 ) );
			}

			bool empty() const noexcept;

			std::size_t count() const noexcept;

			/** All pairs, sorted row-major. */
			std::vector< Pair > pairs() const;

			/** Successors of i, ascending. */
			std::vector< std::size_t > successors( std::size_t i ) const;

			/**
			 * Row i as a 64-bit mask.
			 * Only valid when size() <= 64.
			 */
			std::uint64_t row_mask( std::size_t i ) const noexcept { return bits_[ i * w_ ]; }

			/** Column j as a 64-bit mask; size() <= 64 only. */
			std::uint64_t column_mask( std::size_t j ) const noexcept;

			Relation inverse() const;

			bool subset_of( const Relation &other ) const noexcept;

			bool irreflexive() const noexcept;

			bool symmetric() const noexcept;

			bool transitive() const;

			Relation & operator|=( const Relation &other ) noexcept;
			Relation & operator&=( const Relation &other ) noexcept;
			Relation & operator-=( const Relation &other ) noexcept;

			friend Relation operator|( Relation a, const Relation &b ) { return a |= b; }
			friend Relation operator&( Relation a, const Relation &b ) { return a &= b; }
			friend Relation operator-( Relation a, const Relation &b ) { return a -= b; }

			bool operator==( const Relation &other ) const noexcept {
				return n_ == other.n_ && bits_ == other.bits_;
			}

			/** Row dst |= row src_row of src; both relations share size(). */
			void or_row( std::size_t dst, const Relation &src, std::size_t src_row ) noexcept;

		private:

			std::size_t n_ = 0;
			std::size_t w_ = 0;
			std::vector< std::uint64_t > bits_;
	};

	/** Composition: (x,z) iff x r y and y s z for some y. */
	Relation compose( const Relation &r, const Relation &s );

	Relation transitive_closure( const Relation &r );

	Relation reflexive_transitive_closure( const Relation &r );

	/** R union its inverse. */
	Relation symmetric_closure( const Relation &r );

	/** R intersected with its inverse. */
	Relation symmetric_intersection( const Relation &r );

	/** (X x X) minus R; the diagonal is included. */
	Relation complement( const Relation &r );

	/** Hasse diagram of a strict partial order. */
	Relation transitive_reduction( const Relation &order );

	enum class RelOp {
		transitive_closure,
		reflexive_transitive,
		symmetric_closure,
		symmetric_intersection,
		complement
	};

	Relation relation_algebra( const Relation &r, RelOp op );

	enum class OrderKind { not_order, partial, stratified, total };

	const char * order_kind_name( OrderKind kind ) noexcept;

	struct OrderInfo {
		OrderKind kind = OrderKind::not_order;
		/** a and b distinct and unrelated either way */
		Relation incomparable;
		/** the order united with incomparability */
		Relation weak;
		/** incomparable or equal */
		Relation simeq;
	};

	OrderInfo classify_order( const Relation &r );

	/** Distinct and unrelated under r in both directions. */
	Relation incomparability( const Relation &r );

	/** r united with its incomparability relation. */
	Relation weak_extension( const Relation &r );

	enum class ExtKind { total, stratified };

	inline constexpr std::size_t kDefaultCarrierCap = 8;

	/**
	 * Constraints on a layering (an ordered set partition) of n <= 64 points.
	 * A point may enter a layer once its strict predecessors are placed in
	 * earlier layers and its weak predecessors are placed in earlier layers
	 * or the same layer. Conflicting points never share a layer.
	 */
	struct LayerConstraints {
		std::size_t n = 0;
		std::vector< std::uint64_t > strict_pred;
		std::vector< std::uint64_t > weak_pred;
		std::vector< std::uint64_t > conflict;
		bool singletons_only = false;
	};

	/**
	 * Visits every admissible layering, each layer given as a point mask.
	 * Enumeration order is deterministic.
	 */
	void for_each_layering(
		const LayerConstraints &constraints,
		const std::function< void( const std::vector< std::uint64_t > & ) > &visit
	);

	/** The stratified order whose strata are the given layers. */
	Relation order_from_layers( std::size_t n, const std::vector< std::uint64_t > &layers );

	/**
	 * All total or stratified extensions of a partial order.
	 * Throws CarrierTooLarge when the carrier exceeds cap.
	 */
	std::vector< Relation > extensions(
		const Relation &poset, ExtKind kind,
		std::size_t cap = kDefaultCarrierCap
	);

	Relation intersection_of( const std::vector< Relation > &rels, std::size_t n );

	/**
	 * True iff poset equals the intersection of its total extensions and
	 * also the intersection of its stratified extensions.
	 */
	bool szpilrajn_check( const Relation &poset, std::size_t cap = kDefaultCarrierCap );

	/** A relational triple (X, r1, r2) sharing one carrier. */
	struct RelStructure {
		Relation r1;
		Relation r2;

		bool operator==( const RelStructure &other ) const noexcept {
			return r1 == other.r1 && r2 == other.r2;
		}

		/** Component-wise inclusion. */
		bool subset_of( const RelStructure &other ) const noexcept {
			return r1.subset_of( other.r1 ) && r2.subset_of( other.r2 );
		}
	};

	/**
	 * prec = (r1 u r2)* ; r1 ; (r1 u r2)*
	 * wc   = (r1 u r2)* minus identity
	 */
	RelStructure diamond_closure( const Relation &r1, const Relation &r2 );

	/** The diamond closure is a so-structure iff its first component is irreflexive. */
	bool diamond_yields_so( const RelStructure &closed ) noexcept;

	/**
	 * r3 = r1 n r2*, (p, w) = diamond_closure( r3, r2 ),
	 * result = ( sym(p) u r1, w ).
	 */
	RelStructure bowtie_closure( const Relation &r1, const Relation &r2 );

} // namespace ct

#endif
