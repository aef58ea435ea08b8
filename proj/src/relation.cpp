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

#include <comtrace/error.hpp>
#include <comtrace/relation.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace ct {

	Relation::Relation( const std::size_t n ) :
		n_( n ), w_( ( n + 63 ) / 64 ), bits_( n * ( ( n + 63 ) / 64 ), 0 )
	{}

	Relation Relation::identity( const std::size_t n ) {
		Relation r( n );
		for( std::size_t i = 0; i < n; ++i ) {
			r.set( i, i );
		}
		return r;
	}

	Relation Relation::full( const std::size_t n ) {
		Relation r( n );
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t j = 0; j < n; ++j ) {
				r.set( i, j );
			}
		}
		return r;
	}

	Relation Relation::from_pairs( const std::size_t n, const std::vector< Pair > &pairs ) {
		Relation r( n );
		for( const auto &p : pairs ) {
			r.set( p.first, p.second );
		}
		return r;
	}

	bool Relation::empty() const noexcept {
		return std::all_of( bits_.begin(), bits_.end(), []( std::uint64_t w ) { return w == 0; } );
	}

	std::size_t Relation::count() const noexcept {
		std::size_t c = 0;
		for( const auto w : bits_ ) {
			c += static_cast< std::size_t >( std::popcount( w ) );
		}
		return c;
	}

	std::vector< Pair > Relation::pairs() const {
		std::vector< Pair > out;
		for( std::size_t i = 0; i < n_; ++i ) {
			for( std::size_t j = 0; j < n_; ++j ) {
				if( test( i, j ) ) {
					out.emplace_back( i, j );
				}
			}
		}
		return out;
	}

	std::vector< std::size_t > Relation::successors( const std::size_t i ) const {
		std::vector< std::size_t > out;
		for( std::size_t j = 0; j < n_; ++j ) {
			if( test( i, j ) ) {
				out.push_back( j );
			}
		}
		return out;
	}

	std::uint64_t Relation::column_mask( const std::size_t j ) const noexcept {
		std::uint64_t m = 0;
		for( std::size_t i = 0; i < n_; ++i ) {
			if( test( i, j ) ) {
				m |= std::uint64_t( 1 ) << i;
			}
		}
		return m;
	}

	Relation Relation::inverse() const {
		Relation r( n_ );
		for( std::size_t i = 0; i < n_; ++i ) {
			for( std::size_t j = 0; j < n_; ++j ) {
				if( test( i, j ) ) {
					r.set( j, i );
				}
			}
		}
		return r;
	}

	bool Relation::subset_of( const Relation &other ) const noexcept {
		if( n_ != other.n_ ) {
			return false;
		}
		for( std::size_t k = 0; k < bits_.size(); ++k ) {
			if( bits_[ k ] & ~other.bits_[ k ] ) {
				return false;
			}
		}
		return true;
	}

	bool Relation::irreflexive() const noexcept {
		for( std::size_t i = 0; i < n_; ++i ) {
			if( test( i, i ) ) {
				return false;
			}
		}
		return true;
	}

	bool Relation::symmetric() const noexcept {
		for( std::size_t i = 0; i < n_; ++i ) {
			for( std::size_t j = i + 1; j < n_; ++j ) {
				if( test( i, j ) != test( j, i ) ) {
					return false;
				}
			}
		}
		return true;
	}

	bool Relation::transitive() const {
		return compose( *this, *this ).subset_of( *this );
	}

	Relation & Relation::operator|=( const Relation &other ) noexcept {
		for( std::size_t k = 0; k < bits_.size(); ++k ) {
			bits_[ k ] |= other.bits_[ k ];
		}
		return *this;
	}

	Relation & Relation::operator&=( const Relation &other ) noexcept {
		for( std::size_t k = 0; k < bits_.size(); ++k ) {
			bits_[ k ] &= other.bits_[ k ];
		}
		return *this;
	}

	Relation & Relation::operator-=( const Relation &other ) noexcept {
		for( std::size_t k = 0; k < bits_.size(); ++k ) {
			bits_[ k ] &= ~other.bits_[ k ];
		}
		return *this;
	}

	void Relation::or_row( const std::size_t dst, const Relation &src, const std::size_t src_row ) noexcept {
		for( std::size_t k = 0; k < w_; ++k ) {
			bits_[ dst * w_ + k ] |= src.bits_[ src_row * w_ + k ];
		}
	}

	Relation compose( const Relation &r, const Relation &s ) {
		const std::size_t n = r.size();
		Relation out( n );
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t k = 0; k < n; ++k ) {
				if( r.test( i, k ) ) {
					out.or_row( i, s, k );
				}
			}
		}
		return out;
	}

	Relation transitive_closure( const Relation &r ) {
		Relation c = r;
		const std::size_t n = c.size();
		for( std::size_t k = 0; k < n; ++k ) {
			for( std::size_t i = 0; i < n; ++i ) {
				if( c.test( i, k ) ) {
					c.or_row( i, c, k );
				}
			}
		}
		return c;
	}

	Relation reflexive_transitive_closure( const Relation &r ) {
		return transitive_closure( r ) | Relation::identity( r.size() );
	}

	Relation symmetric_closure( const Relation &r ) {
		return r | r.inverse();
	}

	Relation symmetric_intersection( const Relation &r ) {
		return r & r.inverse();
	}

	Relation complement( const Relation &r ) {
		return Relation::full( r.size() ) - r;
	}

	Relation transitive_reduction( const Relation &order ) {
		return order - compose( order, order );
	}

	Relation relation_algebra( const Relation &r, const RelOp op ) {
		switch( op ) {
			case RelOp::transitive_closure: return transitive_closure( r );
			case RelOp::reflexive_transitive: return reflexive_transitive_closure( r );
			case RelOp::symmetric_closure: return symmetric_closure( r );
			case RelOp::symmetric_intersection: return symmetric_intersection( r );
			case RelOp::complement: return complement( r );
		}
		return r;
	}

	const char * order_kind_name( const OrderKind kind ) noexcept {
		switch( kind ) {
			case OrderKind::not_order: return "not_order";
			case OrderKind::partial: return "partial";
			case OrderKind::stratified: return "stratified";
			case OrderKind::total: return "total";
		}
		return "not_order";
	}

	Relation incomparability( const Relation &r ) {
		const std::size_t n = r.size();
		return complement( r | r.inverse() | Relation::identity( n ) );
	}

	Relation weak_extension( const Relation &r ) {
		return r | incomparability( r );
	}

	OrderInfo classify_order( const Relation &r ) {
		OrderInfo info;
		info.incomparable = incomparability( r );
		info.weak = r | info.incomparable;
		info.simeq = info.incomparable | Relation::identity( r.size() );
		if( !r.irreflexive() || !r.transitive() ) {
			info.kind = OrderKind::not_order;
		} else if( !info.simeq.transitive() ) {
			info.kind = OrderKind::partial;
		} else if( !info.incomparable.empty() ) {
			info.kind = OrderKind::stratified;
		} else {
			info.kind = OrderKind::total;
		}
		return info;
	}

	namespace {

		void layer_rec(
			const LayerConstraints &c,
			const std::uint64_t placed, const std::uint64_t remaining,
			std::vector< std::uint64_t > &layers,
			const std::function< void( const std::vector< std::uint64_t > & ) > &visit
		) {
			if( remaining == 0 ) {
				visit( layers );
				return;
			}
			std::uint64_t cand = 0;
			for( std::uint64_t m = remaining; m; m &= m - 1 ) {
				const auto b = static_cast< std::size_t >( std::countr_zero( m ) );
				if( ( c.strict_pred[ b ] & ~placed ) == 0 ) {
					cand |= std::uint64_t( 1 ) << b;
				}
			}
			auto admissible = [ & ]( const std::uint64_t y ) {
				for( std::uint64_t m = y; m; m &= m - 1 ) {
					const auto b = static_cast< std::size_t >( std::countr_zero( m ) );
					if( ( c.weak_pred[ b ] & ~( placed | y ) ) != 0 || ( c.conflict[ b ] & y ) != 0 ) {
						return false;
					}
				}
				return true;
			};
			auto descend = [ & ]( const std::uint64_t y ) {
				layers.push_back( y );
				layer_rec( c, placed | y, remaining & ~y, layers, visit );
				layers.pop_back();
			};
			if( c.singletons_only ) {
				for( std::uint64_t m = cand; m; m &= m - 1 ) {
					const std::uint64_t y = m & ( ~m + 1 );
					if( admissible( y ) ) {
						descend( y );
					}
				}
				return;
			}
			// ascending subset order keeps the enumeration deterministic
			for( std::uint64_t y = ( cand & ( ~cand + 1 ) ); y != 0; y = ( ( y | ~cand ) + 1 ) & cand ) {
				if( admissible( y ) ) {
					descend( y );
				}
			}
		}

	} // namespace

	void for_each_layering(
		const LayerConstraints &constraints,
		const std::function< void( const std::vector< std::uint64_t > & ) > &visit
	) {
		if( constraints.n > 64 ) {
			throw Error( Errc::CarrierTooLarge, "layering supports at most 64 points, got " + std::to_string( constraints.n ) );
		}
		const std::uint64_t all = constraints.n == 64 ? ~std::uint64_t( 0 ) : ( ( std::uint64_t( 1 ) << constraints.n ) - 1 );
		std::vector< std::uint64_t > layers;
		layer_rec( constraints, 0, all, layers, visit );
	}

	Relation order_from_layers( const std::size_t n, const std::vector< std::uint64_t > &layers ) {
		Relation r( n );
		std::uint64_t before = 0;
		for( const auto layer : layers ) {
			for( std::uint64_t m = layer; m; m &= m - 1 ) {
				const auto j = static_cast< std::size_t >( std::countr_zero( m ) );
				for( std::uint64_t p = before; p; p &= p - 1 ) {
					r.set( static_cast< std::size_t >( std::countr_zero( p ) ), j );
				}
			}
			before |= layer;
		}
		return r;
	}

	std::vector< Relation > extensions( const Relation &poset, const ExtKind kind, const std::size_t cap ) {
		const std::size_t n = poset.size();
		if( n > cap || n > 64 ) {
			throw Error( Errc::CarrierTooLarge, "carrier has " + std::to_string( n ) + " points, cap is " + std::to_string( cap ) );
		}
		LayerConstraints c;
		c.n = n;
		c.strict_pred.assign( n, 0 );
		c.weak_pred.assign( n, 0 );
		c.conflict.assign( n, 0 );
		c.singletons_only = kind == ExtKind::total;
		for( std::size_t j = 0; j < n; ++j ) {
			c.strict_pred[ j ] = poset.column_mask( j );
		}
		std::vector< Relation > out;
		for_each_layering( c, [ & ]( const std::vector< std::uint64_t > &layers ) {
			out.push_back( order_from_layers( n, layers ) );
		} );
		return out;
	}

	Relation intersection_of( const std::vector< Relation > &rels, const std::size_t n ) {
		Relation acc = Relation::full( n );
		for( const auto &r : rels ) {
			acc &= r;
		}
		return acc;
	}

	bool szpilrajn_check( const Relation &poset, const std::size_t cap ) {
		const std::size_t n = poset.size();
		const auto totals = extensions( poset, ExtKind::total, cap );
		const auto strats = extensions( poset, ExtKind::stratified, cap );
		if( totals.empty() || strats.empty() ) {
			return false;
		}
		return intersection_of( totals, n ) == poset && intersection_of( strats, n ) == poset;
	}

	RelStructure diamond_closure( const Relation &r1, const Relation &r2 ) {
		const Relation star = reflexive_transitive_closure( r1 | r2 );
		RelStructure out;
		out.r1 = compose( compose( star, r1 ), star );
		out.r2 = star - Relation::identity( r1.size() );
		return out;
	}

	bool diamond_yields_so( const RelStructure &closed ) noexcept {
		return closed.r1.irreflexive();
	}

	RelStructure bowtie_closure( const Relation &r1, const Relation &r2 ) {
		const Relation r3 = r1 & reflexive_transitive_closure( r2 );
		const RelStructure d = diamond_closure( r3, r2 );
		RelStructure out;
		out.r1 = symmetric_closure( d.r1 ) | r1;
		out.r2 = d.r2;
		return out;
	}

} // namespace ct
