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

#include <comtrace/alphabet.hpp>
#include <comtrace/error.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace ct {

	AlphabetSpec parse_alphabet_text( const std::string_view text ) {
		const SectionedSpec s = parse_sections( text, "events", { "sim", "ser", "inl" } );
		AlphabetSpec spec;
		spec.events = s.names;
		spec.sim = s.pairs.at( "sim" );
		spec.ser = s.pairs.at( "ser" );
		spec.inl = s.pairs.at( "inl" );
		return spec;
	}

	std::optional< std::size_t > Alphabet::find( const std::string_view name ) const {
		const auto it = std::find( names_.begin(), names_.end(), name );
		if( it == names_.end() ) {
			return std::nullopt;
		}
		return static_cast< std::size_t >( it - names_.begin() );
	}

	bool Alphabet::ser_product( const Step a, const Step b ) const noexcept {
		for( Step m = a; m; m &= m - 1 ) {
			if( ( b & ~ser_[ std::countr_zero( m ) ] ) != 0 ) {
				return false;
			}
		}
		return true;
	}

	bool Alphabet::inl_product( const Step a, const Step b ) const noexcept {
		for( Step m = a; m; m &= m - 1 ) {
			if( ( b & ~inl_[ std::countr_zero( m ) ] ) != 0 ) {
				return false;
			}
		}
		return true;
	}

	Step Alphabet::all_events() const noexcept {
		return size() == 64 ? ~Step( 0 ) : bit( size() ) - 1;
	}

	bool Alphabet::is_step( const Step s ) const noexcept {
		if( s == 0 || ( s & ~all_events() ) != 0 ) {
			return false;
		}
		for( Step m = s; m; m &= m - 1 ) {
			const auto e = static_cast< std::size_t >( std::countr_zero( m ) );
			if( ( s & ~bit( e ) & ~sim_[ e ] ) != 0 ) {
				return false;
			}
		}
		return true;
	}

	bool Alphabet::has_inl() const noexcept {
		return std::any_of( inl_.begin(), inl_.end(), []( Step r ) { return r != 0; } );
	}

	bool Alphabet::is_lifted_trace() const noexcept {
		return !has_inl() && sim_ == ser_;
	}

	AlphabetSpec Alphabet::to_spec() const {
		AlphabetSpec spec;
		spec.events = names_;
		for( std::size_t a = 0; a < size(); ++a ) {
			for( std::size_t b = 0; b < size(); ++b ) {
				if( a < b && sim( a, b ) ) {
					spec.sim.emplace_back( names_[ a ], names_[ b ] );
				}
				if( a < b && inl( a, b ) ) {
					spec.inl.emplace_back( names_[ a ], names_[ b ] );
				}
				if( ser( a, b ) ) {
					spec.ser.emplace_back( names_[ a ], names_[ b ] );
				}
			}
		}
		return spec;
	}

	Alphabet validate_alphabet( const AlphabetSpec &raw, const std::vector< std::string > *order ) {
		std::vector< std::string > names = raw.events;
		{
			std::set< std::string > seen;
			for( const auto &n : names ) {
				if( n.empty() ) {
					throw Error( Errc::ParseError, "empty event name" );
				}
				if( !seen.insert( n ).second ) {
					throw Error( Errc::ParseError, "duplicate event '" + n + "'" );
				}
			}
		}
		if( names.size() > kMaxEvents ) {
			throw Error( Errc::ParseError, "at most 64 events are supported" );
		}
		if( order != nullptr ) {
			std::vector< std::string > a = *order, b = names;
			std::sort( a.begin(), a.end() );
			std::sort( b.begin(), b.end() );
			if( a != b ) {
				throw Error( Errc::UnknownEvent, "event order is not a permutation of the events" );
			}
			names = *order;
		} else {
			std::sort( names.begin(), names.end() );
		}

		Alphabet out;
		out.names_ = names;
		out.sim_.assign( names.size(), 0 );
		out.ser_.assign( names.size(), 0 );
		out.inl_.assign( names.size(), 0 );

		auto load = [ & ]( const std::vector< NamePair > &pairs, std::vector< Step > &rows, const bool symmetric, const char *rel ) {
			for( const auto &p : pairs ) {
				const auto a = out.find( p.first );
				const auto b = out.find( p.second );
				if( !a || !b ) {
					throw Error( Errc::UnknownEvent, std::string( rel ) + " pair (" + p.first + "," + p.second + ") names an unknown event" );
				}
				if( *a == *b ) {
					throw Error( Errc::ReflexivePair, std::string( rel ) + " pair (" + p.first + "," + p.second + ")" );
				}
				rows[ *a ] |= bit( *b );
				if( symmetric ) {
					rows[ *b ] |= bit( *a );
				}
			}
		};
		load( raw.sim, out.sim_, true, "sim" );
		load( raw.ser, out.ser_, false, "ser" );
		load( raw.inl, out.inl_, true, "inl" );

		for( std::size_t a = 0; a < names.size(); ++a ) {
			if( const Step bad = out.ser_[ a ] & ~out.sim_[ a ]; bad != 0 ) {
				throw Error( Errc::SerNotInSim, "(" + names[ a ] + "," + names[ static_cast< std::size_t >( std::countr_zero( bad ) ) ] + ") is in ser but not in sim" );
			}
		}
		for( std::size_t a = 0; a < names.size(); ++a ) {
			if( const Step bad = out.sim_[ a ] & out.inl_[ a ]; bad != 0 ) {
				throw Error( Errc::SimInlOverlap, "(" + names[ a ] + "," + names[ static_cast< std::size_t >( std::countr_zero( bad ) ) ] + ") is in both sim and inl" );
			}
		}
		return out;
	}

	std::vector< std::size_t > step_members( const Step s ) {
		std::vector< std::size_t > out;
		for( Step m = s; m; m &= m - 1 ) {
			out.push_back( static_cast< std::size_t >( std::countr_zero( m ) ) );
		}
		return out;
	}

	std::size_t step_min( const Step s ) noexcept {
		return static_cast< std::size_t >( std::countr_zero( s ) );
	}

	std::size_t step_size( const Step s ) noexcept {
		return static_cast< std::size_t >( std::popcount( s ) );
	}

	namespace {

		void cliques_rec(
			const std::vector< Step > &adj, const Step current, const Step candidates,
			std::vector< Step > &out, const std::size_t cap
		) {
			for( Step m = candidates; m; m &= m - 1 ) {
				const auto v = static_cast< std::size_t >( std::countr_zero( m ) );
				const Step next = current | bit( v );
				out.push_back( next );
				if( out.size() > cap ) {
					throw Error( Errc::UniverseTooLarge, "more than " + std::to_string( cap ) + " steps" );
				}
				// only higher-indexed vertices, so every clique is produced once
				const Step higher = v == 63 ? 0 : ~( bit( v + 1 ) - 1 );
				cliques_rec( adj, next, candidates & adj[ v ] & higher, out, cap );
			}
		}

		std::vector< Step > cliques( const std::vector< Step > &adj, const std::size_t n, const std::size_t cap ) {
			std::vector< Step > out;
			const Step all = n == 64 ? ~Step( 0 ) : bit( n ) - 1;
			cliques_rec( adj, 0, all, out, cap );
			std::sort( out.begin(), out.end(), []( const Step a, const Step b ) {
				if( step_size( a ) != step_size( b ) ) {
					return step_size( a ) < step_size( b );
				}
				return step_members( a ) < step_members( b );
			} );
			return out;
		}

	} // namespace

	std::vector< Step > steps_universe( const Alphabet &alphabet, const std::size_t cap ) {
		std::vector< Step > adj( alphabet.size() );
		for( std::size_t e = 0; e < alphabet.size(); ++e ) {
			adj[ e ] = alphabet.sim_row( e );
		}
		return cliques( adj, alphabet.size(), cap );
	}

	DerivedRelations derived_relations( const Alphabet &alphabet ) {
		const std::size_t n = alphabet.size();
		DerivedRelations d;
		d.ind.assign( n, 0 );
		d.syn.assign( n, 0 );
		for( std::size_t a = 0; a < n; ++a ) {
			Step ser_inv = 0;
			for( std::size_t b = 0; b < n; ++b ) {
				if( alphabet.ser( b, a ) ) {
					ser_inv |= bit( b );
				}
			}
			d.ind[ a ] = alphabet.ser_row( a ) & ser_inv;
			d.syn[ a ] = alphabet.sim_row( a ) & ~( alphabet.ser_row( a ) | ser_inv );
		}
		d.syn_steps = cliques( d.syn, n, kDefaultUniverseCap );
		return d;
	}

	Alphabet lift_trace_alphabet( const std::vector< std::string > &events, const std::vector< NamePair > &ind ) {
		AlphabetSpec spec;
		spec.events = events;
		spec.sim = ind;
		for( const auto &p : ind ) {
			spec.ser.push_back( p );
			spec.ser.emplace_back( p.second, p.first );
		}
		return validate_alphabet( spec );
	}

} // namespace ct
