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

#include <comtrace/canonical.hpp>
#include <comtrace/error.hpp>

#include <algorithm>
#include <bit>

namespace ct {

	std::strong_ordering compare_steps( const Step a, const Step b ) noexcept {
		if( a == b ) {
			return std::strong_ordering::equal;
		}
		const auto sa = step_size( a ), sb = step_size( b );
		if( sa != sb ) {
			return sa > sb ? std::strong_ordering::less : std::strong_ordering::greater;
		}
		return step_min( a & ~b ) < step_min( b & ~a ) ? std::strong_ordering::less : std::strong_ordering::greater;
	}

	std::strong_ordering compare_lex( const StepSeq &s, const StepSeq &t ) noexcept {
		const std::size_t common = std::min( s.size(), t.size() );
		for( std::size_t k = 0; k < common; ++k ) {
			if( s[ k ] != t[ k ] ) {
				return compare_steps( s[ k ], t[ k ] );
			}
		}
		return s.size() <=> t.size();
	}

	std::strong_ordering compare( const StepSeq &s, const StepSeq &t, const CompareMode mode ) {
		if( mode == CompareMode::lex ) {
			return compare_lex( s, t );
		}
		if( s.size() != 1 || t.size() != 1 ) {
			throw Error( Errc::ParseError, "step comparison expects two single steps" );
		}
		return compare_steps( s[ 0 ], t[ 0 ] );
	}

	namespace {

		void require_no_inl( const Alphabet &alphabet ) {
			if( alphabet.has_inl() ) {
				throw Error( Errc::InlNotEmpty, "operation is defined for comtrace alphabets only" );
			}
		}

	} // namespace

	std::optional< FdWitness > forward_dependent( const Alphabet &alphabet, const Step a, const Step b ) {
		require_no_inl( alphabet );
		std::optional< FdWitness > best;
		// every nonempty C within B, including B itself
		for( Step c = b; c != 0; c = ( c - 1 ) & b ) {
			if( !alphabet.ser_product( a, c ) || !alphabet.ser_product( c, b & ~c ) ) {
				continue;
			}
			if( !best || compare_steps( c, best->c ) < 0 ) {
				best = FdWitness{ a, b, c };
			}
		}
		return best;
	}

	bool is_canonical( const Alphabet &alphabet, const StepSeq &s ) {
		require_no_inl( alphabet );
		for( std::size_t i = 0; i + 1 < s.size(); ++i ) {
			if( forward_dependent( alphabet, s[ i ], s[ i + 1 ] ) ) {
				return false;
			}
		}
		return true;
	}

	StepSeq canonicalize( const Alphabet &alphabet, const StepSeq &s ) {
		require_no_inl( alphabet );
		StepSeq u = s;
		std::size_t i = 0;
		while( i + 1 < u.size() ) {
			const auto w = forward_dependent( alphabet, u[ i ], u[ i + 1 ] );
			if( !w ) {
				++i;
				continue;
			}
			u[ i ] |= w->c;
			u[ i + 1 ] &= ~w->c;
			if( u[ i + 1 ] == 0 ) {
				u.erase( u.begin() + static_cast< std::ptrdiff_t >( i ) + 1 );
			}
			// the earlier pair may have become dependent again
			i = i == 0 ? 0 : i - 1;
		}
		return u;
	}

	StepSeq canonicalize_by_class( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		require_no_inl( alphabet );
		const ClassSet cls = enumerate_class( alphabet, s, cap );
		std::vector< StepSeq > hits;
		for( const auto &m : cls.members() ) {
			if( is_canonical( alphabet, m ) ) {
				hits.push_back( m );
			}
		}
		if( hits.size() != 1 ) {
			throw Error( Errc::InvariantBroken, "class of " + render( alphabet, s ) + " has " + std::to_string( hits.size() ) + " canonical members" );
		}
		return hits.front();
	}

	std::size_t max_first_step( ClassCache &cache, const StepSeq &s ) {
		std::size_t best = 0;
		for( const auto &m : cache.get( s ).members() ) {
			if( !m.empty() ) {
				best = std::max( best, step_size( m.front() ) );
			}
		}
		return best;
	}

	namespace {

		StepSeq suffix( const StepSeq &s, const std::size_t i ) {
			return StepSeq( s.begin() + static_cast< std::ptrdiff_t >( i ), s.end() );
		}

	} // namespace

	bool is_gmc( ClassCache &cache, const StepSeq &s ) {
		for( std::size_t i = 0; i < s.size(); ++i ) {
			if( step_size( s[ i ] ) < max_first_step( cache, suffix( s, i ) ) ) {
				return false;
			}
		}
		return true;
	}

	bool is_gmc( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		ClassCache cache( alphabet, cap );
		return is_gmc( cache, s );
	}

	std::size_t mc_index( ClassCache &cache, const StepSeq &s ) {
		for( std::size_t i = 0; i < s.size(); ++i ) {
			if( step_size( s[ i ] ) >= max_first_step( cache, suffix( s, i ) ) ) {
				return i + 1;
			}
		}
		return 0;
	}

	bool is_mc( ClassCache &cache, const StepSeq &s ) {
		for( const auto &v : cache.get( s ).members() ) {
			if( v.size() < s.size() ) {
				return false;
			}
		}
		for( std::size_t i = 0; i < s.size(); ++i ) {
			const StepSeq ui = suffix( s, i );
			const std::size_t mine = mc_index( cache, ui );
			for( const auto &w : cache.get( ui ).members() ) {
				if( w.size() == ui.size() && mine > mc_index( cache, w ) ) {
					return false;
				}
			}
		}
		return true;
	}

	bool is_mc( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		ClassCache cache( alphabet, cap );
		return is_mc( cache, s );
	}

	StepSeq lex_min( const std::vector< StepSeq > &members ) {
		return *std::min_element( members.begin(), members.end(), []( const StepSeq &x, const StepSeq &y ) {
			return compare_lex( x, y ) < 0;
		} );
	}

	StepSeq g_canonical( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		return lex_min( enumerate_class( alphabet, s, cap ).members() );
	}

	namespace {

		void require_trace( const Alphabet &alphabet ) {
			if( !alphabet.is_lifted_trace() ) {
				throw Error( Errc::NotTraceAlphabet, "expected inl empty and sim = ser" );
			}
		}

		// greedy maximal fully commutative blocks
		std::vector< Word > decompose( const Alphabet &alphabet, const Word &x ) {
			std::vector< Word > blocks;
			Step current = 0;
			for( const auto a : x ) {
				const bool extend = !blocks.empty() && ( current & bit( a ) ) == 0 && ( current & ~alphabet.ser_row( a ) ) == 0;
				if( extend ) {
					blocks.back().push_back( a );
					current |= bit( a );
				} else {
					blocks.push_back( Word{ a } );
					current = bit( a );
				}
			}
			return blocks;
		}

	} // namespace

	FoataForm foata_trace( const Alphabet &alphabet, const Word &x ) {
		require_trace( alphabet );
		FoataForm out;
		out.decomposition = decompose( alphabet, x );
		for( const auto &block : out.decomposition ) {
			Step s = 0;
			for( const auto a : block ) {
				s |= bit( a );
			}
			out.max_steps.push_back( s );
		}
		for( const auto step : canonicalize( alphabet, lift_word( x ) ) ) {
			out.foata.push_back( step_members( step ) );
		}
		return out;
	}

	bool is_trace_gmc( const Alphabet &alphabet, const Word &x ) {
		require_trace( alphabet );
		const auto blocks = decompose( alphabet, x );
		for( std::size_t i = 0; i + 1 < blocks.size(); ++i ) {
			for( const auto a : blocks[ i + 1 ] ) {
				const bool anchored = std::any_of( blocks[ i ].begin(), blocks[ i ].end(), [ & ]( const std::size_t b ) {
					return a == b || !alphabet.ser( a, b );
				} );
				if( !anchored ) {
					return false;
				}
			}
		}
		return true;
	}

} // namespace ct
