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
#include <comtrace/congruence.hpp>
#include <comtrace/error.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace ct {

	std::vector< StepSeq > rewrite_neighbors( const Alphabet &alphabet, const StepSeq &s ) {
		std::set< StepSeq > out;
		for( std::size_t i = 0; i < s.size(); ++i ) {
			const Step a = s[ i ];
			// splits A -> BC over proper nonempty B
			for( Step b = ( a - 1 ) & a; b != 0; b = ( b - 1 ) & a ) {
				const Step c = a & ~b;
				if( alphabet.ser_product( b, c ) ) {
					StepSeq t;
					t.reserve( s.size() + 1 );
					t.insert( t.end(), s.begin(), s.begin() + static_cast< std::ptrdiff_t >( i ) );
					t.push_back( b );
					t.push_back( c );
					t.insert( t.end(), s.begin() + static_cast< std::ptrdiff_t >( i ) + 1, s.end() );
					out.insert( std::move( t ) );
				}
			}
			if( i + 1 == s.size() ) {
				continue;
			}
			const Step b = s[ i + 1 ];
			if( ( a & b ) == 0 && alphabet.ser_product( a, b ) ) {
				StepSeq t = s;
				t[ i ] = a | b;
				t.erase( t.begin() + static_cast< std::ptrdiff_t >( i ) + 1 );
				out.insert( std::move( t ) );
			}
			if( alphabet.inl_product( a, b ) ) {
				StepSeq t = s;
				std::swap( t[ i ], t[ i + 1 ] );
				out.insert( std::move( t ) );
			}
		}
		out.erase( s );
		return { out.begin(), out.end() };
	}

	ClassSet::ClassSet( const Alphabet &alphabet, std::vector< StepSeq > members ) {
		std::vector< std::pair< std::string, StepSeq > > keyed;
		keyed.reserve( members.size() );
		for( auto &m : members ) {
			keyed.emplace_back( render( alphabet, m ), std::move( m ) );
		}
		std::sort( keyed.begin(), keyed.end() );
		keyed.erase( std::unique( keyed.begin(), keyed.end() ), keyed.end() );
		for( auto &k : keyed ) {
			texts_.push_back( std::move( k.first ) );
			members_.push_back( std::move( k.second ) );
		}
		sorted_ = members_;
		std::sort( sorted_.begin(), sorted_.end() );
	}

	bool ClassSet::contains( const StepSeq &s ) const {
		return std::binary_search( sorted_.begin(), sorted_.end(), s );
	}

	ClassSet enumerate_class( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		std::set< StepSeq > seen{ s };
		std::deque< StepSeq > queue{ s };
		while( !queue.empty() ) {
			const StepSeq cur = std::move( queue.front() );
			queue.pop_front();
			for( auto &t : rewrite_neighbors( alphabet, cur ) ) {
				if( seen.insert( t ).second ) {
					if( seen.size() > cap ) {
						throw Error( Errc::ClassCapExceeded, "class of " + render( alphabet, s ) + " exceeds " + std::to_string( cap ) + " members" );
					}
					queue.push_back( std::move( t ) );
				}
			}
		}
		return ClassSet( alphabet, { seen.begin(), seen.end() } );
	}

	bool equivalent_by_class( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, const std::size_t cap ) {
		if( weight_and_counts( s ).counts != weight_and_counts( t ).counts ) {
			return false;
		}
		return enumerate_class( alphabet, s, cap ).contains( t );
	}

	bool equivalent( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, const std::size_t cap ) {
		if( weight_and_counts( s ).counts != weight_and_counts( t ).counts ) {
			return false;
		}
		if( !alphabet.has_inl() ) {
			return canonicalize( alphabet, s ) == canonicalize( alphabet, t );
		}
		return enumerate_class( alphabet, s, cap ).contains( t );
	}

	ClassSet compose_classes( const Alphabet &alphabet, const StepSeq &s, const StepSeq &t, const std::size_t cap ) {
		StepSeq st = s;
		st.insert( st.end(), t.begin(), t.end() );
		return enumerate_class( alphabet, st, cap );
	}

	const ClassSet & ClassCache::get( const StepSeq &s ) {
		if( const auto it = memo_.find( s ); it != memo_.end() ) {
			return *it->second;
		}
		auto cls = std::make_shared< const ClassSet >( enumerate_class( alphabet_, s, cap_ ) );
		for( const auto &m : cls->members() ) {
			memo_.emplace( m, cls );
		}
		return *cls;
	}

} // namespace ct
