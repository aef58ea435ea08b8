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
#include <comtrace/stepseq.hpp>

#include <algorithm>
#include <bit>
#include <cctype>

namespace ct {

	StepSeq parse_stepseq( const Alphabet &alphabet, const std::string_view text ) {
		std::size_t i = 0;
		auto skip_ws = [ & ] {
			while( i < text.size() && std::isspace( static_cast< unsigned char >( text[ i ] ) ) ) {
				++i;
			}
		};
		auto fail = [ & ]( const std::string &what ) -> void {
			throw Error( Errc::ParseError, "step sequence '" + std::string( text ) + "': " + what );
		};
		skip_ws();
		if( text.substr( i ).starts_with( "lambda" ) ) {
			i += 6;
			skip_ws();
			if( i != text.size() ) {
				fail( "trailing input after lambda" );
			}
			return {};
		}
		StepSeq out;
		while( i < text.size() ) {
			if( text[ i ] != '{' ) {
				fail( "expected '{' at column " + std::to_string( i + 1 ) );
			}
			++i;
			Step step = 0;
			while( true ) {
				skip_ws();
				const std::size_t start = i;
				while( i < text.size() && ( std::isalnum( static_cast< unsigned char >( text[ i ] ) ) || text[ i ] == '_' ) ) {
					++i;
				}
				if( start == i ) {
					fail( "expected an event at column " + std::to_string( start + 1 ) );
				}
				const std::string_view name = text.substr( start, i - start );
				const auto e = alphabet.find( name );
				if( !e ) {
					throw Error( Errc::UnknownEvent, "'" + std::string( name ) + "'" );
				}
				if( step & bit( *e ) ) {
					fail( "event '" + std::string( name ) + "' repeated inside a step" );
				}
				step |= bit( *e );
				skip_ws();
				if( i < text.size() && text[ i ] == ',' ) {
					++i;
					continue;
				}
				if( i < text.size() && text[ i ] == '}' ) {
					++i;
					break;
				}
				fail( "expected ',' or '}'" );
			}
			if( !alphabet.is_step( step ) ) {
				throw Error( Errc::NotAStep, render_step( alphabet, step ) + " is not a sim-clique" );
			}
			out.push_back( step );
			skip_ws();
		}
		if( out.empty() ) {
			fail( "empty input; write lambda for the empty sequence" );
		}
		return out;
	}

	std::string render_step( const Alphabet &alphabet, const Step s ) {
		std::string out = "{";
		bool first = true;
		for( Step m = s; m; m &= m - 1 ) {
			if( !first ) {
				out += ',';
			}
			first = false;
			out += alphabet.name( static_cast< std::size_t >( std::countr_zero( m ) ) );
		}
		return out + "}";
	}

	std::string render( const Alphabet &alphabet, const StepSeq &s ) {
		if( s.empty() ) {
			return "lambda";
		}
		std::string out;
		for( const auto step : s ) {
			out += render_step( alphabet, step );
		}
		return out;
	}

	StepSeq lift_word( const Word &x ) {
		StepSeq out;
		out.reserve( x.size() );
		for( const auto e : x ) {
			out.push_back( bit( e ) );
		}
		return out;
	}

	std::vector< std::size_t > EnumeratedStepSequence::labels() const {
		std::vector< std::size_t > out;
		out.reserve( carrier.size() );
		for( const auto &o : carrier ) {
			out.push_back( o.event );
		}
		return out;
	}

	EnumeratedStepSequence enumerate_occurrences( const StepSeq &s ) {
		const WeightCounts wc = weight_and_counts( s );
		EnumeratedStepSequence en;
		// first carrier slot of every event
		EventCounts base{};
		std::size_t next = 0;
		for( std::size_t e = 0; e < kMaxEvents; ++e ) {
			base[ e ] = next;
			for( std::size_t k = 1; k <= wc.counts[ e ]; ++k ) {
				en.carrier.push_back( Occurrence{ e, k } );
			}
			next += wc.counts[ e ];
		}
		en.position.assign( en.carrier.size(), 0 );
		EventCounts seen{};
		for( std::size_t p = 0; p < s.size(); ++p ) {
			std::vector< std::size_t > step;
			for( Step m = s[ p ]; m; m &= m - 1 ) {
				const auto e = static_cast< std::size_t >( std::countr_zero( m ) );
				const std::size_t idx = base[ e ] + seen[ e ]++;
				en.position[ idx ] = p + 1;
				step.push_back( idx );
			}
			en.steps.push_back( std::move( step ) );
		}
		return en;
	}

	std::string occurrence_name( const Alphabet &alphabet, const Occurrence &o ) {
		return alphabet.name( o.event ) + "." + std::to_string( o.index );
	}

	std::vector< std::string > occurrence_names( const Alphabet &alphabet, const EnumeratedStepSequence &en ) {
		std::vector< std::string > out;
		out.reserve( en.size() );
		for( const auto &o : en.carrier ) {
			out.push_back( occurrence_name( alphabet, o ) );
		}
		return out;
	}

	WeightCounts weight_and_counts( const StepSeq &s ) {
		WeightCounts wc;
		for( const auto step : s ) {
			for( Step m = step; m; m &= m - 1 ) {
				++wc.counts[ static_cast< std::size_t >( std::countr_zero( m ) ) ];
				++wc.weight;
			}
		}
		return wc;
	}

	StepSeq cancel( const StepSeq &s, const std::size_t event, const Side side ) {
		StepSeq out = s;
		auto hit = [ & ]( const std::size_t k ) {
			out[ k ] &= ~bit( event );
			if( out[ k ] == 0 ) {
				out.erase( out.begin() + static_cast< std::ptrdiff_t >( k ) );
			}
		};
		if( side == Side::right ) {
			for( std::size_t k = out.size(); k-- > 0; ) {
				if( out[ k ] & bit( event ) ) {
					hit( k );
					break;
				}
			}
		} else {
			for( std::size_t k = 0; k < out.size(); ++k ) {
				if( out[ k ] & bit( event ) ) {
					hit( k );
					break;
				}
			}
		}
		return out;
	}

	StepSeq cancel_step( const StepSeq &s, const Step a, const Side side ) {
		StepSeq out = s;
		for( Step m = a; m; m &= m - 1 ) {
			out = cancel( out, static_cast< std::size_t >( std::countr_zero( m ) ), side );
		}
		return out;
	}

	StepSeq cancel_seq( const StepSeq &s, const StepSeq &t, const Side side ) {
		StepSeq out = s;
		if( side == Side::right ) {
			for( auto it = t.rbegin(); it != t.rend(); ++it ) {
				out = cancel_step( out, *it, side );
			}
		} else {
			for( const auto step : t ) {
				out = cancel_step( out, step, side );
			}
		}
		return out;
	}

	StepSeq project( const StepSeq &s, const Step d ) {
		StepSeq out;
		for( const auto step : s ) {
			if( step & d ) {
				out.push_back( step & d );
			}
		}
		return out;
	}

	Relation order_of( const EnumeratedStepSequence &en ) {
		Relation r( en.size() );
		for( std::size_t i = 0; i < en.size(); ++i ) {
			for( std::size_t j = 0; j < en.size(); ++j ) {
				if( en.position[ i ] < en.position[ j ] ) {
					r.set( i, j );
				}
			}
		}
		return r;
	}

	Relation order_of( const StepSeq &s ) {
		return order_of( enumerate_occurrences( s ) );
	}

	std::vector< std::vector< std::size_t > > sequence_of( const Relation &order ) {
		const OrderInfo info = classify_order( order );
		if( info.kind != OrderKind::stratified && info.kind != OrderKind::total ) {
			throw Error( Errc::NotStratified, std::string( "relation is " ) + order_kind_name( info.kind ) );
		}
		// within a stratified order, the stratum of x is fixed by its number of predecessors
		const std::size_t n = order.size();
		std::vector< std::pair< std::size_t, std::size_t > > keyed;
		for( std::size_t j = 0; j < n; ++j ) {
			std::size_t preds = 0;
			for( std::size_t i = 0; i < n; ++i ) {
				preds += order.test( i, j ) ? 1 : 0;
			}
			keyed.emplace_back( preds, j );
		}
		std::sort( keyed.begin(), keyed.end() );
		std::vector< std::vector< std::size_t > > strata;
		for( std::size_t k = 0; k < keyed.size(); ++k ) {
			if( k == 0 || keyed[ k ].first != keyed[ k - 1 ].first ) {
				strata.emplace_back();
			}
			strata.back().push_back( keyed[ k ].second );
		}
		return strata;
	}

	StepSeq steps_from_strata(
		const std::vector< std::vector< std::size_t > > &strata,
		const std::vector< std::size_t > &labels
	) {
		StepSeq out;
		for( const auto &stratum : strata ) {
			Step s = 0;
			for( const auto p : stratum ) {
				if( s & bit( labels[ p ] ) ) {
					throw Error( Errc::NotAStep, "two points with the same label share a stratum" );
				}
				s |= bit( labels[ p ] );
			}
			out.push_back( s );
		}
		return out;
	}

	std::string render_strata(
		const std::vector< std::vector< std::size_t > > &strata,
		const std::vector< std::string > &points
	) {
		if( strata.empty() ) {
			return "lambda";
		}
		std::string out;
		for( const auto &stratum : strata ) {
			out += '{';
			for( std::size_t k = 0; k < stratum.size(); ++k ) {
				if( k ) {
					out += ',';
				}
				out += points[ stratum[ k ] ];
			}
			out += '}';
		}
		return out;
	}

} // namespace ct
