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

#include "fixtures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fx {

	namespace {

		ct::Alphabet make(
			std::vector< std::string > events,
			std::vector< ct::NamePair > sim,
			std::vector< ct::NamePair > ser,
			std::vector< ct::NamePair > inl = {}
		) {
			ct::AlphabetSpec spec;
			spec.events = std::move( events );
			spec.sim = std::move( sim );
			spec.ser = std::move( ser );
			spec.inl = std::move( inl );
			return ct::validate_alphabet( spec );
		}

		std::vector< ct::NamePair > both_ways( const std::vector< ct::NamePair > &pairs ) {
			std::vector< ct::NamePair > out;
			for( const auto &p : pairs ) {
				out.push_back( p );
				out.emplace_back( p.second, p.first );
			}
			return out;
		}

	} // namespace

	ct::Alphabet theta1() {
		return make( { "a", "b", "c" }, { { "b", "c" } }, { { "b", "c" } } );
	}

	ct::Alphabet theta2() {
		return make(
			{ "a", "b", "c", "d", "e" },
			{ { "a", "b" }, { "a", "c" }, { "a", "d" } },
			{ { "a", "b" }, { "b", "a" }, { "a", "c" } }
		);
	}

	ct::Alphabet theta3() {
		const std::vector< ct::NamePair > s = { { "a", "c" }, { "b", "c" } };
		return make( { "a", "b", "c" }, s, both_ways( s ), { { "a", "b" } } );
	}

	ct::Alphabet theta4() {
		return make(
			{ "a", "b", "c", "d" },
			{ { "a", "b" }, { "a", "d" }, { "b", "c" } },
			{ { "a", "b" }, { "b", "a" }, { "b", "c" } }
		);
	}

	ct::Alphabet theta5() {
		return make(
			{ "a", "b", "c", "d" },
			{ { "a", "b" }, { "a", "d" }, { "b", "c" } },
			{ { "a", "b" }, { "b", "a" }, { "b", "c" } },
			{ { "a", "c" } }
		);
	}

	ct::Alphabet theta6() {
		const std::vector< ct::NamePair > s = { { "a", "c" } };
		return make( { "a", "b", "c" }, s, both_ways( s ), { { "a", "b" } } );
	}

	ct::Alphabet theta7() {
		const std::vector< ct::NamePair > s = {
			{ "b", "c" }, { "b", "d" }, { "b", "e" }, { "c", "d" }, { "c", "e" }, { "d", "e" }
		};
		return make( { "a", "b", "c", "d", "e" }, s, both_ways( s ), { { "a", "b" }, { "a", "d" }, { "a", "e" } } );
	}

	ct::Alphabet theta8() {
		return make( { "a", "b", "c" }, { { "a", "c" } }, { { "c", "a" } } );
	}

	ct::Alphabet trace_bc() {
		return ct::lift_trace_alphabet( { "a", "b", "c" }, { { "b", "c" } } );
	}

	ct::StepSeq seq( const ct::Alphabet &theta, const std::string &text ) {
		return ct::parse_stepseq( theta, text );
	}

	std::vector< ct::StepSeq > seqs( const ct::Alphabet &theta, const std::vector< std::string > &texts ) {
		std::vector< ct::StepSeq > out;
		for( const auto &t : texts ) {
			out.push_back( seq( theta, t ) );
		}
		return out;
	}

	std::set< std::string > texts( const ct::ClassSet &cls ) {
		return { cls.texts().begin(), cls.texts().end() };
	}

	std::set< std::string > texts( const ct::Alphabet &theta, const std::vector< ct::StepSeq > &members ) {
		std::set< std::string > out;
		for( const auto &m : members ) {
			out.insert( ct::render( theta, m ) );
		}
		return out;
	}

	ct::Word word( const ct::Alphabet &theta, const std::string &letters ) {
		ct::Word w;
		for( const char c : letters ) {
			w.push_back( *theta.find( std::string( 1, c ) ) );
		}
		return w;
	}

	std::size_t point( const std::vector< std::string > &points, const std::string &name ) {
		const auto it = std::find( points.begin(), points.end(), name );
		if( it == points.end() ) {
			throw std::invalid_argument( "no point " + name );
		}
		return static_cast< std::size_t >( it - points.begin() );
	}

	ct::Relation rel( const std::vector< std::string > &points, const std::vector< std::string > &pairs ) {
		ct::Relation r( points.size() );
		for( const auto &p : pairs ) {
			std::istringstream in( p );
			std::string x, y;
			in >> x >> y;
			r.set( point( points, x ), point( points, y ) );
		}
		return r;
	}

	ct::SoStructure figure_so() {
		const std::vector< std::string > pts = { "a", "b", "c", "d", "e" };
		const std::vector< std::string > prec = { "a c", "c e", "b d", "a d", "c d", "b e", "a e" };
		std::vector< std::string > wc = prec;
		wc.insert( wc.end(), { "b c", "d e", "e d" } );
		return ct::validate_so( pts, rel( pts, prec ), rel( pts, wc ) );
	}

	ct::GsoStructure figure_gso() {
		const std::vector< std::string > pts = { "a", "b", "c", "d", "e" };
		const ct::Relation cmt = ct::symmetric_closure( rel( pts, { "a c", "b e", "e a", "a d", "e c", "c d", "d b" } ) );
		const ct::Relation wc = rel( pts, { "c e", "b d", "a d", "c d", "b e", "a e", "b c", "d e", "e d" } );
		return ct::validate_gso( pts, cmt, wc );
	}

} // namespace fx
