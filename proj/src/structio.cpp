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
#include <comtrace/structio.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ct {

	namespace {

		std::string_view trim( std::string_view s ) {
			while( !s.empty() && std::isspace( static_cast< unsigned char >( s.front() ) ) ) {
				s.remove_prefix( 1 );
			}
			while( !s.empty() && std::isspace( static_cast< unsigned char >( s.back() ) ) ) {
				s.remove_suffix( 1 );
			}
			return s;
		}

		[[noreturn]] void fail( const std::size_t line, const std::string &what ) {
			throw Error( Errc::ParseError, "line " + std::to_string( line ) + ": " + what );
		}

		// (x,y) (u,v) ...
		std::vector< NamePair > parse_pairs( std::string_view s, const std::size_t line ) {
			std::vector< NamePair > out;
			std::size_t i = 0;
			auto skip_ws = [ & ] {
				while( i < s.size() && std::isspace( static_cast< unsigned char >( s[ i ] ) ) ) {
					++i;
				}
			};
			auto name = [ & ] {
				skip_ws();
				const std::size_t start = i;
				while( i < s.size() && ( std::isalnum( static_cast< unsigned char >( s[ i ] ) ) || s[ i ] == '_' ) ) {
					++i;
				}
				if( start == i ) {
					fail( line, "expected a name at column " + std::to_string( start + 1 ) );
				}
				return std::string( s.substr( start, i - start ) );
			};
			auto expect = [ & ]( const char c ) {
				skip_ws();
				if( i >= s.size() || s[ i ] != c ) {
					fail( line, std::string( "expected '" ) + c + "'" );
				}
				++i;
			};
			skip_ws();
			while( i < s.size() ) {
				expect( '(' );
				std::string a = name();
				expect( ',' );
				std::string b = name();
				expect( ')' );
				out.emplace_back( std::move( a ), std::move( b ) );
				skip_ws();
			}
			return out;
		}

	} // namespace

	bool is_identifier( const std::string_view name ) noexcept {
		return !name.empty() && std::all_of( name.begin(), name.end(), []( const char c ) {
			return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
		} );
	}

	SectionedSpec parse_sections(
		const std::string_view text,
		const std::string &list_key,
		const std::vector< std::string > &pair_keys
	) {
		SectionedSpec spec;
		for( const auto &k : pair_keys ) {
			spec.pairs[ k ];
		}
		bool seen_list = false;
		std::size_t lineno = 0;
		std::size_t pos = 0;
		while( pos <= text.size() ) {
			const std::size_t nl = text.find( '\n', pos );
			std::string_view line = text.substr( pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos );
			pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
			++lineno;
			if( const auto hash = line.find( '#' ); hash != std::string_view::npos ) {
				line = line.substr( 0, hash );
			}
			line = trim( line );
			if( line.empty() ) {
				continue;
			}
			const auto colon = line.find( ':' );
			if( colon == std::string_view::npos ) {
				fail( lineno, "missing ':'" );
			}
			const std::string key( trim( line.substr( 0, colon ) ) );
			const std::string_view payload = trim( line.substr( colon + 1 ) );
			if( key == list_key ) {
				seen_list = true;
				std::istringstream in{ std::string( payload ) };
				std::string tok;
				while( in >> tok ) {
					if( !is_identifier( tok ) ) {
						fail( lineno, "invalid name '" + tok + "'" );
					}
					spec.names.push_back( tok );
				}
			} else if( spec.pairs.count( key ) ) {
				auto parsed = parse_pairs( payload, lineno );
				auto &dst = spec.pairs[ key ];
				dst.insert( dst.end(), parsed.begin(), parsed.end() );
			} else {
				fail( lineno, "unknown key '" + key + "'" );
			}
		}
		if( !seen_list ) {
			throw Error( Errc::ParseError, "missing '" + list_key + ":' line" );
		}
		return spec;
	}

	std::string read_text_file( const std::string &path ) {
		std::ifstream in( path, std::ios::binary );
		if( !in ) {
			throw Error( Errc::ParseError, "cannot read '" + path + "'" );
		}
		std::ostringstream ss;
		ss << in.rdbuf();
		return ss.str();
	}

	Relation relation_from_names(
		const std::vector< std::string > &points,
		const std::vector< NamePair > &pairs
	) {
		auto index = [ & ]( const std::string &n ) {
			const auto it = std::find( points.begin(), points.end(), n );
			if( it == points.end() ) {
				throw Error( Errc::UnknownEvent, "'" + n + "' is not in the carrier" );
			}
			return static_cast< std::size_t >( it - points.begin() );
		};
		Relation r( points.size() );
		for( const auto &p : pairs ) {
			r.set( index( p.first ), index( p.second ) );
		}
		return r;
	}

} // namespace ct
