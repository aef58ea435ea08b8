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

#include <comtrace/render.hpp>

namespace ct {

	std::string render_pairs( const Relation &r, const std::vector< std::string > &points, const bool halve_symmetric ) {
		std::string out;
		for( const auto &[ a, b ] : r.pairs() ) {
			if( halve_symmetric && a > b && r.test( b, a ) ) {
				continue;
			}
			out += points[ a ] + " " + points[ b ] + "\n";
		}
		return out;
	}

	namespace {

		std::string quoted( const std::string &s ) {
			std::string out = "\"";
			for( const char c : s ) {
				if( c == '"' || c == '\\' ) {
					out += '\\';
				}
				out += c;
			}
			return out + "\"";
		}

	} // namespace

	std::string render_dot(
		const std::string &name,
		const Relation &r,
		const std::vector< std::string > &points,
		const EdgeStyle style,
		const bool reduce
	) {
		const bool sym = r.symmetric();
		const Relation shown = reduce && !sym && r.transitive() ? transitive_reduction( r ) : r;
		std::string out = "digraph " + quoted( name ) + " {\n";
		for( const auto &p : points ) {
			out += "  " + quoted( p ) + ";\n";
		}
		for( const auto &[ a, b ] : shown.pairs() ) {
			if( sym && a > b ) {
				continue;
			}
			out += "  " + quoted( points[ a ] ) + " -> " + quoted( points[ b ] );
			std::string attrs;
			if( style == EdgeStyle::dashed ) {
				attrs = "style=dashed";
			}
			if( sym ) {
				attrs += attrs.empty() ? "dir=none" : ", dir=none";
			}
			if( !attrs.empty() ) {
				out += " [" + attrs + "]";
			}
			out += ";\n";
		}
		return out + "}\n";
	}

} // namespace ct
