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
 * @file render.hpp
 *
 * Text and Graphviz renderings of relations over named points.
 */

#ifndef COMTRACE_RENDER_HPP
#define COMTRACE_RENDER_HPP

#include <comtrace/relation.hpp>

#include <string>
#include <vector>

namespace ct {

	/** One `x y` line per pair, row-major; symmetric relations list each pair once when halved. */
	std::string render_pairs( const Relation &r, const std::vector< std::string > &points, bool halve_symmetric = false );

	enum class EdgeStyle { solid, dashed };

	/**
	 * A self-contained digraph. Symmetric relations are drawn once per
	 * unordered pair without arrow heads. reduce drops transitively implied
	 * edges of a transitive relation.
	 */
	std::string render_dot(
		const std::string &name,
		const Relation &r,
		const std::vector< std::string > &points,
		EdgeStyle style,
		bool reduce = false
	);

} // namespace ct

#endif
