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
 * @file structio.hpp
 *
 * Line-oriented text formats shared by alphabet and structure files.
 *
 * Each non-empty line is `key: payload`. The list key carries
 * whitespace-separated names; every other key carries pairs written as
 * `(x,y)`. `#` starts a comment. Repeated keys accumulate.
 */

#ifndef COMTRACE_STRUCTIO_HPP
#define COMTRACE_STRUCTIO_HPP

#include <comtrace/relation.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ct {

	using NamePair = std::pair< std::string, std::string >;

	struct SectionedSpec {
		std::vector< std::string > names;
		std::map< std::string, std::vector< NamePair > > pairs;
	};

	/** True for nonempty names over [A-Za-z0-9_]. */
	bool is_identifier( std::string_view name ) noexcept;

	/**
	 * Parses sectioned text. Unknown keys and malformed payloads raise
	 * ParseError with the offending line number.
	 */
	SectionedSpec parse_sections(
		std::string_view text,
		const std::string &list_key,
		const std::vector< std::string > &pair_keys
	);

	/** Whole file as a string; ParseError when unreadable. */
	std::string read_text_file( const std::string &path );

	/**
	 * Relation over points built from named pairs.
	 * UnknownEvent when a name is not a point.
	 */
	Relation relation_from_names(
		const std::vector< std::string > &points,
		const std::vector< NamePair > &pairs
	);

} // namespace ct

#endif
