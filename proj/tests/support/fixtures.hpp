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
 * @file fixtures.hpp
 *
 * Named alphabets and structures shared by the unit tests and the
 * acceptance runner.
 */

#ifndef COMTRACE_TESTS_FIXTURES_HPP
#define COMTRACE_TESTS_FIXTURES_HPP

#include <comtrace/gsostruct.hpp>

#include <set>
#include <string>
#include <vector>

namespace fx {

	ct::Alphabet theta1();
	ct::Alphabet theta2();
	ct::Alphabet theta3();
	ct::Alphabet theta4();
	ct::Alphabet theta5();
	ct::Alphabet theta6();
	ct::Alphabet theta7();
	ct::Alphabet theta8();

	/** ({a,b,c}, ind {b~c}) lifted */
	ct::Alphabet trace_bc();

	ct::StepSeq seq( const ct::Alphabet &theta, const std::string &text );

	std::vector< ct::StepSeq > seqs( const ct::Alphabet &theta, const std::vector< std::string > &texts );

	/** Rendered members as a set. */
	std::set< std::string > texts( const ct::ClassSet &cls );

	std::set< std::string > texts( const ct::Alphabet &theta, const std::vector< ct::StepSeq > &members );

	/** "abc" -> word over single-letter event names */
	ct::Word word( const ct::Alphabet &theta, const std::string &letters );

	/** The five-event so-structure with caption class [{a,b}{c}{d,e}]. */
	ct::SoStructure figure_so();

	/** The five-event gso-structure with caption class [{a,b}{c}{e,d}]. */
	ct::GsoStructure figure_gso();

	/** Point index by name. */
	std::size_t point( const std::vector< std::string > &points, const std::string &name );

	/** Pairs given as "x y" strings over named points. */
	ct::Relation rel( const std::vector< std::string > &points, const std::vector< std::string > &pairs );

} // namespace fx

#endif
