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

namespace ct {

	const char * errc_name( const Errc code ) noexcept {
		switch( code ) {
			case Errc::SerNotInSim: return "SerNotInSim";
			case Errc::SimInlOverlap: return "SimInlOverlap";
			case Errc::ReflexivePair: return "ReflexivePair";
			case Errc::UnknownEvent: return "UnknownEvent";
			case Errc::ParseError: return "ParseError";
			case Errc::UniverseTooLarge: return "UniverseTooLarge";
			case Errc::NotAStep: return "NotAStep";
			case Errc::NotStratified: return "NotStratified";
			case Errc::ClassCapExceeded: return "ClassCapExceeded";
			case Errc::InlNotEmpty: return "InlNotEmpty";
			case Errc::NotTraceAlphabet: return "NotTraceAlphabet";
			case Errc::CarrierTooLarge: return "CarrierTooLarge";
			case Errc::AxiomViolation: return "AxiomViolation";
			case Errc::EmptyZ: return "EmptyZ";
			case Errc::BoundExceeded: return "BoundExceeded";
			case Errc::InvariantBroken: return "InvariantBroken";
		}
		return "Unknown";
	}

	Error::Error( const Errc code, const std::string &detail ) :
		std::runtime_error( std::string( errc_name( code ) ) + ": " + detail ),
		code_( code ), detail_( detail )
	{}

} // namespace ct
