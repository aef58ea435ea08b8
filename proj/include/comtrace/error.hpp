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
 * @file error.hpp
 *
 * Error kinds raised by the library. Every failure carries a kind and a
 * human-readable witness.
 */

#ifndef COMTRACE_ERROR_HPP
#define COMTRACE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ct {

	enum class Errc {
		SerNotInSim,
		SimInlOverlap,
		ReflexivePair,
		UnknownEvent,
		ParseError,
		UniverseTooLarge,
		NotAStep,
		NotStratified,
		ClassCapExceeded,
		InlNotEmpty,
		NotTraceAlphabet,
		CarrierTooLarge,
		AxiomViolation,
		EmptyZ,
		BoundExceeded,
		InvariantBroken
	};

	/** Name of an error kind, as printed by the command-line tool. */
	const char * errc_name( Errc code ) noexcept;

	class Error : public std::runtime_error {

		public:

			Error( Errc code, const std::string &detail );

			Errc code() const noexcept { return code_; }

			const std::string & detail() const noexcept { return detail_; }

		private:

			Errc code_;
			std::string detail_;
	};

} // namespace ct

#endif
