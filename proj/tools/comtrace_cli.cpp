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
 * @file comtrace_cli.cpp
 *
 * Command-line front end. Each verb runs one library operation and
 * prints a deterministic result.
 *
 * Exit status: 0 success, 1 domain error, 2 usage error.
 */

#include <comtrace/canonical.hpp>
#include <comtrace/error.hpp>
#include <comtrace/gsostruct.hpp>
#include <comtrace/render.hpp>
#include <comtrace/sostruct.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace {

	struct Options {
		std::string alphabet;
		std::string structure;
		std::size_t cap = ct::kDefaultClassCap;
		std::string order;
		std::string format = "text";
		bool reduce = false;
		std::vector< std::string > args;
	};

	class UsageError : public std::runtime_error {
		public:
			using std::runtime_error::runtime_error;
	};

	ct::Alphabet load_alphabet( const Options &o ) {
		if( o.alphabet.empty() ) {
			throw UsageError( "--alphabet FILE is required" );
		}
		const ct::AlphabetSpec spec = ct::parse_alphabet_text( ct::read_text_file( o.alphabet ) );
		if( o.order.empty() ) {
			return ct::validate_alphabet( spec );
		}
		std::istringstream in( o.order );
		std::vector< std::string > order;
		for( std::string tok; in >> tok; ) {
			order.push_back( tok );
		}
		return ct::validate_alphabet( spec, &order );
	}

	std::vector< ct::StepSeq > load_sequences( const ct::Alphabet &theta, const Options &o, const std::size_t expected ) {
		if( o.args.size() != expected ) {
			throw UsageError( "expected " + std::to_string( expected ) + " step sequence argument(s), got " + std::to_string( o.args.size() ) );
		}
		std::vector< ct::StepSeq > out;
		for( const auto &a : o.args ) {
			out.push_back( ct::parse_stepseq( theta, a ) );
		}
		return out;
	}

	bool is_gso_file( const std::string &text ) {
		std::istringstream in( text );
		for( std::string line; std::getline( in, line ); ) {
			const auto first = line.find_first_not_of( " \t" );
			if( first != std::string::npos && line.compare( first, 4, "cmt:" ) == 0 ) {
				return true;
			}
		}
		return false;
	}

	void print_alphabet( std::ostream &out, const ct::Alphabet &theta ) {
		const ct::AlphabetSpec spec = theta.to_spec();
		out << "events:";
		for( const auto &e : spec.events ) {
			out << ' ' << e;
		}
		out << '\n';
		auto pairs = [ & ]( const char *key, const std::vector< ct::NamePair > &ps ) {
			out << key << ':';
			for( const auto &p : ps ) {
				out << " (" << p.first << ',' << p.second << ')';
			}
			out << '\n';
		};
		pairs( "sim", spec.sim );
		pairs( "ser", spec.ser );
		pairs( "inl", spec.inl );
	}

	void print_lines( std::ostream &out, std::vector< std::string > lines ) {
		std::sort( lines.begin(), lines.end() );
		for( const auto &l : lines ) {
			out << l << '\n';
		}
	}

	void print_structure(
		std::ostream &out, const Options &o,
		const std::vector< std::string > &points,
		const char *first_name, const ct::Relation &first,
		const ct::Relation &wc
	) {
		const bool sym = first.symmetric();
		if( o.format == "dot" ) {
			out << ct::render_dot( first_name, first, points, ct::EdgeStyle::solid, o.reduce );
			out << ct::render_dot( "wc", wc, points, ct::EdgeStyle::dashed, o.reduce );
			return;
		}
		out << "carrier:";
		for( const auto &p : points ) {
			out << ' ' << p;
		}
		out << '\n' << first_name << ":\n" << ct::render_pairs( first, points, sym );
		out << "wc:\n" << ct::render_pairs( wc, points );
	}

	void print_so( std::ostream &out, const Options &o, const ct::SoStructure &s ) {
		print_structure( out, o, s.points, "prec", s.prec, s.wc );
	}

	void print_gso( std::ostream &out, const Options &o, const ct::GsoStructure &g ) {
		print_structure( out, o, g.points, "cmt", g.cmt, g.wc );
	}

	std::vector< std::string > strata_lines( const std::vector< ct::Relation > &orders, const std::vector< std::string > &points ) {
		std::vector< std::string > lines;
		for( const auto &ext : orders ) {
			lines.push_back( ct::render_strata( ct::sequence_of( ext ), points ) );
		}
		return lines;
	}

	void run_verb( const std::string &verb, const Options &o, std::ostream &out ) {
		if( o.format != "text" && o.format != "dot" ) {
			throw UsageError( "--format must be text or dot" );
		}
		if( verb == "validate" ) {
			if( !o.structure.empty() ) {
				const std::string text = ct::read_text_file( o.structure );
				if( is_gso_file( text ) ) {
					ct::parse_gso_text( text );
					out << "valid gso-structure\n";
				} else {
					ct::parse_so_text( text );
					out << "valid so-structure\n";
				}
				return;
			}
			print_alphabet( out, load_alphabet( o ) );
			out << "valid\n";
		} else if( verb == "steps" ) {
			const ct::Alphabet theta = load_alphabet( o );
			for( const auto s : ct::steps_universe( theta ) ) {
				out << ct::render_step( theta, s ) << '\n';
			}
		} else if( verb == "class" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			const ct::ClassSet cls = ct::enumerate_class( theta, s[ 0 ], o.cap );
			for( const auto &t : cls.texts() ) {
				out << t << '\n';
			}
		} else if( verb == "equiv" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 2 );
			out << ( ct::equivalent( theta, s[ 0 ], s[ 1 ], o.cap ) ? "true" : "false" ) << '\n';
		} else if( verb == "canon" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			out << ct::render( theta, ct::canonicalize( theta, s[ 0 ] ) ) << '\n';
		} else if( verb == "gcanon" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			out << ct::render( theta, ct::g_canonical( theta, s[ 0 ], o.cap ) ) << '\n';
		} else if( verb == "sostruct" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			print_so( out, o, ct::so_of_stepseq( theta, s[ 0 ] ) );
		} else if( verb == "gsostruct" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			print_gso( out, o, ct::gso_of_stepseq( theta, s[ 0 ] ) );
		} else if( verb == "extensions" ) {
			if( !o.structure.empty() ) {
				const std::string text = ct::read_text_file( o.structure );
				if( is_gso_file( text ) ) {
					const auto g = ct::parse_gso_text( text );
					print_lines( out, strata_lines( ct::extensions_gso( g ), g.points ) );
				} else {
					const auto s = ct::parse_so_text( text );
					print_lines( out, strata_lines( ct::extensions_so( s ), s.points ) );
				}
				return;
			}
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			const auto g = ct::gso_of_stepseq( theta, s[ 0 ] );
			print_lines( out, strata_lines( ct::extensions_gso( g, 64 ), g.points ) );
		} else if( verb == "from-so" || verb == "from-gso" ) {
			if( o.structure.empty() ) {
				throw UsageError( "--structure FILE is required" );
			}
			const std::string text = ct::read_text_file( o.structure );
			if( verb == "from-so" ) {
				const auto r = ct::comtrace_of_so( ct::parse_so_text( text ), ct::kDefaultCarrierCap, o.cap );
				print_alphabet( out, r.theta );
				for( const auto &t : r.cls.texts() ) {
					out << t << '\n';
				}
			} else {
				const auto r = ct::gcomtrace_of_gso( ct::parse_gso_text( text ), ct::kDefaultCarrierCap, o.cap );
				print_alphabet( out, r.theta );
				for( const auto &t : r.cls.texts() ) {
					out << t << '\n';
				}
			}
		} else if( verb == "semican" ) {
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			const auto g = ct::gso_of_stepseq( theta, s[ 0 ] );
			out << ct::render( theta, ct::semican( g, ct::enumerate_occurrences( s[ 0 ] ).labels(), theta ) ) << '\n';
		} else if( verb == "dot" ) {
			Options d = o;
			d.format = "dot";
			if( !o.structure.empty() ) {
				const std::string text = ct::read_text_file( o.structure );
				if( is_gso_file( text ) ) {
					print_gso( out, d, ct::parse_gso_text( text ) );
				} else {
					print_so( out, d, ct::parse_so_text( text ) );
				}
				return;
			}
			const ct::Alphabet theta = load_alphabet( o );
			const auto s = load_sequences( theta, o, 1 );
			if( theta.has_inl() ) {
				print_gso( out, d, ct::gso_of_stepseq( theta, s[ 0 ] ) );
			} else {
				print_so( out, d, ct::so_of_stepseq( theta, s[ 0 ] ) );
			}
		}
	}

} // namespace

int main( int argc, char **argv ) {
	CLI::App app{ "comtrace and g-comtrace toolkit" };
	app.require_subcommand( 1 );

	Options opts;
	const std::vector< std::pair< std::string, std::string > > verbs = {
		{ "validate", "validate an alphabet or a structure file" },
		{ "steps", "list the steps of an alphabet" },
		{ "class", "enumerate the class of a step sequence" },
		{ "equiv", "test two step sequences for congruence" },
		{ "canon", "canonical form (comtrace alphabets)" },
		{ "gcanon", "lexicographically least member of the class" },
		{ "sostruct", "so-structure induced by a step sequence" },
		{ "gsostruct", "gso-structure induced by a step sequence" },
		{ "extensions", "stratified extensions of a structure" },
		{ "from-so", "comtrace represented by a so-structure" },
		{ "from-gso", "g-comtrace represented by a gso-structure" },
		{ "semican", "g-canonical form built from the gso-structure" },
		{ "dot", "Graphviz rendering of a structure" }
	};
	for( const auto &[ name, help ] : verbs ) {
		CLI::App *sub = app.add_subcommand( name, help );
		sub->add_option( "--alphabet", opts.alphabet, "alphabet file" );
		sub->add_option( "--structure", opts.structure, "structure file" );
		sub->add_option( "--cap", opts.cap, "class enumeration cap" )->check( CLI::PositiveNumber );
		sub->add_option( "--order", opts.order, "event order, e.g. \"a b c\"" );
		sub->add_option( "--format", opts.format, "text or dot" )->check( CLI::IsMember( { "text", "dot" } ) );
		sub->add_flag( "--reduce", opts.reduce, "omit transitively implied edges in DOT output" );
		sub->add_option( "args", opts.args, "step sequence literals" );
	}

	try {
		app.parse( argc, argv );
	} catch( const CLI::CallForHelp &e ) {
		return app.exit( e );
	} catch( const CLI::ParseError &e ) {
		app.exit( e );
		return 2;
	}

	const std::string verb = app.get_subcommands().front()->get_name();
	try {
		std::ostringstream out;
		run_verb( verb, opts, out );
		std::cout << out.str();
		return 0;
	} catch( const UsageError &e ) {
		std::cerr << "usage error: " << e.what() << '\n';
		return 2;
	} catch( const ct::Error &e ) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
}
