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
#include <comtrace/sostruct.hpp>
#include <comtrace/structio.hpp>

namespace ct {

	namespace {

		std::string tuple_text( const std::vector< std::string > &points, std::initializer_list< std::size_t > ids ) {
			std::string out = "(";
			bool first = true;
			for( const auto i : ids ) {
				if( !first ) {
					out += ',';
				}
				first = false;
				out += points[ i ];
			}
			return out + ")";
		}

	} // namespace

	std::optional< std::string > so_violation( const Relation &prec, const Relation &wc, const std::vector< std::string > &points ) {
		const std::size_t n = wc.size();
		if( prec.size() != n || points.size() != n ) {
			return std::string( "carrier mismatch" );
		}
		for( std::size_t a = 0; a < n; ++a ) {
			if( wc.test( a, a ) ) {
				return "S1 " + tuple_text( points, { a } );
			}
		}
		for( const auto &[ a, b ] : prec.pairs() ) {
			if( !wc.test( a, b ) ) {
				return "S2 " + tuple_text( points, { a, b } );
			}
		}
		for( std::size_t a = 0; a < n; ++a ) {
			for( std::size_t b = 0; b < n; ++b ) {
				if( !wc.test( a, b ) ) {
					continue;
				}
				for( std::size_t c = 0; c < n; ++c ) {
					if( a != c && wc.test( b, c ) && !wc.test( a, c ) ) {
						return "S3 " + tuple_text( points, { a, b, c } );
					}
					if( prec.test( b, c ) && !prec.test( a, c ) ) {
						return "S4 " + tuple_text( points, { a, b, c } );
					}
				}
			}
		}
		for( const auto &[ a, b ] : prec.pairs() ) {
			for( std::size_t c = 0; c < n; ++c ) {
				if( wc.test( b, c ) && !prec.test( a, c ) ) {
					return "S4 " + tuple_text( points, { a, b, c } );
				}
			}
		}
		return std::nullopt;
	}

	SoStructure validate_so( std::vector< std::string > points, Relation prec, Relation wc ) {
		if( const auto v = so_violation( prec, wc, points ) ) {
			throw Error( Errc::AxiomViolation, *v );
		}
		return SoStructure{ std::move( points ), std::move( prec ), std::move( wc ) };
	}

	SoStructure parse_so_text( const std::string_view text ) {
		const SectionedSpec spec = parse_sections( text, "carrier", { "prec", "wc" } );
		return validate_so(
			spec.names,
			relation_from_names( spec.names, spec.pairs.at( "prec" ) ),
			relation_from_names( spec.names, spec.pairs.at( "wc" ) )
		);
	}

	RelStructure so_local_invariants( const Alphabet &alphabet, const StepSeq &s ) {
		const EnumeratedStepSequence en = enumerate_occurrences( s );
		const std::size_t n = en.size();
		RelStructure local{ Relation( n ), Relation( n ) };
		for( std::size_t x = 0; x < n; ++x ) {
			for( std::size_t y = 0; y < n; ++y ) {
				if( x == y ) {
					continue;
				}
				const std::size_t lx = en.label( x ), ly = en.label( y );
				if( en.position[ x ] < en.position[ y ] && !alphabet.ser( lx, ly ) ) {
					local.r1.set( x, y );
				}
				if( en.position[ x ] <= en.position[ y ] && !alphabet.ser( ly, lx ) ) {
					local.r2.set( x, y );
				}
			}
		}
		return local;
	}

	SoStructure so_of_stepseq( const Alphabet &alphabet, const StepSeq &s ) {
		if( alphabet.has_inl() ) {
			throw Error( Errc::InlNotEmpty, "so-structures are built over comtrace alphabets" );
		}
		const RelStructure local = so_local_invariants( alphabet, s );
		const RelStructure closed = diamond_closure( local.r1, local.r2 );
		const auto points = occurrence_names( alphabet, enumerate_occurrences( s ) );
		if( const auto v = so_violation( closed.r1, closed.r2, points ) ) {
			throw Error( Errc::InvariantBroken, "closure of " + render( alphabet, s ) + " is not a so-structure: " + *v );
		}
		return SoStructure{ points, closed.r1, closed.r2 };
	}

	SoStructure so_of_class( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		if( alphabet.has_inl() ) {
			throw Error( Errc::InlNotEmpty, "so-structures are built over comtrace alphabets" );
		}
		const ClassSet cls = enumerate_class( alphabet, s, cap );
		const EnumeratedStepSequence en = enumerate_occurrences( s );
		const std::size_t n = en.size();
		Relation prec = Relation::full( n ), wc = Relation::full( n );
		for( const auto &x : cls.members() ) {
			const Relation o = order_of( x );
			prec &= o;
			wc &= weak_extension( o );
		}
		return SoStructure{ occurrence_names( alphabet, en ), prec, wc };
	}

	std::vector< Relation > extensions_so( const SoStructure &so, const std::size_t cap ) {
		const std::size_t n = so.points.size();
		if( n > cap || n > 64 ) {
			throw Error( Errc::CarrierTooLarge, "carrier has " + std::to_string( n ) + " points, cap is " + std::to_string( cap ) );
		}
		LayerConstraints c;
		c.n = n;
		c.conflict.assign( n, 0 );
		for( std::size_t j = 0; j < n; ++j ) {
			c.strict_pred.push_back( so.prec.column_mask( j ) );
			c.weak_pred.push_back( so.wc.column_mask( j ) );
		}
		std::vector< Relation > out;
		for_each_layering( c, [ & ]( const std::vector< std::uint64_t > &layers ) {
			out.push_back( order_from_layers( n, layers ) );
		} );
		return out;
	}

	Alphabet alphabet_of_so( const SoStructure &so ) {
		const std::size_t n = so.points.size();
		const Relation inc = incomparability( so.prec );
		AlphabetSpec spec;
		spec.events = so.points;
		for( std::size_t a = 0; a < n; ++a ) {
			for( std::size_t b = 0; b < n; ++b ) {
				if( !inc.test( a, b ) ) {
					continue;
				}
				if( a < b ) {
					spec.sim.emplace_back( so.points[ a ], so.points[ b ] );
				}
				if( !so.wc.test( b, a ) ) {
					spec.ser.emplace_back( so.points[ a ], so.points[ b ] );
				}
			}
		}
		return validate_alphabet( spec, &so.points );
	}

	namespace {

		Relation ser_relation( const Alphabet &theta ) {
			Relation r( theta.size() );
			for( std::size_t a = 0; a < theta.size(); ++a ) {
				for( std::size_t b = 0; b < theta.size(); ++b ) {
					if( theta.ser( a, b ) ) {
						r.set( a, b );
					}
				}
			}
			return r;
		}

		std::vector< std::size_t > identity_labels( const std::size_t n ) {
			std::vector< std::size_t > out( n );
			for( std::size_t i = 0; i < n; ++i ) {
				out[ i ] = i;
			}
			return out;
		}

	} // namespace

	SoStructure so_of_extension( const SoStructure &so, const Alphabet &theta, const Relation &order ) {
		const Relation ser = ser_relation( theta );
		return SoStructure{ so.points, order - ser, weak_extension( order ) - ser.inverse() };
	}

	ComtraceOfSo comtrace_of_so( const SoStructure &so, const std::size_t carrier_cap, const std::size_t class_cap ) {
		Alphabet theta = alphabet_of_so( so );
		const auto labels = identity_labels( so.points.size() );
		std::vector< StepSeq > members;
		for( const auto &ext : extensions_so( so, carrier_cap ) ) {
			if( so_of_extension( so, theta, ext ) != so ) {
				throw Error( Errc::InvariantBroken, "extension " + render_strata( sequence_of( ext ), so.points ) + " does not reproduce the structure" );
			}
			members.push_back( steps_from_strata( sequence_of( ext ), labels ) );
		}
		if( members.empty() ) {
			throw Error( Errc::InvariantBroken, "structure has no stratified extension" );
		}
		ClassSet cls( theta, members );
		if( !( enumerate_class( theta, cls.representative(), class_cap ) == cls ) ) {
			throw Error( Errc::InvariantBroken, "extensions do not form one comtrace" );
		}
		return ComtraceOfSo{ std::move( theta ), std::move( cls ) };
	}

	std::optional< Pair > pi3_witness( const std::vector< Relation > &orders ) {
		if( orders.empty() ) {
			return std::nullopt;
		}
		const std::size_t n = orders.front().size();
		Relation seen( n ), together( n );
		for( const auto &o : orders ) {
			seen |= o;
			together |= incomparability( o );
		}
		for( std::size_t a = 0; a < n; ++a ) {
			for( std::size_t b = a + 1; b < n; ++b ) {
				if( seen.test( a, b ) && seen.test( b, a ) && !together.test( a, b ) ) {
					return Pair{ a, b };
				}
			}
		}
		return std::nullopt;
	}

	bool pi3_check( const std::vector< Relation > &orders ) {
		return !pi3_witness( orders ).has_value();
	}

} // namespace ct
