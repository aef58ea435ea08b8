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

#include <comtrace/canonical.hpp>
#include <comtrace/error.hpp>
#include <comtrace/gsostruct.hpp>
#include <comtrace/structio.hpp>

#include <bit>

namespace ct {

	std::optional< std::string > gso_violation( const Relation &cmt, const Relation &wc, const std::vector< std::string > &points ) {
		const std::size_t n = wc.size();
		if( cmt.size() != n || points.size() != n ) {
			return std::string( "carrier mismatch" );
		}
		for( std::size_t a = 0; a < n; ++a ) {
			if( wc.test( a, a ) ) {
				return "wc reflexive at (" + points[ a ] + ")";
			}
			if( cmt.test( a, a ) ) {
				return "cmt reflexive at (" + points[ a ] + ")";
			}
		}
		for( const auto &[ a, b ] : cmt.pairs() ) {
			if( !cmt.test( b, a ) ) {
				return "cmt asymmetric at (" + points[ a ] + "," + points[ b ] + ")";
			}
		}
		if( const auto v = so_violation( cmt & wc, wc, points ) ) {
			return "induced so-structure: " + *v;
		}
		return std::nullopt;
	}

	GsoStructure validate_gso( std::vector< std::string > points, Relation cmt, Relation wc ) {
		if( const auto v = gso_violation( cmt, wc, points ) ) {
			throw Error( Errc::AxiomViolation, *v );
		}
		return GsoStructure{ std::move( points ), std::move( cmt ), std::move( wc ) };
	}

	GsoStructure parse_gso_text( const std::string_view text ) {
		const SectionedSpec spec = parse_sections( text, "carrier", { "cmt", "wc" } );
		return validate_gso(
			spec.names,
			symmetric_closure( relation_from_names( spec.names, spec.pairs.at( "cmt" ) ) ),
			relation_from_names( spec.names, spec.pairs.at( "wc" ) )
		);
	}

	GsoStructure gso_of_so( const SoStructure &so ) {
		return GsoStructure{ so.points, symmetric_closure( so.prec ), so.wc };
	}

	InvariantTriple invariant_relations( const Alphabet &alphabet, const StepSeq &s ) {
		const EnumeratedStepSequence en = enumerate_occurrences( s );
		const std::size_t n = en.size();
		auto ser = [ & ]( const std::size_t x, const std::size_t y ) { return alphabet.ser( en.label( x ), en.label( y ) ); };
		auto inl = [ & ]( const std::size_t x, const std::size_t y ) { return alphabet.inl( en.label( x ), en.label( y ) ); };
		auto before = [ & ]( const std::size_t x, const std::size_t y ) { return en.position[ x ] < en.position[ y ]; };
		auto weakly_before = [ & ]( const std::size_t x, const std::size_t y ) { return x != y && en.position[ x ] <= en.position[ y ]; };

		InvariantTriple t{ Relation( n ), Relation( n ), Relation( n ) };
		for( std::size_t x = 0; x < n; ++x ) {
			for( std::size_t y = 0; y < n; ++y ) {
				if( inl( x, y ) ) {
					t.cmt.set( x, y );
				}
				if( weakly_before( x, y ) && !ser( y, x ) && !inl( y, x ) ) {
					t.wc.set( x, y );
				}
			}
		}

		const Relation wc_star = reflexive_transitive_closure( t.wc );
		const Relation tight = symmetric_intersection( wc_star );
		const Relation squeezed = t.cmt & compose( compose( tight, complement( t.cmt ) ), tight );

		for( std::size_t x = 0; x < n; ++x ) {
			for( std::size_t y = 0; y < n; ++y ) {
				if( !before( x, y ) ) {
					continue;
				}
				bool hit = !ser( x, y ) && !inl( x, y );
				hit = hit || squeezed.test( x, y );
				if( !hit && ser( x, y ) ) {
					for( std::size_t d = 0; d < n && !hit; ++d ) {
						if( !wc_star.test( x, d ) || !wc_star.test( d, y ) ) {
							continue;
						}
						for( std::size_t g = 0; g < n; ++g ) {
							if( before( d, g ) && !ser( d, g ) && wc_star.test( x, g ) && wc_star.test( g, y ) ) {
								hit = true;
								break;
							}
						}
					}
				}
				if( hit ) {
					t.prec.set( x, y );
				}
			}
		}
		return t;
	}

	GsoStructure gso_of_stepseq( const Alphabet &alphabet, const StepSeq &s ) {
		const InvariantTriple t = invariant_relations( alphabet, s );
		const RelStructure closed = bowtie_closure( t.prec | t.cmt, t.prec | t.wc );
		const auto points = occurrence_names( alphabet, enumerate_occurrences( s ) );
		if( const auto v = gso_violation( closed.r1, closed.r2, points ) ) {
			throw Error( Errc::InvariantBroken, "closure of " + render( alphabet, s ) + " is not a gso-structure: " + *v );
		}
		return GsoStructure{ points, closed.r1, closed.r2 };
	}

	GsoStructure gso_of_class( const Alphabet &alphabet, const StepSeq &s, const std::size_t cap ) {
		const ClassSet cls = enumerate_class( alphabet, s, cap );
		const EnumeratedStepSequence en = enumerate_occurrences( s );
		const std::size_t n = en.size();
		Relation cmt = Relation::full( n ), wc = Relation::full( n );
		for( const auto &x : cls.members() ) {
			const Relation o = order_of( x );
			cmt &= symmetric_closure( o );
			wc &= weak_extension( o );
		}
		return GsoStructure{ occurrence_names( alphabet, en ), cmt, wc };
	}

	std::vector< Relation > extensions_gso( const GsoStructure &g, const std::size_t cap ) {
		const std::size_t n = g.points.size();
		if( n > cap || n > 64 ) {
			throw Error( Errc::CarrierTooLarge, "carrier has " + std::to_string( n ) + " points, cap is " + std::to_string( cap ) );
		}
		const Relation strict = g.cmt & g.wc;
		LayerConstraints c;
		c.n = n;
		for( std::size_t j = 0; j < n; ++j ) {
			c.strict_pred.push_back( strict.column_mask( j ) );
			c.weak_pred.push_back( g.wc.column_mask( j ) );
			c.conflict.push_back( g.cmt.row_mask( j ) );
		}
		std::vector< Relation > out;
		for_each_layering( c, [ & ]( const std::vector< std::uint64_t > &layers ) {
			out.push_back( order_from_layers( n, layers ) );
		} );
		return out;
	}

	Alphabet alphabet_of_gso( const GsoStructure &g ) {
		const std::size_t n = g.points.size();
		AlphabetSpec spec;
		spec.events = g.points;
		for( std::size_t a = 0; a < n; ++a ) {
			for( std::size_t b = 0; b < n; ++b ) {
				if( a == b ) {
					continue;
				}
				if( !g.cmt.test( a, b ) ) {
					if( a < b ) {
						spec.sim.emplace_back( g.points[ a ], g.points[ b ] );
					}
					if( !g.wc.test( b, a ) ) {
						spec.ser.emplace_back( g.points[ a ], g.points[ b ] );
					}
				} else if( a < b && !g.wc.test( a, b ) && !g.wc.test( b, a ) ) {
					spec.inl.emplace_back( g.points[ a ], g.points[ b ] );
				}
			}
		}
		return validate_alphabet( spec, &g.points );
	}

	namespace {

		Relation relation_of( const Alphabet &theta, bool ( Alphabet::*pick )( std::size_t, std::size_t ) const noexcept ) {
			Relation r( theta.size() );
			for( std::size_t a = 0; a < theta.size(); ++a ) {
				for( std::size_t b = 0; b < theta.size(); ++b ) {
					if( ( theta.*pick )( a, b ) ) {
						r.set( a, b );
					}
				}
			}
			return r;
		}

	} // namespace

	GsoStructure gso_of_extension( const GsoStructure &g, const Alphabet &theta, const Relation &order ) {
		const Relation ser = relation_of( theta, &Alphabet::ser );
		const Relation inl = relation_of( theta, &Alphabet::inl );
		return GsoStructure{
			g.points,
			symmetric_closure( order - ser ) | inl,
			weak_extension( order ) - ( ser.inverse() | inl )
		};
	}

	GcomtraceOfGso gcomtrace_of_gso( const GsoStructure &g, const std::size_t carrier_cap, const std::size_t class_cap ) {
		Alphabet theta = alphabet_of_gso( g );
		std::vector< std::size_t > labels( g.points.size() );
		for( std::size_t i = 0; i < labels.size(); ++i ) {
			labels[ i ] = i;
		}
		std::vector< StepSeq > members;
		for( const auto &ext : extensions_gso( g, carrier_cap ) ) {
			if( gso_of_extension( g, theta, ext ) != g ) {
				throw Error( Errc::InvariantBroken, "extension " + render_strata( sequence_of( ext ), g.points ) + " does not reproduce the structure" );
			}
			members.push_back( steps_from_strata( sequence_of( ext ), labels ) );
		}
		if( members.empty() ) {
			throw Error( Errc::InvariantBroken, "structure has no stratified extension" );
		}
		ClassSet cls( theta, members );
		if( !( enumerate_class( theta, cls.representative(), class_cap ) == cls ) ) {
			throw Error( Errc::InvariantBroken, "extensions do not form one g-comtrace" );
		}
		return GcomtraceOfGso{ std::move( theta ), std::move( cls ) };
	}

	namespace {

		// subsets of mins with no cmt pair inside, grown in index order
		void admissible_subsets(
			const std::vector< std::size_t > &mins, const std::size_t k, const std::uint64_t chosen,
			const GsoStructure &g, const std::function< void( std::uint64_t ) > &visit
		) {
			if( k == mins.size() ) {
				if( chosen != 0 ) {
					visit( chosen );
				}
				return;
			}
			admissible_subsets( mins, k + 1, chosen, g, visit );
			const std::size_t p = mins[ k ];
			if( ( g.cmt.row_mask( p ) & chosen ) == 0 ) {
				admissible_subsets( mins, k + 1, chosen | ( std::uint64_t( 1 ) << p ), g, visit );
			}
		}

	} // namespace

	StepSeq semican( const GsoStructure &g, const std::vector< std::size_t > &labels, const Alphabet &alphabet ) {
		const std::size_t n = g.points.size();
		if( n > 64 ) {
			throw Error( Errc::CarrierTooLarge, "semican supports at most 64 points" );
		}
		const Relation prec = g.cmt & g.wc;
		std::uint64_t rest = n == 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << n ) - 1;
		StepSeq out;
		while( rest != 0 ) {
			std::vector< std::size_t > mins;
			for( std::uint64_t m = rest; m; m &= m - 1 ) {
				const auto p = static_cast< std::size_t >( std::countr_zero( m ) );
				if( ( prec.column_mask( p ) & rest ) == 0 ) {
					mins.push_back( p );
				}
			}
			if( mins.size() > kSemicanMinsCap ) {
				throw Error( Errc::CarrierTooLarge, std::to_string( mins.size() ) + " minimal points exceed the cap of " + std::to_string( kSemicanMinsCap ) );
			}
			std::optional< Step > best;
			std::uint64_t best_y = 0;
			admissible_subsets( mins, 0, 0, g, [ & ]( const std::uint64_t y ) {
				for( std::uint64_t m = y; m; m &= m - 1 ) {
					const auto p = static_cast< std::size_t >( std::countr_zero( m ) );
					if( ( g.wc.column_mask( p ) & rest & ~y ) != 0 ) {
						return;
					}
				}
				Step image = 0;
				for( std::uint64_t m = y; m; m &= m - 1 ) {
					image |= bit( labels[ static_cast< std::size_t >( std::countr_zero( m ) ) ] );
				}
				if( !alphabet.is_step( image ) || step_size( image ) != static_cast< std::size_t >( std::popcount( y ) ) ) {
					return;
				}
				if( !best || compare_steps( image, *best ) < 0 ) {
					best = image;
					best_y = y;
				}
			} );
			if( !best ) {
				throw Error( Errc::EmptyZ, "no admissible stratum after " + std::to_string( out.size() ) + " steps" );
			}
			out.push_back( *best );
			rest &= ~best_y;
		}
		return out;
	}

	namespace {

		// least part containing the event that can sit on the given side of the rest
		Step least_part( const Alphabet &alphabet, const Step a, const std::size_t event, const bool part_is_later ) {
			Step best = a;
			const Step others = a & ~bit( event );
			for( Step extra = others; ; extra = ( extra - 1 ) & others ) {
				const Step part = extra | bit( event );
				const Step rest = a & ~part;
				if( rest != 0 ) {
					const bool ok = part_is_later ? alphabet.ser_product( rest, part ) : alphabet.ser_product( part, rest );
					if( ok && step_size( part ) < step_size( best ) ) {
						best = part;
					}
				}
				if( extra == 0 ) {
					break;
				}
			}
			return best;
		}

	} // namespace

	Serializability step_serializability( const Alphabet &alphabet, const Step a, const std::size_t event ) {
		if( !alphabet.is_step( a ) || ( a & bit( event ) ) == 0 ) {
			throw Error( Errc::NotAStep, "expected a step containing the event" );
		}
		Serializability out;
		out.left = least_part( alphabet, a, event, true );
		out.right = least_part( alphabet, a, event, false );
		out.core = least_part( alphabet, out.left, event, false );

		auto seq = []( std::initializer_list< Step > parts ) {
			StepSeq s;
			for( const auto p : parts ) {
				if( p != 0 ) {
					s.push_back( p );
				}
			}
			return s;
		};
		out.left_witness = seq( { a & ~out.left, out.left } );
		out.right_witness = seq( { out.right, a & ~out.right } );
		out.core_witness = seq( { a & ~out.left, out.core, out.left & ~out.core } );

		const ClassSet cls = enumerate_class( alphabet, StepSeq{ a } );
		out.verified = cls.contains( out.left_witness ) && cls.contains( out.right_witness ) && cls.contains( out.core_witness );
		return out;
	}

} // namespace ct
