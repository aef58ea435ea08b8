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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "fixtures.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <comtrace/canonical.hpp>
#include <comtrace/error.hpp>
#include <comtrace/gsostruct.hpp>
#include <comtrace/lang.hpp>
#include <comtrace/sostruct.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

namespace {

	using Clock = std::chrono::steady_clock;
	using Texts = std::set< std::string >;

	struct Tally {
		std::size_t checks = 0;
		std::size_t fails = 0;
		std::string first;

		void operator()( const bool ok, const std::string &what ) {
			++checks;
			if( !ok && fails++ == 0 ) {
				first = what;
			}
		}
	};

	struct Instance {
		ct::Alphabet theta;
		ct::StepSeq s;
		std::string name;
	};

	Instance make( const ct::Alphabet &theta, const std::string &text, const std::string &name ) {
		return { theta, fx::seq( theta, text ), name + " " + text };
	}

	std::vector< Instance > comtrace_fixtures() {
		const auto tr = fx::trace_bc();
		return {
			make( fx::theta1(), "{a}{b,c}", "th1" ),
			make( fx::theta2(), "{a,b}{c}{a}", "th2" ),
			make( fx::theta2(), "{e}{a,d}{a,c}", "th2" ),
			make( fx::theta2(), "{a,b}{c}{a}{e}{a,d}{a,c}", "th2" ),
			make( fx::theta4(), "{a,b}{c}{a,d}", "th4" ),
			make( fx::theta8(), "{a,c}{b}", "th8" ),
			{ tr, ct::lift_word( fx::word( tr, "abcbca" ) ), "trace abcbca" }
		};
	}

	std::vector< Instance > gcomtrace_fixtures() {
		return {
			make( fx::theta3(), "{a,c}{b}", "th3" ),
			make( fx::theta5(), "{a,b}{c}{a,d}", "th5" ),
			make( fx::theta6(), "{a}{b}{c}", "th6" ),
			make( fx::theta7(), "{a}{b,c,d,e}", "th7" )
		};
	}

	std::vector< Instance > all_fixtures() {
		auto out = comtrace_fixtures();
		for( auto &i : gcomtrace_fixtures() ) {
			out.push_back( std::move( i ) );
		}
		return out;
	}

	std::vector< Instance > random_instances( const std::uint64_t seed, const std::size_t n, const bool with_inl, const std::size_t max_len ) {
		gen::Rng rng( seed );
		std::vector< Instance > out;
		for( std::size_t k = 0; k < n; ++k ) {
			auto t = gen::alphabet( rng, 4, with_inl );
			auto s = gen::stepseq( rng, t, max_len, 7 );
			out.push_back( { t, s, "random #" + std::to_string( k ) } );
		}
		return out;
	}

	std::string label( const Instance &i ) {
		return i.name + " = " + ct::render( i.theta, i.s );
	}

	std::set< ct::StepSeq > member_set( const ct::ClassSet &cls ) {
		return { cls.members().begin(), cls.members().end() };
	}

	std::vector< ct::Relation > member_orders( const ct::ClassSet &cls ) {
		std::vector< ct::Relation > out;
		for( const auto &m : cls.members() ) {
			out.push_back( ct::order_of( m ) );
		}
		return out;
	}

	/** Members of a class over point events, mapped back to the labels of s. */
	std::set< ct::StepSeq > relabel( const ct::ClassSet &cls, const ct::StepSeq &s ) {
		const auto labels = ct::enumerate_occurrences( s ).labels();
		std::set< ct::StepSeq > out;
		for( const auto &m : cls.members() ) {
			ct::StepSeq r;
			for( const auto step : m ) {
				ct::Step x = 0;
				for( const auto p : ct::step_members( step ) ) {
					x |= ct::bit( labels[ p ] );
				}
				r.push_back( x );
			}
			out.insert( r );
		}
		return out;
	}

	ct::StepSeq pick_same_counts( gen::Rng &rng, const ct::Alphabet &t, const ct::StepSeq &s ) {
		const auto pool = oracle::same_counts( t, s );
		return pool[ gen::below( rng, pool.size() ) ];
	}

	// 1
	void class_enumeration( Tally &tally ) {
		auto timed = [ & ]( const std::string &what, const std::function< bool() > &body ) {
			const auto start = Clock::now();
			const bool ok = body();
			const double secs = std::chrono::duration< double >( Clock::now() - start ).count();
			tally( ok, what );
			tally( secs < 1.0, what + " took " + std::to_string( secs ) + " s" );
		};
		const Texts x1 = { "{a,b}{c}{a}", "{a}{b}{c}{a}", "{b}{a}{c}{a}", "{b}{a,c}{a}" };
		const Texts x2 = { "{e}{a,d}{a,c}", "{e}{a,d}{a}{c}" };
		timed( "th1 [{a}{b,c}]", [] {
			const auto t = fx::theta1();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{a}{b,c}" ) ) ) == Texts{ "{a}{b,c}", "{a}{b}{c}" };
		} );
		timed( "th2 x1", [ & ] {
			const auto t = fx::theta2();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{a,b}{c}{a}" ) ) ) == x1;
		} );
		timed( "th2 x2", [ & ] {
			const auto t = fx::theta2();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{e}{a,d}{a,c}" ) ) ) == x2;
		} );
		timed( "th2 x3 = x1 x2", [ & ] {
			const auto t = fx::theta2();
			const auto x3 = ct::compose_classes( t, fx::seq( t, "{a,b}{c}{a}" ), fx::seq( t, "{e}{a,d}{a,c}" ) );
			Texts expect;
			for( const auto &a : x1 ) {
				for( const auto &b : x2 ) {
					expect.insert( a + b );
				}
			}
			return x3.size() == 8 && fx::texts( x3 ) == expect;
		} );
		timed( "th3 [{a,c}{b}]", [] {
			const auto t = fx::theta3();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{a,c}{b}" ) ) ) == Texts{
				"{a}{b}{c}", "{a}{c}{b}", "{b}{a}{c}", "{b}{c}{a}", "{c}{a}{b}", "{c}{b}{a}",
				"{a,c}{b}", "{b,c}{a}", "{b}{a,c}", "{a}{b,c}" };
		} );
		timed( "th4 [{a,b}{c}{a,d}]", [] {
			const auto t = fx::theta4();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{a,b}{c}{a,d}" ) ) ) == Texts{
				"{a,b}{c}{a,d}", "{a}{b}{c}{a,d}", "{a}{b,c}{a,d}", "{b}{a}{c}{a,d}" };
		} );
		timed( "th5 [{a,b}{c}{a,d}]", [] {
			const auto t = fx::theta5();
			return fx::texts( ct::enumerate_class( t, fx::seq( t, "{a,b}{c}{a,d}" ) ) ) == Texts{
				"{a,b}{c}{a,d}", "{a}{b}{c}{a,d}", "{a}{b,c}{a,d}", "{b}{a}{c}{a,d}", "{b}{c}{a}{a,d}", "{b,c}{a}{a,d}" };
		} );
		timed( "trace abcbca", [] {
			const auto t = fx::trace_bc();
			const auto cls = ct::enumerate_class( t, ct::lift_word( fx::word( t, "abcbca" ) ) );
			Texts words;
			for( const auto &m : cls.members() ) {
				if( m.size() == 6 ) {
					words.insert( ct::render( t, m ) );
				}
			}
			return words == Texts{
				"{a}{b}{c}{b}{c}{a}", "{a}{b}{c}{c}{b}{a}", "{a}{c}{b}{b}{c}{a}",
				"{a}{c}{b}{c}{b}{a}", "{a}{b}{b}{c}{c}{a}", "{a}{c}{c}{b}{b}{a}" };
		} );
	}

	// 2
	void canonical_theorems( Tally &tally ) {
		auto instances = random_instances( 2001, 1000, false, 4 );
		for( auto &i : comtrace_fixtures() ) {
			instances.push_back( std::move( i ) );
		}
		for( const auto &i : instances ) {
			const auto &t = i.theta;
			ct::ClassCache cache( t );
			const auto &cls = cache.get( i.s );
			const auto canon = ct::canonicalize( t, i.s );
			std::set< ct::StepSeq > canonical, gmc, mc;
			std::size_t shortest = i.s.size();
			for( const auto &m : cls.members() ) {
				shortest = std::min( shortest, m.size() );
				if( ct::is_canonical( t, m ) ) {
					canonical.insert( m );
				}
				if( ct::is_gmc( cache, m ) ) {
					gmc.insert( m );
				}
				if( ct::is_mc( cache, m ) ) {
					mc.insert( m );
				}
			}
			const auto what = label( i );
			tally( canonical.size() == 1, what + ": canonical members " + std::to_string( canonical.size() ) );
			tally( canonical == std::set< ct::StepSeq >{ canon }, what + ": rewrite result is not the canonical member" );
			tally( gmc == canonical, what + ": GMC set differs" );
			tally( mc == canonical, what + ": MC set differs" );
			tally( ct::g_canonical( t, i.s ) == canon, what + ": g-canonical differs" );
			tally( oracle::lex_min( t, cls.members() ) == canon, what + ": oracle lex-min differs" );
			tally( canon.size() == shortest, what + ": canonical member is not shortest" );
			tally( ct::canonicalize_by_class( t, i.s ) == canon, what + ": class filter differs" );
		}
	}

	// 3
	void gmc_claims( Tally &tally ) {
		const auto t = fx::theta7();
		ct::ClassCache cache( t );
		const auto &cls = cache.get( fx::seq( t, "{a}{b,c,d,e}" ) );
		Texts gmc, shortest;
		std::size_t len = SIZE_MAX;
		for( const auto &m : cls.members() ) {
			len = std::min( len, m.size() );
		}
		for( const auto &m : cls.members() ) {
			if( ct::is_gmc( cache, m ) ) {
				gmc.insert( ct::render( t, m ) );
			}
			if( m.size() == len ) {
				shortest.insert( ct::render( t, m ) );
			}
		}
		tally( gmc == Texts{ "{b,d,e}{a}{c}" }, "GMC members of th7 class" );
		tally( shortest == Texts{ "{a}{b,c,d,e}" }, "shortest members of th7 class" );
		tally( ct::is_mc( cache, fx::seq( t, "{a}{b,c,d,e}" ) ), "{a}{b,c,d,e} is MC" );
	}

	// 4
	void so_round_trips( Tally &tally ) {
		auto instances = random_instances( 4001, 500, false, 4 );
		for( auto &i : comtrace_fixtures() ) {
			instances.push_back( std::move( i ) );
		}
		gen::Rng rng( 4002 );
		for( const auto &i : instances ) {
			const auto &t = i.theta;
			const auto what = label( i );
			const auto cls = ct::enumerate_class( t, i.s );
			const auto so = ct::so_of_stepseq( t, i.s );
			tally( so == ct::so_of_class( t, i.s ), what + ": S^{u} != S_[u]" );
			const auto u = pick_same_counts( rng, t, i.s );
			tally( cls.contains( u ) == ( ct::so_of_stepseq( t, u ) == so ), what + ": equivalence vs structure equality at " + ct::render( t, u ) );
			const auto exts = ct::extensions_so( so, 64 );
			tally( oracle::as_set( exts ) == oracle::as_set( member_orders( cls ) ), what + ": extensions differ from member orders" );
			const auto back = ct::comtrace_of_so( so, 64 );
			tally( relabel( back.cls, i.s ) == member_set( cls ), what + ": CT(S) differs from the class" );
			for( const auto &ext : exts ) {
				tally( ct::so_of_extension( so, back.theta, ext ) == so, what + ": S^{ext} != S" );
			}
		}
		const auto fig = fx::figure_so();
		const auto back = ct::comtrace_of_so( fig );
		tally( fx::texts( back.cls ) == Texts{ "{a,b}{c}{d,e}", "{a}{b}{c}{d,e}", "{a}{b,c}{d,e}", "{b}{a}{c}{d,e}" }, "figure structure: CT(S)" );
		const auto again = ct::so_of_class( back.theta, back.cls.representative() );
		tally( again.prec == fig.prec && again.wc == fig.wc, "figure structure: S_{CT(S)} != S" );
		for( const auto &ext : ct::extensions_so( fig ) ) {
			tally( ct::so_of_extension( fig, back.theta, ext ) == fig, "figure structure: S^{ext} != S" );
		}
	}

	// 5
	void gso_round_trips( Tally &tally ) {
		auto instances = random_instances( 5001, 500, true, 3 );
		for( auto &i : gcomtrace_fixtures() ) {
			instances.push_back( std::move( i ) );
		}
		gen::Rng rng( 5002 );
		for( const auto &i : instances ) {
			const auto &t = i.theta;
			const auto what = label( i );
			const auto cls = ct::enumerate_class( t, i.s );
			const auto g = ct::gso_of_stepseq( t, i.s );
			tally( g == ct::gso_of_class( t, i.s ), what + ": G^{s} != G_[s]" );
			const auto u = pick_same_counts( rng, t, i.s );
			tally( cls.contains( u ) == ( ct::gso_of_stepseq( t, u ) == g ), what + ": equivalence vs structure equality at " + ct::render( t, u ) );
			const auto exts = ct::extensions_gso( g, 64 );
			tally( oracle::as_set( exts ) == oracle::as_set( member_orders( cls ) ), what + ": extensions differ from member orders" );
			const auto back = ct::gcomtrace_of_gso( g, 64 );
			tally( relabel( back.cls, i.s ) == member_set( cls ), what + ": GCT(G) differs from the class" );
			const auto labels = ct::enumerate_occurrences( i.s ).labels();
			for( const auto &ext : exts ) {
				tally( ct::gso_of_extension( g, back.theta, ext ) == g, what + ": G^{ext} != G" );
				const auto w = ct::steps_from_strata( ct::sequence_of( ext ), labels );
				tally( ct::gso_of_stepseq( t, w ) == g, what + ": extension " + ct::render( t, w ) + " regenerates another structure" );
			}
		}
		const auto fig = fx::figure_gso();
		const auto back = ct::gcomtrace_of_gso( fig );
		const auto again = ct::gso_of_class( back.theta, back.cls.representative() );
		tally( again.cmt == fig.cmt && again.wc == fig.wc, "figure structure: G_{GCT(G)} != G" );
		for( const auto &ext : ct::extensions_gso( fig ) ) {
			tally( ct::gso_of_extension( fig, back.theta, ext ) == fig, "figure structure: G^{ext} != G" );
		}
	}

	// 6
	void positional( Tally &tally ) {
		auto instances = random_instances( 6001, 500, true, 4 );
		for( auto &i : all_fixtures() ) {
			instances.push_back( std::move( i ) );
		}
		for( const auto &i : instances ) {
			const auto what = label( i );
			const auto cls = ct::enumerate_class( i.theta, i.s );
			const auto g = ct::gso_of_stepseq( i.theta, i.s );
			const auto pos = oracle::positional( cls.members() );
			const auto prec = g.cmt & g.wc;
			tally( g.cmt == pos.always_apart, what + ": cmt vs always apart" );
			tally( g.wc == pos.never_after, what + ": wc vs never after" );
			tally( prec == pos.always_before, what + ": prec vs always before" );
			const auto carrier = oracle::carrier( i.s );
			for( std::size_t a = 0; a < carrier.size(); ++a ) {
				for( std::size_t b = a + 1; b < carrier.size(); ++b ) {
					if( carrier[ a ].first == carrier[ b ].first ) {
						tally( prec.test( a, b ), what + ": same-label occurrences not ordered" );
					}
				}
			}
		}
	}

	// 7
	void semican_lex_min( Tally &tally ) {
		auto instances = random_instances( 7001, 200, true, 4 );
		for( auto &i : all_fixtures() ) {
			instances.push_back( std::move( i ) );
		}
		for( const auto &i : instances ) {
			const auto g = ct::gso_of_stepseq( i.theta, i.s );
			const auto sc = ct::semican( g, ct::enumerate_occurrences( i.s ).labels(), i.theta );
			const auto cls = ct::enumerate_class( i.theta, i.s );
			tally( sc == oracle::lex_min( i.theta, cls.members() ), label( i ) + ": semican " + ct::render( i.theta, sc ) );
		}
	}

	// 8
	void szpilrajn( Tally &tally ) {
		for( std::size_t n = 0; n <= 4; ++n ) {
			const auto totals = oracle::total_orders( n );
			const auto strat = oracle::stratified_orders( n );
			for( const auto &p : oracle::posets( n ) ) {
				const auto what = "poset on " + std::to_string( n ) + " points";
				tally( ct::szpilrajn_check( p ), what + ": library check" );
				std::vector< ct::Relation > t_ext, s_ext;
				for( const auto &o : totals ) {
					if( p.subset_of( o ) ) {
						t_ext.push_back( o );
					}
				}
				for( const auto &o : strat ) {
					if( p.subset_of( o ) ) {
						s_ext.push_back( o );
					}
				}
				tally( ct::intersection_of( t_ext, n ) == p, what + ": total extensions" );
				tally( ct::intersection_of( s_ext, n ) == p, what + ": stratified extensions" );
			}
		}
		for( const auto &i : random_instances( 8001, 300, false, 4 ) ) {
			const auto so = ct::so_of_stepseq( i.theta, i.s );
			const auto exts = ct::extensions_so( so, 64 );
			std::vector< ct::Relation > weak;
			for( const auto &e : exts ) {
				weak.push_back( ct::weak_extension( e ) );
			}
			const auto n = so.points.size();
			tally( ct::intersection_of( exts, n ) == so.prec && ct::intersection_of( weak, n ) == so.wc, label( i ) + ": so reconstruction" );
		}
		for( const auto &i : random_instances( 8002, 300, true, 4 ) ) {
			const auto g = ct::gso_of_stepseq( i.theta, i.s );
			const auto exts = ct::extensions_gso( g, 64 );
			std::vector< ct::Relation > sym, weak;
			for( const auto &e : exts ) {
				sym.push_back( ct::symmetric_closure( e ) );
				weak.push_back( ct::weak_extension( e ) );
			}
			const auto n = g.points.size();
			tally( ct::intersection_of( sym, n ) == g.cmt && ct::intersection_of( weak, n ) == g.wc, label( i ) + ": gso reconstruction" );
		}
	}

	// 9
	void pi3( Tally &tally ) {
		for( const auto &i : random_instances( 9001, 300, false, 4 ) ) {
			tally( ct::pi3_check( ct::extensions_so( ct::so_of_stepseq( i.theta, i.s ), 64 ) ), label( i ) );
		}
		tally( ct::pi3_check( ct::extensions_so( fx::figure_so() ) ), "figure structure" );
		const auto t3 = fx::theta3();
		const auto s = fx::seq( t3, "{a,c}{b}" );
		const auto w = ct::pi3_witness( member_orders( ct::enumerate_class( t3, s ) ) );
		const auto names = ct::occurrence_names( t3, ct::enumerate_occurrences( s ) );
		tally( w.has_value() && names[ w->first ] == "a.1" && names[ w->second ] == "b.1", "th3 class witness (a.1, b.1)" );
	}

	// 10
	void closure_laws( Tally &tally ) {
		gen::Rng rng( 10001 );
		for( int k = 0; k < 1000; ++k ) {
			const std::size_t n = 1 + gen::below( rng, 6 );
			const auto what = "structure #" + std::to_string( k );
			const auto r1 = gen::irreflexive( rng, n, 0.2 );
			const auto r2 = gen::irreflexive( rng, n, 0.2 );
			const auto d = ct::diamond_closure( r1, r2 );
			tally( ct::diamond_closure( d.r1, d.r2 ) == d, what + ": diamond idempotence" );
			tally( ( ct::RelStructure{ r1, r2 } ).subset_of( d ), what + ": diamond extensivity" );
			const auto expect_prec = ct::compose( ct::compose( oracle::closure( r1 | r2, true ), r1 ), oracle::closure( r1 | r2, true ) );
			tally( d.r1 == expect_prec, what + ": diamond prec vs oracle" );

			// a so-structure from random stratified orders, then its bowtie counterpart
			std::vector< ct::Relation > orders;
			for( std::size_t j = 1 + gen::below( rng, 3 ); j > 0; --j ) {
				orders.push_back( gen::stratified( rng, n ) );
			}
			std::vector< ct::Relation > weak, sym;
			for( const auto &o : orders ) {
				weak.push_back( ct::weak_extension( o ) );
				sym.push_back( ct::symmetric_closure( o ) );
			}
			const auto prec = ct::intersection_of( orders, n );
			const auto wc = ct::intersection_of( weak, n );
			tally( !ct::so_violation( prec, wc, std::vector< std::string >( n, "x" ) ), what + ": intersection is not a so-structure" );
			tally( ct::diamond_closure( prec, wc ) == ( ct::RelStructure{ prec, wc } ), what + ": diamond fixed point" );
			const auto cmt = ct::intersection_of( sym, n );
			if( !ct::gso_violation( cmt, wc, std::vector< std::string >( n, "x" ) ) ) {
				tally( ct::bowtie_closure( cmt, wc ) == ( ct::RelStructure{ cmt, wc } ), what + ": bowtie fixed point" );
			}

			const auto b = ct::bowtie_closure( r1, r2 );
			const auto big1 = r1 | gen::irreflexive( rng, n, 0.1 );
			const auto big2 = r2 | gen::irreflexive( rng, n, 0.1 );
			tally( b.subset_of( ct::bowtie_closure( big1, big2 ) ), what + ": bowtie monotonicity" );
			const auto r3 = r1 & oracle::closure( r2, true );
			const auto d0 = ct::diamond_closure( r3, r2 );
			if( ct::diamond_yields_so( d0 ) ) {
				tally( d0.r1 == ( ( ct::symmetric_closure( d0.r1 ) | r1 ) & d0.r2 ), what + ": bowtie/diamond bridge" );
			}
		}
		for( const auto &i : random_instances( 10002, 200, true, 4 ) ) {
			const auto g = ct::gso_of_stepseq( i.theta, i.s );
			tally( ct::bowtie_closure( g.cmt, g.wc ) == ( ct::RelStructure{ g.cmt, g.wc } ), label( i ) + ": bowtie fixed point" );
		}
		const auto fig = fx::figure_gso();
		tally( ct::bowtie_closure( fig.cmt, fig.wc ) == ( ct::RelStructure{ fig.cmt, fig.wc } ), "figure structure: bowtie fixed point" );
	}

	ct::Language random_language( gen::Rng &rng, const ct::Alphabet &t ) {
		ct::Language l;
		for( std::size_t k = gen::below( rng, 9 ); k > 0; --k ) {
			l.insert( gen::stepseq( rng, t, 3, 5 ) );
		}
		return l;
	}

	// 11
	void language_identities( Tally &tally ) {
		gen::Rng rng( 11001 );
		for( int k = 0; k < 200; ++k ) {
			const auto what = "pair #" + std::to_string( k );
			const auto t = gen::alphabet( rng, 3, gen::coin( rng ) );
			const auto l1 = random_language( rng, t ), l2 = random_language( rng, t ), l3 = random_language( rng, t );
			const auto g1 = ct::lift( t, l1 ), g2 = ct::lift( t, l2 ), g3 = ct::lift( t, l3 );
			tally( ct::lift( t, {} ).size() == 0, what + ": 1" );
			tally( ct::concat( t, g1, g2 ) == ct::lift( t, ct::concat( l1, l2 ) ), what + ": 2" );
			tally( g1.subset_of( ct::lift( t, ct::unite( l1, l2 ) ) ), what + ": 3" );
			const auto flat = ct::flatten( g1 );
			tally( std::includes( flat.begin(), flat.end(), l1.begin(), l1.end() ), what + ": 4" );
			tally( ct::lift( t, flat ) == g1, what + ": 5" );
			tally( ct::unite( g1, g2 ) == ct::lift( t, ct::unite( l1, l2 ) ), what + ": 6" );
			tally( ct::unite( ct::unite( g1, g2 ), g3 ) == ct::lift( t, ct::unite( ct::unite( l1, l2 ), l3 ) ), what + ": 7" );
			tally( ct::star( t, g1, 2 ) == ct::lift( t, ct::star( l1, 2 ) ), what + ": 8" );
		}
		const auto t8 = ct::priority_alphabet();
		const auto cls = ct::enumerate_class( t8, fx::seq( t8, "{a,c}{b}" ) );
		tally( fx::texts( cls ) == Texts{ "{c}{a}{b}", "{a,c}{b}" }, "priority class" );
		tally( ct::lift( t8, ct::priority_language( 3 ) ).contains_class( cls ), "priority class in the lifted language" );
	}

	enum class Cmp { le, ge, lt, gt, eq, ne };

	bool holds( const Cmp r, const std::size_t x, const std::size_t y ) {
		switch( r ) {
			case Cmp::le: return x <= y;
			case Cmp::ge: return x >= y;
			case Cmp::lt: return x < y;
			case Cmp::gt: return x > y;
			case Cmp::eq: return x == y;
			case Cmp::ne: return x != y;
		}
		return false;
	}

	using Occ = std::pair< std::size_t, std::size_t >;

	bool holds_in_class( const std::vector< oracle::Positions > &members, const Cmp r, const Occ &a, const Occ &b ) {
		for( const auto &p : members ) {
			if( !holds( r, p.at( a ), p.at( b ) ) ) {
				return false;
			}
		}
		return true;
	}

	std::vector< oracle::Positions > class_positions( ct::ClassCache &cache, const ct::StepSeq &s ) {
		std::vector< oracle::Positions > out;
		for( const auto &m : cache.get( s ).members() ) {
			out.push_back( oracle::positions( m ) );
		}
		return out;
	}

	// 12
	void algebra( Tally &tally ) {
		auto instances = all_fixtures();
		for( auto &i : random_instances( 12001, 150, true, 4 ) ) {
			instances.push_back( std::move( i ) );
		}
		gen::Rng rng( 12002 );
		constexpr Cmp cmps[] = { Cmp::le, Cmp::ge, Cmp::lt, Cmp::gt, Cmp::eq, Cmp::ne };
		for( const auto &i : instances ) {
			const auto &t = i.theta;
			const auto what = label( i );
			ct::ClassCache cache( t );
			const auto &cls = cache.get( i.s );
			const auto wc = ct::weight_and_counts( i.s );
			for( const auto &u : cls.members() ) {
				const auto w = ct::weight_and_counts( u );
				tally( w.weight == wc.weight, what + ": 1" );
				tally( w.counts == wc.counts, what + ": 2" );
			}
			for( std::size_t e = 0; e < t.size(); ++e ) {
				const auto &rc = cache.get( ct::cancel( i.s, e, ct::Side::right ) );
				const auto &lc = cache.get( ct::cancel( i.s, e, ct::Side::left ) );
				for( const auto &u : cls.members() ) {
					tally( rc.contains( ct::cancel( u, e, ct::Side::right ) ), what + ": 3" );
					tally( lc.contains( ct::cancel( u, e, ct::Side::left ) ), what + ": 4" );
				}
			}
			for( int k = 0; k < 4; ++k ) {
				const ct::StepSeq x = { ct::bit( gen::below( rng, t.size() ) ) };
				const ct::StepSeq y = { ct::bit( gen::below( rng, t.size() ) ) };
				const auto v = pick_same_counts( rng, t, i.s );
				auto wrap = [ & ]( const ct::StepSeq &m ) {
					ct::StepSeq out = x;
					out.insert( out.end(), m.begin(), m.end() );
					out.insert( out.end(), y.begin(), y.end() );
					return out;
				};
				tally( cls.contains( v ) == cache.get( wrap( i.s ) ).contains( wrap( v ) ), what + ": 5" );
			}
			const ct::Step all = t.all_events();
			for( ct::Step d = 0; d <= all; ++d ) {
				if( ( d & ~all ) != 0 ) {
					continue;
				}
				const auto &pc = cache.get( ct::project( i.s, d ) );
				for( const auto &u : cls.members() ) {
					tally( pc.contains( ct::project( u, d ) ), what + ": 6" );
				}
			}

			// positional preservation under cancellation and projection
			const auto whole = class_positions( cache, i.s );
			const auto carrier = oracle::carrier( i.s );
			for( const auto &g : carrier ) {
				const std::size_t e = g.first;
				const bool first = g.second == 1;
				const bool last = g.second == wc.counts[ e ];
				const auto left = first ? class_positions( cache, ct::cancel( i.s, e, ct::Side::left ) ) : std::vector< oracle::Positions >{};
				const auto right = last ? class_positions( cache, ct::cancel( i.s, e, ct::Side::right ) ) : std::vector< oracle::Positions >{};
				for( const auto &a : carrier ) {
					for( const auto &b : carrier ) {
						if( a == b || a == g || b == g ) {
							continue;
						}
						auto shift = [ & ]( const Occ &o ) { return o.first == e ? Occ{ e, o.second - 1 } : o; };
						for( const auto r : cmps ) {
							const bool after = holds_in_class( whole, r, a, b );
							if( first && holds_in_class( left, r, shift( a ), shift( b ) ) ) {
								tally( after, what + ": left cancellation loses a positional relation" );
							}
							if( last && holds_in_class( right, r, a, b ) ) {
								tally( after, what + ": right cancellation loses a positional relation" );
							}
						}
					}
				}
			}
			for( ct::Step d = 1; d <= all; ++d ) {
				if( ( d & ~all ) != 0 ) {
					continue;
				}
				const auto proj = class_positions( cache, ct::project( i.s, d ) );
				for( const auto &a : carrier ) {
					for( const auto &b : carrier ) {
						if( a == b || !( ( d >> a.first ) & 1u ) || !( ( d >> b.first ) & 1u ) ) {
							continue;
						}
						for( const auto r : cmps ) {
							if( holds_in_class( proj, r, a, b ) ) {
								tally( holds_in_class( whole, r, a, b ), what + ": projection loses a positional relation" );
							}
						}
					}
				}
			}
		}
	}

	struct Criterion {
		int id;
		const char *title;
		double limit;    // seconds; 0 for none
		void ( *body )( Tally & );
	};

	const Criterion criteria[] = {
		{ 1, "class enumeration exactness", 0, class_enumeration },
		{ 2, "canonical-form theorems", 60, canonical_theorems },
		{ 3, "GMC claims on the five-event example", 0, gmc_claims },
		{ 4, "so-structure round trips", 120, so_round_trips },
		{ 5, "gso-structure round trips", 300, gso_round_trips },
		{ 6, "positional-invariant equivalences", 0, positional },
		{ 7, "semi-canonical construction equals lex-min", 0, semican_lex_min },
		{ 8, "Szpilrajn checks and reconstruction", 0, szpilrajn },
		{ 9, "simultaneity property of extension sets", 0, pi3 },
		{ 10, "closure-operator laws", 0, closure_laws },
		{ 11, "language identities", 0, language_identities },
		{ 12, "congruence-preservation algebra", 0, algebra },
	};

} // namespace

int main() {
	int failed = 0;
	for( const auto &c : criteria ) {
		Tally tally;
		const auto start = Clock::now();
		try {
			c.body( tally );
		} catch( const std::exception &e ) {
			tally( false, std::string( "exception: " ) + e.what() );
		}
		const double secs = std::chrono::duration< double >( Clock::now() - start ).count();
		if( c.limit > 0 && secs >= c.limit ) {
			tally( false, "time limit " + std::to_string( c.limit ) + " s exceeded" );
		}
		const bool ok = tally.fails == 0;
		failed += ok ? 0 : 1;
		std::printf( "%s %2d: %s (%.2f s, %zu checks", ok ? "PASS" : "FAIL", c.id, c.title, secs, tally.checks );
		if( ok ) {
			std::printf( ")\n" );
		} else {
			std::printf( ", %zu failed; first: %s)\n", tally.fails, tally.first.c_str() );
		}
		std::fflush( stdout );
	}
	return failed == 0 ? 0 : 1;
}
