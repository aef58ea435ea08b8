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
#include <comtrace/lang.hpp>

#include <algorithm>

namespace ct {

	namespace {

		const StepSeq & least_member( const ClassSet &cls ) {
			return *std::min_element( cls.members().begin(), cls.members().end() );
		}

		void guard( const std::size_t size, const std::size_t cap ) {
			if( size > cap ) {
				throw Error( Errc::BoundExceeded, "language exceeds " + std::to_string( cap ) + " words" );
			}
		}

	} // namespace

	void GcLanguage::insert( const ClassSet &cls ) {
		classes_.emplace( least_member( cls ), cls );
	}

	bool GcLanguage::contains_class( const ClassSet &cls ) const {
		return classes_.count( least_member( cls ) ) != 0;
	}

	bool GcLanguage::covers( const StepSeq &s ) const {
		return std::any_of( classes_.begin(), classes_.end(), [ & ]( const auto &kv ) { return kv.second.contains( s ); } );
	}

	bool GcLanguage::subset_of( const GcLanguage &other ) const {
		return std::all_of( classes_.begin(), classes_.end(), [ & ]( const auto &kv ) { return other.classes_.count( kv.first ) != 0; } );
	}

	bool GcLanguage::operator==( const GcLanguage &other ) const {
		if( classes_.size() != other.classes_.size() ) {
			return false;
		}
		return subset_of( other );
	}

	GcLanguage lift( const Alphabet &alphabet, const Language &l, const std::size_t cap ) {
		GcLanguage out;
		for( const auto &u : l ) {
			if( !out.covers( u ) ) {
				out.insert( enumerate_class( alphabet, u, cap ) );
			}
		}
		return out;
	}

	Language flatten( const GcLanguage &g ) {
		Language out;
		for( const auto &kv : g.classes() ) {
			out.insert( kv.second.members().begin(), kv.second.members().end() );
		}
		return out;
	}

	Language concat( const Language &a, const Language &b, const std::size_t cap ) {
		Language out;
		for( const auto &u : a ) {
			for( const auto &v : b ) {
				StepSeq uv = u;
				uv.insert( uv.end(), v.begin(), v.end() );
				out.insert( std::move( uv ) );
				guard( out.size(), cap );
			}
		}
		return out;
	}

	GcLanguage concat( const Alphabet &alphabet, const GcLanguage &a, const GcLanguage &b, const std::size_t cap ) {
		GcLanguage out;
		for( const auto &x : a.classes() ) {
			for( const auto &y : b.classes() ) {
				out.insert( compose_classes( alphabet, x.second.representative(), y.second.representative(), cap ) );
			}
		}
		return out;
	}

	Language unite( const Language &a, const Language &b ) {
		Language out = a;
		out.insert( b.begin(), b.end() );
		return out;
	}

	GcLanguage unite( const GcLanguage &a, const GcLanguage &b ) {
		GcLanguage out = a;
		for( const auto &kv : b.classes() ) {
			out.insert( kv.second );
		}
		return out;
	}

	Language star( const Language &l, const std::size_t n, const std::size_t cap ) {
		Language out{ StepSeq{} };
		Language layer{ StepSeq{} };
		for( std::size_t k = 1; k <= n; ++k ) {
			layer = concat( layer, l, cap );
			out.insert( layer.begin(), layer.end() );
			guard( out.size(), cap );
		}
		return out;
	}

	GcLanguage star( const Alphabet &alphabet, const GcLanguage &g, const std::size_t n, const std::size_t cap ) {
		GcLanguage unit;
		unit.insert( ClassSet( alphabet, { StepSeq{} } ) );
		GcLanguage out = unit;
		GcLanguage layer = unit;
		for( std::size_t k = 1; k <= n; ++k ) {
			layer = concat( alphabet, layer, g, cap );
			out = unite( out, layer );
		}
		return out;
	}

	Language prefix_closure( const Language &l ) {
		Language out;
		for( const auto &w : l ) {
			for( std::size_t k = 0; k <= w.size(); ++k ) {
				out.insert( StepSeq( w.begin(), w.begin() + static_cast< std::ptrdiff_t >( k ) ) );
			}
		}
		return out;
	}

	Alphabet priority_alphabet() {
		AlphabetSpec spec;
		spec.events = { "a", "b", "c" };
		spec.sim = { { "a", "c" } };
		spec.ser = { { "c", "a" } };
		return validate_alphabet( spec );
	}

	Language priority_language( const std::size_t bound ) {
		const Alphabet theta = priority_alphabet();
		const Step a = bit( *theta.find( "a" ) ), b = bit( *theta.find( "b" ) ), c = bit( *theta.find( "c" ) );
		// {c}* adds nothing beyond the factor {c} once the outer star applies
		const Language factors{ StepSeq{ c }, StepSeq{ a, b }, StepSeq{ a | c, b } };
		// words of length bound + 1 cover every prefix of length <= bound
		Language words{ StepSeq{} };
		Language frontier{ StepSeq{} };
		while( !frontier.empty() ) {
			Language next;
			for( const auto &w : frontier ) {
				for( const auto &f : factors ) {
					if( w.size() + f.size() > bound + 1 ) {
						continue;
					}
					StepSeq wf = w;
					wf.insert( wf.end(), f.begin(), f.end() );
					if( words.insert( wf ).second ) {
						next.insert( std::move( wf ) );
					}
				}
			}
			frontier = std::move( next );
		}
		Language out;
		for( const auto &p : prefix_closure( words ) ) {
			if( p.size() <= bound ) {
				out.insert( p );
			}
		}
		return out;
	}

} // namespace ct
