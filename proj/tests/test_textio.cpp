#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <revtsg/synth.hpp>
#include <revtsg/textio.hpp>

#include "test_helpers.hpp"

using namespace revtsg;

namespace
{

parse_errc parse_category( std::string const& text )
{
  try
  {
    parse( text );
  }
  catch ( parse_error const& e )
  {
    return e.kind();
  }
  FAIL( "text parsed without error:\n" << text );
  return parse_errc::syntax;
}

std::vector<std::string> split_lines( std::string const& text )
{
  std::vector<std::string> lines;
  std::size_t pos = 0u;
  while ( pos < text.size() )
  {
    auto const eol = text.find( '\n', pos );
    lines.push_back( text.substr( pos, eol - pos ) );
    pos = eol + 1u;
  }
  return lines;
}

std::string join_lines( std::vector<std::string> const& lines )
{
  std::string out;
  for ( auto const& l : lines )
  {
    out += l + "\n";
  }
  return out;
}

} // namespace

TEST_CASE( "write single Feynman", "[textio]" )
{
  circuit_builder b;
  auto const a = b.add_input( "a" );
  auto const bb = b.add_input( "b" );
  b.add_gate( gate_kind::feynman, {a, bb} );
  b.set_output( a, "a" );
  b.set_output( bb, "b" );
  CHECK( write( b.build() ) == ".v a,b\n.i a,b\n.o a,b\n.c\nBEGIN\nt2 a,b\nEND\n" );
}

TEST_CASE( "write full adder", "[textio]" )
{
  CHECK( write( make_full_adder() ) ==
         ".v a,b,zero,cin\n.i a,b,cin\n.o zero,cin\n.ol sum,carry\n.c 0\nBEGIN\ng4 a,b,zero,cin # level=1\nEND\n" );
}

TEST_CASE( "write empty circuit", "[textio]" )
{
  circuit_builder b;
  b.set_output( b.add_input( "a" ), "a" );
  b.set_output( b.add_input( "b" ), "b" );
  CHECK( write( b.build() ) == ".v a,b\n.i a,b\n.o a,b\n.c\nBEGIN\nEND\n" );
}

TEST_CASE( "every mnemonic", "[textio]" )
{
  CHECK( mnemonic( gate_kind::not_gate ) == "t1" );
  CHECK( mnemonic( gate_kind::feynman ) == "t2" );
  CHECK( mnemonic( gate_kind::toffoli ) == "t3" );
  CHECK( mnemonic( gate_kind::fredkin ) == "f3" );
  CHECK( mnemonic( gate_kind::tsg ) == "g4" );
  CHECK_FALSE( mnemonic( gate_kind::custom ).has_value() );
  for ( auto kind : primitive_gate_kinds )
  {
    CHECK( kind_from_mnemonic( *mnemonic( kind ) ) == kind );
  }
}

TEST_CASE( "round trip is byte identical", "[textio]" )
{
  std::vector<circuit> circuits{make_full_adder(), make_partial_products( 3u ).netlist};
  for ( uint32_t n = 1u; n <= 8u; ++n )
  {
    circuits.push_back( make_ripple_adder( n ) );
    circuits.push_back( make_multiplier( {n} ) );
  }
  for ( auto const& c : circuits )
  {
    auto const text = write( c );
    auto const again = parse( text );
    CHECK( write( again ) == text );
    CHECK( again.has_levels() == c.has_levels() );
  }
}

TEST_CASE( "parsed multiplier simulates identically", "[textio]" )
{
  auto const c = make_multiplier( {4u} );
  auto const p = parse( write( c ) );
  for ( uint64_t x = 0u; x < 16u; ++x )
  {
    for ( uint64_t y = 0u; y < 16u; ++y )
    {
      REQUIRE( test::evaluate( p, x, y ) == x * y );
    }
  }
}

TEST_CASE( "third-party style netlist", "[textio]" )
{
  auto const text = "# toffoli network\n"
                    ".v a,b,c,d\n"
                    ".i a,b,c\n"
                    ".o a,b,c,d\n"
                    ".c 0\n"
                    "\n"
                    "BEGIN\n"
                    "t1 a\n"
                    "t3 a, b, d   # just a comment\n"
                    "t2 d,c\n"
                    "f3 c,a,b\n"
                    "END\n";
  auto const c = parse( text );
  CHECK( c.num_lines() == 4u );
  CHECK( c.num_gates() == 4u );
  CHECK_FALSE( c.gates()[1].level.has_value() );
  CHECK( c.line( 3u ).is_constant() );
  auto const r = simulate( c, {{"a", false}, {"b", true}, {"c", false}} );
  /* a -> 1; d = ab = 1; c ^= d -> 1; c = 1 swaps a, b -> a = 1, b = 1 */
  CHECK( r.outputs.at( "a" ) );
  CHECK( r.outputs.at( "b" ) );
  CHECK( r.outputs.at( "c" ) );
  CHECK( r.outputs.at( "d" ) );
}

TEST_CASE( "parse error categories", "[textio]" )
{
  std::string const head = ".v x,y,z\n.i x,y\n.o z\n.c 0\nBEGIN\n";
  CHECK( parse_category( head + "f3 x,x,y\nEND\n" ) == parse_errc::duplicate_operand );
  CHECK( parse_category( head + "g5 a,b,c,d,e\nEND\n" ) == parse_errc::unknown_mnemonic );
  CHECK( parse_category( head + "t3 x,y\nEND\n" ) == parse_errc::arity_mismatch );
  CHECK( parse_category( head + "t2\nEND\n" ) == parse_errc::arity_mismatch );
  CHECK( parse_category( head + "t2 x,w\nEND\n" ) == parse_errc::undeclared_line );
  CHECK( parse_category( head + "t2 x,,y\nEND\n" ) == parse_errc::arity_mismatch );
  CHECK( parse_category( head + "t2 x,y,\nEND\n" ) == parse_errc::arity_mismatch );
  CHECK( parse_category( head + "t2 x,y\n" ) == parse_errc::syntax );
  CHECK( parse_category( head + "t2 x,y # level=q\nEND\n" ) == parse_errc::syntax );
  CHECK( parse_category( head + "END\nt2 x,y\n" ) == parse_errc::syntax );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o z\n.c 0,0\nBEGIN\nEND\n" ) == parse_errc::constant_length_mismatch );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o z\n.c\nBEGIN\nEND\n" ) == parse_errc::constant_length_mismatch );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o z\n.c 2\nBEGIN\nEND\n" ) == parse_errc::syntax );
  CHECK( parse_category( ".v x,y,z\n.i x,w\n.o z\n.c 0\nBEGIN\nEND\n" ) == parse_errc::undeclared_line );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o w\n.c 0\nBEGIN\nEND\n" ) == parse_errc::undeclared_line );
  CHECK( parse_category( ".v x,x,z\n.i x\n.o z\n.c 0,0\nBEGIN\nEND\n" ) == parse_errc::syntax );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o z\n.ol p,q\n.c 0\nBEGIN\nEND\n" ) == parse_errc::syntax );
  CHECK( parse_category( ".v x,y,z\n.i x,y\n.o z\n.c 0\n.q 1\nBEGIN\nEND\n" ) == parse_errc::syntax );
  CHECK( parse_category( "" ) == parse_errc::syntax );
}

TEST_CASE( "parse errors carry line numbers", "[textio]" )
{
  try
  {
    parse( ".v x,y,z\n.i x,y\n.o z\n.c 0\nBEGIN\nt2 x,y\n\nf3 x,x,y\nEND\n" );
    FAIL( "expected parse_error" );
  }
  catch ( parse_error const& e )
  {
    CHECK( e.line() == 8u );
    CHECK( e.kind() == parse_errc::duplicate_operand );
  }
}

TEST_CASE( "deleting any header line is rejected", "[textio]" )
{
  for ( auto const& c : {make_full_adder(), make_ripple_adder( 4u ), make_multiplier( {4u} )} )
  {
    auto const lines = split_lines( write( c ) );
    for ( std::size_t i = 0u; i < lines.size(); ++i )
    {
      if ( lines[i].front() != '.' || lines[i].starts_with( ".ol" ) )
      {
        continue;
      }
      auto mutated = lines;
      mutated.erase( mutated.begin() + i );
      INFO( "deleted " << lines[i] );
      CHECK( parse_category( join_lines( mutated ) ) == parse_errc::syntax );
    }
  }
}

TEST_CASE( "changing a mnemonic arity is rejected", "[textio]" )
{
  auto const lines = split_lines( write( make_multiplier( {4u} ) ) );
  std::vector<std::pair<std::string, std::string>> swaps{{"f3 ", "g4 "}, {"g4 ", "f3 "}, {"t2 ", "t3 "}, {"t2 ", "t1 "}};
  for ( auto const& [from, to] : swaps )
  {
    auto const it = std::find_if( lines.begin(), lines.end(), [&]( auto const& l ) { return l.starts_with( from ); } );
    REQUIRE( it != lines.end() );
    auto mutated = lines;
    auto& target = mutated[it - lines.begin()];
    target.replace( 0, 3, to );
    CHECK( parse_category( join_lines( mutated ) ) == parse_errc::arity_mismatch );
  }
}

TEST_CASE( "writer is deterministic", "[textio]" )
{
  CHECK( write( make_multiplier( {5u} ) ) == write( make_multiplier( {5u} ) ) );
}
