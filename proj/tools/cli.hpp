#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <revtsg/revtsg.hpp>

namespace revtsg::cli
{

enum exit_code : int
{
  success = 0,
  verification_failure = 1,
  usage_error = 2
};

/* thrown for bad flag combinations; reported with exit code 2 */
struct usage : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline circuit load( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw usage( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse( ss.str() );
}

/* "product" when the outputs are exactly p0 .. p<m-1> by weight */
inline std::string output_word_name( circuit const& c )
{
  for ( std::size_t k = 0u; k < c.outputs().size(); ++k )
  {
    if ( c.line( c.outputs()[k] ).output->name != "p" + std::to_string( k ) )
    {
      return "value";
    }
  }
  return c.outputs().empty() ? "value" : "product";
}

struct verify_options
{
  std::string spec;
  uint32_t n = 0u;
  bool exhaustive = false;
  uint64_t samples = 0u;
  std::optional<uint64_t> seed;
};

inline int verify( circuit const& c, verify_options const& opt, std::ostream& out )
{
  bool const multiply = opt.spec == "multiply";
  auto const n = opt.n ? opt.n : word_width( c, "x" );
  if ( n == 0u || word_width( c, "x" ) != n || word_width( c, "y" ) != n )
  {
    throw usage( "circuit operands x*/y* do not have width " + std::to_string( n ) );
  }
  if ( opt.exhaustive == ( opt.samples > 0u ) )
  {
    throw usage( "pass exactly one of --exhaustive and --samples" );
  }
  if ( opt.exhaustive && multiply && n > 6u )
  {
    throw usage( "exhaustive multiply verification is bounded to n <= 6" );
  }
  if ( opt.exhaustive && !multiply && n > 10u )
  {
    throw usage( "exhaustive add verification is bounded to n <= 10" );
  }
  if ( n > 31u || c.outputs().size() > 64u )
  {
    throw usage( "operand width too large" );
  }
  auto const cin = c.find_line( "cin" );
  bool const has_cin = !multiply && cin && c.line( *cin ).is_input();

  input_assignment inputs;
  for ( auto id : c.inputs() )
  {
    inputs[c.line( id ).name] = false;
  }

  uint64_t const mask = ( uint64_t{1} << n ) - 1u;
  uint64_t checked = 0u;
  auto check = [&]( uint64_t x, uint64_t y, uint64_t carry ) {
    assign_word( inputs, "x", x, n );
    assign_word( inputs, "y", y, n );
    if ( has_cin )
    {
      inputs["cin"] = carry != 0u;
    }
    auto const expected = multiply ? x * y : x + y + carry;
    auto const got = output_word( c, run( c, initial_state( c, inputs ) ) );
    ++checked;
    if ( got != expected )
    {
      out << "FAIL x=" << x << " y=" << y;
      if ( has_cin )
      {
        out << " cin=" << carry;
      }
      out << " expected " << expected << " got " << got << "\n";
      return false;
    }
    return true;
  };

  uint64_t total = 0u;
  if ( opt.exhaustive )
  {
    total = ( mask + 1u ) * ( mask + 1u ) * ( has_cin ? 2u : 1u );
    for ( uint64_t x = 0u; x <= mask; ++x )
    {
      for ( uint64_t y = 0u; y <= mask; ++y )
      {
        for ( uint64_t carry = 0u; carry <= ( has_cin ? 1u : 0u ); ++carry )
        {
          if ( !check( x, y, carry ) )
          {
            return verification_failure;
          }
        }
      }
    }
  }
  else
  {
    auto const seed = opt.seed ? *opt.seed : std::random_device{}();
    out << "seed = " << seed << "\n";
    std::mt19937_64 rng( seed );
    total = opt.samples;
    for ( uint64_t k = 0u; k < opt.samples; ++k )
    {
      auto const x = rng() & mask;
      auto const y = rng() & mask;
      auto const carry = has_cin ? rng() & 1u : 0u;
      if ( !check( x, y, carry ) )
      {
        return verification_failure;
      }
    }
  }
  out << "pass (" << checked << "/" << total << ")\n";
  return success;
}

inline int run( std::vector<std::string> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{"Reversible TSG/Fredkin circuit toolkit"};
  app.require_subcommand( 1 );

  auto* synth = app.add_subcommand( "synth", "generate a netlist" );
  std::string kind;
  uint32_t width = 0u;
  std::string out_path;
  synth->add_option( "--kind", kind, "circuit kind" )
      ->required()
      ->check( CLI::IsMember( {"full-adder", "adder", "multiplier"} ) );
  auto* n_opt = synth->add_option( "--n", width, "operand width" );
  synth->add_option( "--out", out_path, "output netlist path" )->required();

  auto* simulate_cmd = app.add_subcommand( "simulate", "simulate a netlist" );
  std::string file;
  std::vector<std::string> assignments;
  uint64_t x = 0u, y = 0u;
  simulate_cmd->add_option( "file", file )->required();
  simulate_cmd->add_option( "--in", assignments, "name=bit assignments" )->delimiter( ',' );
  auto* sim_x = simulate_cmd->add_option( "--x", x, "operand on x0.." );
  auto* sim_y = simulate_cmd->add_option( "--y", y, "operand on y0.." );

  auto* verify_cmd = app.add_subcommand( "verify", "check a netlist against an arithmetic oracle" );
  verify_options vopt;
  uint64_t seed = 0u;
  verify_cmd->add_option( "file", file )->required();
  verify_cmd->add_option( "--spec", vopt.spec )->required()->check( CLI::IsMember( {"add", "multiply"} ) );
  verify_cmd->add_option( "--n", vopt.n, "operand width (default: width of x*)" );
  verify_cmd->add_flag( "--exhaustive", vopt.exhaustive );
  verify_cmd->add_option( "--samples", vopt.samples )->check( CLI::PositiveNumber );
  auto* seed_opt = verify_cmd->add_option( "--seed", seed );

  auto* metrics_cmd = app.add_subcommand( "metrics", "print the cost census" );
  std::string format = "text";
  metrics_cmd->add_option( "file", file )->required();
  metrics_cmd->add_option( "--format", format )->check( CLI::IsMember( {"text", "kv"} ) );

  auto* activity_cmd = app.add_subcommand( "activity", "power-gating activity for an operand pair" );
  activity_cmd->add_option( "file", file )->required();
  activity_cmd->add_option( "--x", x )->required();
  activity_cmd->add_option( "--y", y )->required();

  auto* check_cmd = app.add_subcommand( "check", "reversibility report" );
  check_cmd->add_option( "file", file )->required();

  auto* compare_cmd = app.add_subcommand( "compare", "compare against published figures" );
  compare_cmd->add_option( "file", file )->required();
  compare_cmd->add_option( "--format", format )->check( CLI::IsMember( {"text", "kv"} ) );

  try
  {
    std::reverse( args.begin(), args.end() );
    app.parse( args );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return success;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try
  {
    if ( synth->parsed() )
    {
      circuit c;
      if ( kind == "full-adder" )
      {
        c = make_full_adder();
      }
      else
      {
        if ( !*n_opt || width < 1u )
        {
          throw usage( "--n must be at least 1 for " + kind );
        }
        if ( kind == "adder" )
        {
          if ( width > 63u )
          {
            throw usage( "adder width is limited to 63" );
          }
          c = make_ripple_adder( width );
        }
        else
        {
          if ( width > 32u )
          {
            throw usage( "multiplier width is limited to 32" );
          }
          c = make_multiplier( {width, adder_style::ripple} );
        }
      }
      std::ofstream os( out_path, std::ios::binary );
      if ( !os || !( os << write( c ) ) )
      {
        throw usage( "cannot write '" + out_path + "'" );
      }
      out << render_text( measure( c ) );
      return success;
    }

    if ( simulate_cmd->parsed() )
    {
      auto const c = load( file );
      input_assignment inputs;
      for ( auto const& a : assignments )
      {
        auto const eq = a.find( '=' );
        if ( eq == std::string::npos || ( a.substr( eq + 1 ) != "0" && a.substr( eq + 1 ) != "1" ) )
        {
          throw usage( "malformed assignment '" + a + "', expected name=0|1" );
        }
        inputs[a.substr( 0, eq )] = a[eq + 1] == '1';
      }
      for ( auto [opt, prefix, value] : {std::tuple{sim_x, "x", x}, std::tuple{sim_y, "y", y}} )
      {
        if ( !*opt )
        {
          continue;
        }
        auto const w = word_width( c, prefix );
        if ( w == 0u || ( w < 64u && ( value >> w ) != 0u ) )
        {
          throw usage( std::string( "operand --" ) + prefix + " does not fit the circuit" );
        }
        assign_word( inputs, prefix, value, w );
      }
      auto const result = revtsg::simulate( c, inputs );
      for ( auto id : c.outputs() )
      {
        auto const& label = c.line( id ).output->name;
        out << label << "=" << ( result.outputs.at( label ) ? 1 : 0 ) << "\n";
      }
      if ( !c.outputs().empty() && c.outputs().size() <= 64u )
      {
        out << output_word_name( c ) << " = " << output_word( c, result.state ) << "\n";
      }
      return success;
    }

    if ( verify_cmd->parsed() )
    {
      if ( *seed_opt )
      {
        vopt.seed = seed;
      }
      return verify( load( file ), vopt, out );
    }

    if ( metrics_cmd->parsed() )
    {
      auto const report = measure( load( file ) );
      out << ( format == "kv" ? render_kv( to_kv( report ) ) : render_text( report ) );
      return success;
    }

    if ( activity_cmd->parsed() )
    {
      out << render_text( activity_analysis( load( file ), x, y ) );
      return success;
    }

    if ( check_cmd->parsed() )
    {
      auto const c = load( file );
      auto const report = check_reversibility( c );
      out << "lines = " << c.num_lines() << "\n";
      out << "structural = " << ( report.structural ? "true" : "false" ) << "\n";
      out << "exhaustive = " << ( !report.exhaustive ? "skipped" : *report.exhaustive ? "true" : "false" ) << "\n";
      return report.structural && report.exhaustive.value_or( true ) ? success : verification_failure;
    }

    if ( compare_cmd->parsed() )
    {
      auto const c = load( file );
      auto const n = word_width( c, "x" );
      auto const report = make_comparison_report( measure( c ), n >= 2u ? std::optional<uint32_t>( n ) : std::nullopt );
      out << ( format == "kv" ? render_kv( report.to_kv() ) : report.render_text() );
      return success;
    }
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

} // namespace revtsg::cli
