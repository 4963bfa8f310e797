/*!
  \file textio.hpp
  \brief Text netlist reader/writer (TFC-style dialect)

  \verbatim
  .v a,b,zero,cin        all lines, in line order
  .i a,b,cin             primary inputs, in line order
  .o zero,cin            primary output lines, by weight
  .ol sum,carry          output labels for .o (only when they differ)
  .c 0                   one constant per non-input line, in line order
  BEGIN
  g4 a,b,zero,cin # level=1
  END
  \endverbatim

  Mnemonics: `t1` NOT, `t2` Feynman, `t3` Toffoli (target last), `f3`
  Fredkin (control first), `g4` TSG.
*/

#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gates.hpp"

namespace revtsg
{

inline std::optional<std::string_view> mnemonic( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::not_gate:
    return "t1";
  case gate_kind::feynman:
    return "t2";
  case gate_kind::toffoli:
    return "t3";
  case gate_kind::fredkin:
    return "f3";
  case gate_kind::tsg:
    return "g4";
  case gate_kind::custom:
    break;
  }
  return std::nullopt;
}

inline std::optional<gate_kind> kind_from_mnemonic( std::string_view m )
{
  for ( auto kind : primitive_gate_kinds )
  {
    if ( mnemonic( kind ) == m )
    {
      return kind;
    }
  }
  return std::nullopt;
}

namespace detail
{

inline void write_list( std::string& out, std::string_view directive, std::vector<std::string> const& items )
{
  out += directive;
  for ( std::size_t i = 0u; i < items.size(); ++i )
  {
    out += i == 0u ? ' ' : ',';
    out += items[i];
  }
  out += '\n';
}

inline std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

inline std::vector<std::string_view> split_commas( std::string_view s )
{
  std::vector<std::string_view> items;
  if ( trim( s ).empty() )
  {
    return items;
  }
  while ( true )
  {
    auto const pos = s.find( ',' );
    items.push_back( trim( s.substr( 0, pos ) ) );
    if ( pos == std::string_view::npos )
    {
      return items;
    }
    s.remove_prefix( pos + 1 );
  }
}

} // namespace detail

inline std::string write( circuit const& c )
{
  std::vector<std::string> all, inputs, outputs, labels, constants;
  bool relabeled = false;
  for ( auto const& role : c.lines() )
  {
    all.push_back( role.name );
    if ( role.is_input() )
    {
      inputs.push_back( role.name );
    }
    else
    {
      constants.push_back( *role.constant ? "1" : "0" );
    }
  }
  for ( auto id : c.outputs() )
  {
    auto const& role = c.line( id );
    outputs.push_back( role.name );
    labels.push_back( role.output->name );
    relabeled |= role.output->name != role.name;
  }

  std::string out;
  detail::write_list( out, ".v", all );
  detail::write_list( out, ".i", inputs );
  detail::write_list( out, ".o", outputs );
  if ( relabeled )
  {
    detail::write_list( out, ".ol", labels );
  }
  detail::write_list( out, ".c", constants );
  out += "BEGIN\n";
  for ( auto const& g : c.gates() )
  {
    std::vector<std::string> ops;
    for ( auto l : g.operands() )
    {
      ops.push_back( c.line( l ).name );
    }
    detail::write_list( out, *mnemonic( g.kind ), ops );
    if ( g.level )
    {
      out.pop_back();
      out += " # level=" + std::to_string( *g.level ) + "\n";
    }
  }
  out += "END\n";
  return out;
}

/*! \brief Parses netlist text

  Blank lines and `#` comments are ignored, except a trailing
  `# level=<k>` on a gate statement, which restores the gate's level.
  Throws parse_error with a distinct category per failure.
*/
inline circuit parse( std::string_view text )
{
  using detail::trim;
  enum class section
  {
    header,
    body,
    done
  };

  std::map<std::string, std::pair<std::size_t, std::vector<std::string_view>>, std::less<>> headers;
  struct statement
  {
    std::size_t line;
    std::string_view mnemonic;
    std::vector<std::string_view> operands;
    std::optional<uint32_t> level;
  };
  std::vector<statement> body;

  section sec = section::header;
  std::size_t lineno = 0u;
  std::size_t pos = 0u;
  while ( pos < text.size() )
  {
    auto const eol = text.find( '\n', pos );
    auto raw = text.substr( pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() : eol + 1u;
    ++lineno;

    std::optional<std::string_view> comment;
    if ( auto const hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      comment = trim( raw.substr( hash + 1 ) );
      raw = raw.substr( 0, hash );
    }
    auto const content = trim( raw );
    if ( content.empty() )
    {
      continue;
    }

    if ( sec == section::done )
    {
      throw parse_error( parse_errc::syntax, lineno, "text after END" );
    }
    if ( content == "BEGIN" )
    {
      if ( sec != section::header )
      {
        throw parse_error( parse_errc::syntax, lineno, "unexpected BEGIN" );
      }
      sec = section::body;
      continue;
    }
    if ( content == "END" )
    {
      if ( sec != section::body )
      {
        throw parse_error( parse_errc::syntax, lineno, "END without BEGIN" );
      }
      sec = section::done;
      continue;
    }

    auto const space = content.find_first_of( " \t" );
    auto const head = content.substr( 0, space );
    auto const rest = space == std::string_view::npos ? std::string_view{} : trim( content.substr( space ) );

    if ( sec == section::header )
    {
      if ( head != ".v" && head != ".i" && head != ".o" && head != ".ol" && head != ".c" )
      {
        throw parse_error( parse_errc::syntax, lineno, "unknown header '" + std::string( head ) + "'" );
      }
      if ( headers.count( head ) )
      {
        throw parse_error( parse_errc::syntax, lineno, "repeated header '" + std::string( head ) + "'" );
      }
      auto items = detail::split_commas( rest );
      for ( auto item : items )
      {
        if ( item.empty() )
        {
          throw parse_error( parse_errc::syntax, lineno, "empty list item" );
        }
      }
      headers.emplace( std::string( head ), std::make_pair( lineno, std::move( items ) ) );
      continue;
    }

    statement st{lineno, head, detail::split_commas( rest ), std::nullopt};
    if ( comment && comment->starts_with( "level=" ) )
    {
      auto const digits = comment->substr( 6 );
      uint32_t level = 0u;
      auto const [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), level );
      if ( ec != std::errc{} || ptr != digits.data() + digits.size() )
      {
        throw parse_error( parse_errc::syntax, lineno, "malformed level annotation" );
      }
      st.level = level;
    }
    body.push_back( std::move( st ) );
  }

  if ( sec == section::header )
  {
    throw parse_error( parse_errc::syntax, lineno, "missing BEGIN" );
  }
  if ( sec == section::body )
  {
    throw parse_error( parse_errc::syntax, lineno, "missing END" );
  }
  for ( auto const* h : {".v", ".i", ".o", ".c"} )
  {
    if ( !headers.count( h ) )
    {
      throw parse_error( parse_errc::syntax, 0u, std::string( "missing header '" ) + h + "'" );
    }
  }

  auto const& [vline, vars] = headers.at( ".v" );
  std::unordered_map<std::string_view, line_id> index;
  for ( auto v : vars )
  {
    if ( !is_identifier( v ) )
    {
      throw parse_error( parse_errc::syntax, vline, "invalid line name '" + std::string( v ) + "'" );
    }
    if ( !index.emplace( v, static_cast<line_id>( index.size() ) ).second )
    {
      throw parse_error( parse_errc::syntax, vline, "duplicate line name '" + std::string( v ) + "'" );
    }
  }
  auto resolve = [&]( std::string_view name, std::size_t at ) {
    auto const it = index.find( name );
    if ( it == index.end() )
    {
      throw parse_error( parse_errc::undeclared_line, at, "undeclared line '" + std::string( name ) + "'" );
    }
    return it->second;
  };

  auto const& [iline, ins] = headers.at( ".i" );
  std::set<line_id> input_set;
  for ( auto name : ins )
  {
    if ( !input_set.insert( resolve( name, iline ) ).second )
    {
      throw parse_error( parse_errc::syntax, iline, "repeated input '" + std::string( name ) + "'" );
    }
  }
  auto const& [cline, consts] = headers.at( ".c" );
  if ( consts.size() != vars.size() - input_set.size() )
  {
    throw parse_error( parse_errc::constant_length_mismatch, cline,
                       "expected " + std::to_string( vars.size() - input_set.size() ) + " constants, got " +
                           std::to_string( consts.size() ) );
  }

  circuit_builder b;
  std::size_t next_const = 0u;
  for ( line_id i = 0u; i < vars.size(); ++i )
  {
    if ( input_set.count( i ) )
    {
      b.add_input( std::string( vars[i] ) );
      continue;
    }
    auto const value = consts[next_const++];
    if ( value != "0" && value != "1" )
    {
      throw parse_error( parse_errc::syntax, cline, "constant must be 0 or 1" );
    }
    b.add_constant( std::string( vars[i] ), value == "1" );
  }

  auto const& [oline, outs] = headers.at( ".o" );
  std::vector<std::string_view> labels = outs;
  if ( auto const it = headers.find( ".ol" ); it != headers.end() )
  {
    if ( it->second.second.size() != outs.size() )
    {
      throw parse_error( parse_errc::syntax, it->second.first, ".ol length differs from .o" );
    }
    labels = it->second.second;
  }
  try
  {
    for ( std::size_t k = 0u; k < outs.size(); ++k )
    {
      b.set_output( resolve( outs[k], oline ), std::string( labels[k] ) );
    }
  }
  catch ( netlist_error const& e )
  {
    throw parse_error( parse_errc::syntax, oline, e.what() );
  }

  for ( auto const& st : body )
  {
    auto const kind = kind_from_mnemonic( st.mnemonic );
    if ( !kind )
    {
      throw parse_error( parse_errc::unknown_mnemonic, st.line, "unknown gate '" + std::string( st.mnemonic ) + "'" );
    }
    if ( st.operands.size() != arity( *kind ) )
    {
      throw parse_error( parse_errc::arity_mismatch, st.line,
                         std::string( st.mnemonic ) + " takes " + std::to_string( arity( *kind ) ) + " operands, got " +
                             std::to_string( st.operands.size() ) );
    }
    std::vector<line_id> ops;
    for ( auto name : st.operands )
    {
      if ( name.empty() )
      {
        throw parse_error( parse_errc::syntax, st.line, "empty operand" );
      }
      auto const id = resolve( name, st.line );
      if ( std::find( ops.begin(), ops.end(), id ) != ops.end() )
      {
        throw parse_error( parse_errc::duplicate_operand, st.line, "line '" + std::string( name ) + "' used twice" );
      }
      ops.push_back( id );
    }
    b.add_gate( *kind, ops, st.level );
  }

  try
  {
    return b.build();
  }
  catch ( netlist_error const& e )
  {
    throw parse_error( parse_errc::syntax, 0u, e.what() );
  }
}

} // namespace revtsg
