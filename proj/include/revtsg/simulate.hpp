/*!
  \file simulate.hpp
  \brief Bit-exact cascade simulation and reversibility checks
*/

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gates.hpp"

namespace revtsg
{

/*! \brief One bit per circuit line */
struct bit_state
{
  std::vector<uint8_t> bits;

  bit_state() = default;
  explicit bit_state( std::size_t n ) : bits( n, 0u ) {}

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[]( std::size_t i ) const { return bits[i] != 0u; }
  void set( std::size_t i, bool v ) { bits[i] = v ? 1u : 0u; }

  friend bool operator==( bit_state const&, bit_state const& ) = default;
};

using input_assignment = std::map<std::string, bool>;

struct simulation_result
{
  std::map<std::string, bool> outputs;
  bit_state state;
};

inline void apply_gate( gate_instance const& g, bit_state& s )
{
  auto const ops = g.operands();
  uint32_t in = 0u;
  for ( uint32_t i = 0u; i < ops.size(); ++i )
  {
    in |= static_cast<uint32_t>( s.bits[ops[i]] ) << i;
  }
  auto const out = apply_packed( g.kind, in );
  for ( uint32_t i = 0u; i < ops.size(); ++i )
  {
    s.bits[ops[i]] = static_cast<uint8_t>( ( out >> i ) & 1u );
  }
}

inline void unapply_gate( gate_instance const& g, bit_state& s )
{
  auto const ops = g.operands();
  uint32_t out = 0u;
  for ( uint32_t i = 0u; i < ops.size(); ++i )
  {
    out |= static_cast<uint32_t>( s.bits[ops[i]] ) << i;
  }
  auto const in = unapply_packed( g.kind, out );
  for ( uint32_t i = 0u; i < ops.size(); ++i )
  {
    s.bits[ops[i]] = static_cast<uint8_t>( ( in >> i ) & 1u );
  }
}

/*! \brief Applies the cascade to an arbitrary line assignment, ignoring role tags */
inline bit_state run( circuit const& c, bit_state s )
{
  if ( s.size() != c.num_lines() )
  {
    throw domain_error( "state width does not match the circuit's line count" );
  }
  for ( auto const& g : c.gates() )
  {
    apply_gate( g, s );
  }
  return s;
}

/*! \brief Replays the cascade backwards with every gate replaced by its inverse */
inline bit_state run_reverse( circuit const& c, bit_state s )
{
  if ( s.size() != c.num_lines() )
  {
    throw domain_error( "state width does not match the circuit's line count" );
  }
  auto const& gates = c.gates();
  for ( auto it = gates.rbegin(); it != gates.rend(); ++it )
  {
    unapply_gate( *it, s );
  }
  return s;
}

/*! \brief Builds the initial line state from primary-input values and constants */
inline bit_state initial_state( circuit const& c, input_assignment const& inputs )
{
  bit_state s( c.num_lines() );
  for ( auto const& [name, value] : inputs )
  {
    auto const id = c.find_line( name );
    if ( !id || !c.line( *id ).is_input() )
    {
      throw input_error( "unknown input '" + name + "'", name );
    }
  }
  for ( line_id i = 0u; i < c.num_lines(); ++i )
  {
    auto const& role = c.line( i );
    if ( role.is_constant() )
    {
      s.set( i, *role.constant );
      continue;
    }
    auto const it = inputs.find( role.name );
    if ( it == inputs.end() )
    {
      throw input_error( "input '" + role.name + "' is not assigned", role.name );
    }
    s.set( i, it->second );
  }
  return s;
}

inline simulation_result simulate( circuit const& c, input_assignment const& inputs )
{
  simulation_result result;
  result.state = run( c, initial_state( c, inputs ) );
  for ( auto id : c.outputs() )
  {
    result.outputs[c.line( id ).output->name] = result.state[id];
  }
  return result;
}

/*! \brief Little-endian integer value of the primary outputs (at most 64) */
inline uint64_t output_word( circuit const& c, bit_state const& s )
{
  if ( c.outputs().size() > 64u )
  {
    throw capacity_error( "output word wider than 64 bits" );
  }
  uint64_t w = 0u;
  for ( std::size_t k = 0u; k < c.outputs().size(); ++k )
  {
    w |= static_cast<uint64_t>( s[c.outputs()[k]] ) << k;
  }
  return w;
}

/*! \brief Assigns `prefix0 .. prefix<width-1>` from the bits of `value` */
inline void assign_word( input_assignment& inputs, std::string const& prefix, uint64_t value, uint32_t width )
{
  for ( uint32_t i = 0u; i < width; ++i )
  {
    inputs[prefix + std::to_string( i )] = ( ( value >> i ) & 1u ) != 0u;
  }
}

/*! \brief Number of primary inputs named `prefix<k>` for consecutive k from 0 */
inline uint32_t word_width( circuit const& c, std::string const& prefix )
{
  uint32_t width = 0u;
  while ( true )
  {
    auto const id = c.find_line( prefix + std::to_string( width ) );
    if ( !id || !c.line( *id ).is_input() )
    {
      return width;
    }
    ++width;
  }
}

/*! \brief Word-level cascade for circuits of at most 64 lines; bit i is line i */
inline uint64_t run_packed( circuit const& c, uint64_t state )
{
  for ( auto const& g : c.gates() )
  {
    auto const ops = g.operands();
    uint32_t in = 0u;
    for ( uint32_t i = 0u; i < ops.size(); ++i )
    {
      in |= static_cast<uint32_t>( ( state >> ops[i] ) & 1u ) << i;
    }
    auto const out = apply_packed( g.kind, in );
    for ( uint32_t i = 0u; i < ops.size(); ++i )
    {
      state = ( state & ~( uint64_t{1} << ops[i] ) ) | ( static_cast<uint64_t>( ( out >> i ) & 1u ) << ops[i] );
    }
  }
  return state;
}

inline constexpr uint32_t default_enumeration_bound = 20u;

/*! \brief Full line-to-line transfer function, indexed by packed line state

  Role tags are ignored: every one of the 2^n line assignments is simulated.
*/
inline std::vector<uint32_t> truth_permutation( circuit const& c, uint32_t bound = default_enumeration_bound )
{
  if ( c.num_lines() > bound || c.num_lines() > 31u )
  {
    throw capacity_error( "truth permutation limited to " + std::to_string( bound ) + " lines" );
  }
  std::vector<uint32_t> perm( std::size_t{1} << c.num_lines() );
  for ( uint32_t s = 0u; s < perm.size(); ++s )
  {
    perm[s] = static_cast<uint32_t>( run_packed( c, s ) );
  }
  return perm;
}

inline bool is_permutation( std::vector<uint32_t> const& perm )
{
  std::vector<bool> seen( perm.size(), false );
  for ( auto v : perm )
  {
    if ( v >= perm.size() || seen[v] )
    {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

struct reversibility_report
{
  bool structural = false;
  /*! empty when the line count exceeds the enumeration bound */
  std::optional<bool> exhaustive;
};

inline reversibility_report check_reversibility( circuit const& c, uint32_t bound = default_enumeration_bound )
{
  reversibility_report report;
  report.structural = true;
  for ( auto const& g : c.gates() )
  {
    if ( g.kind == gate_kind::custom || !check_bijective( gate_def::of( g.kind ) ) )
    {
      report.structural = false;
      break;
    }
    auto const ops = g.operands();
    for ( std::size_t i = 0u; i < ops.size() && report.structural; ++i )
    {
      for ( std::size_t j = 0u; j < i; ++j )
      {
        if ( ops[i] == ops[j] || ops[i] >= c.num_lines() )
        {
          report.structural = false;
          break;
        }
      }
    }
  }
  if ( c.num_lines() <= bound && c.num_lines() <= 31u )
  {
    report.exhaustive = is_permutation( truth_permutation( c, bound ) );
  }
  return report;
}

struct role_counts
{
  uint32_t primary_inputs = 0u;
  uint32_t constants = 0u;
  uint32_t primary_outputs = 0u;
  uint32_t garbage = 0u;

  friend bool operator==( role_counts const&, role_counts const& ) = default;
};

inline role_counts count_roles( circuit const& c )
{
  role_counts counts;
  for ( auto const& role : c.lines() )
  {
    ++( role.is_input() ? counts.primary_inputs : counts.constants );
    ++( role.is_garbage() ? counts.garbage : counts.primary_outputs );
  }
  return counts;
}

} // namespace revtsg
