/*!
  \file gates.hpp
  \brief Primitive reversible gates as exact Boolean bijections

  Every gate is materialized as a lookup table over its packed operand word.
  Operand `i` of a gate occupies bit `i` of the word, so for a TSG gate with
  operands (a, b, c, d) the index is `a | b << 1 | c << 2 | d << 3`.
*/

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace revtsg
{

enum class gate_kind : uint8_t
{
  not_gate,
  feynman,
  toffoli,
  fredkin,
  tsg,
  custom
};

inline constexpr std::array<gate_kind, 5> primitive_gate_kinds = {
    gate_kind::not_gate, gate_kind::feynman, gate_kind::toffoli, gate_kind::fredkin, gate_kind::tsg};

constexpr uint32_t arity( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::not_gate:
    return 1u;
  case gate_kind::feynman:
    return 2u;
  case gate_kind::toffoli:
  case gate_kind::fredkin:
    return 3u;
  case gate_kind::tsg:
    return 4u;
  case gate_kind::custom:
    break;
  }
  return 0u;
}

constexpr std::string_view name( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::not_gate:
    return "NOT";
  case gate_kind::feynman:
    return "FEYNMAN";
  case gate_kind::toffoli:
    return "TOFFOLI";
  case gate_kind::fredkin:
    return "FREDKIN";
  case gate_kind::tsg:
    return "TSG";
  case gate_kind::custom:
    break;
  }
  return "CUSTOM";
}

constexpr bool eval_not( bool a ) { return !a; }

/*! \brief Controlled NOT, `(a, b) -> (a, a ^ b)` */
constexpr std::array<bool, 2> eval_feynman( bool a, bool b ) { return {a, a != b}; }

/*! \brief `(a, b, c) -> (a, b, ab ^ c)` */
constexpr std::array<bool, 3> eval_toffoli( bool a, bool b, bool c ) { return {a, b, ( a && b ) != c}; }

/*! \brief Controlled swap on the last two lines

  With the configuration `(x, y, 0)` the outputs are `(x, !x & y, x & y)`.
*/
constexpr std::array<bool, 3> eval_fredkin( bool a, bool b, bool c )
{
  return a ? std::array<bool, 3>{a, c, b} : std::array<bool, 3>{a, b, c};
}

/*! \brief The 4x4 TSG gate

  \verbatim
  P = a
  Q = !a & !c ^ !b
  R = Q ^ d
  S = (Q & d) ^ (a & b ^ c)
  \endverbatim

  With `c = 0` this is a full adder with carry-in on `d`: `R` is the sum,
  `S` the carry, and `P`, `Q` are garbage.
*/
constexpr std::array<bool, 4> eval_tsg( bool a, bool b, bool c, bool d )
{
  bool const q = ( !a && !c ) != !b;
  bool const r = q != d;
  bool const s = ( q && d ) != ( ( a && b ) != c );
  return {a, q, r, s};
}

namespace detail
{

constexpr uint32_t eval_packed( gate_kind kind, uint32_t in )
{
  auto const bit = [in]( uint32_t i ) { return ( ( in >> i ) & 1u ) != 0u; };
  auto const pack = []( auto const& out ) {
    uint32_t w = 0u;
    for ( uint32_t i = 0u; i < out.size(); ++i )
    {
      w |= static_cast<uint32_t>( out[i] ) << i;
    }
    return w;
  };
  switch ( kind )
  {
  case gate_kind::not_gate:
    return eval_not( bit( 0 ) ) ? 1u : 0u;
  case gate_kind::feynman:
    return pack( eval_feynman( bit( 0 ), bit( 1 ) ) );
  case gate_kind::toffoli:
    return pack( eval_toffoli( bit( 0 ), bit( 1 ), bit( 2 ) ) );
  case gate_kind::fredkin:
    return pack( eval_fredkin( bit( 0 ), bit( 1 ), bit( 2 ) ) );
  case gate_kind::tsg:
    return pack( eval_tsg( bit( 0 ), bit( 1 ), bit( 2 ), bit( 3 ) ) );
  case gate_kind::custom:
    break;
  }
  return in;
}

using kind_table = std::array<uint8_t, 16>;

constexpr std::array<kind_table, 5> make_kind_tables()
{
  std::array<kind_table, 5> tables{};
  for ( auto k = 0u; k < primitive_gate_kinds.size(); ++k )
  {
    auto const kind = primitive_gate_kinds[k];
    for ( uint32_t in = 0u; in < ( 1u << arity( kind ) ); ++in )
    {
      tables[k][in] = static_cast<uint8_t>( eval_packed( kind, in ) );
    }
  }
  return tables;
}

inline constexpr auto kind_tables = make_kind_tables();

constexpr std::array<kind_table, 5> make_inverse_tables()
{
  std::array<kind_table, 5> inverse{};
  for ( auto k = 0u; k < primitive_gate_kinds.size(); ++k )
  {
    for ( uint32_t in = 0u; in < ( 1u << arity( primitive_gate_kinds[k] ) ); ++in )
    {
      inverse[k][kind_tables[k][in]] = static_cast<uint8_t>( in );
    }
  }
  return inverse;
}

inline constexpr auto inverse_tables = make_inverse_tables();

} // namespace detail

/*! \brief Table lookup for a primitive gate on a packed operand word */
constexpr uint32_t apply_packed( gate_kind kind, uint32_t in )
{
  return detail::kind_tables[static_cast<std::size_t>( kind )][in];
}

/*! \brief Inverse table lookup for a primitive gate */
constexpr uint32_t unapply_packed( gate_kind kind, uint32_t out )
{
  return detail::inverse_tables[static_cast<std::size_t>( kind )][out];
}

/*! \brief A k-input/k-output Boolean map stored as a full lookup table

  Instances are immutable.  Arities up to 16 can be represented; the
  bijectivity check is bounded separately.
*/
class gate_def
{
public:
  static constexpr uint32_t max_arity = 16u;

  static gate_def of( gate_kind kind )
  {
    if ( kind == gate_kind::custom )
    {
      throw domain_error( "custom gates must be built from a table" );
    }
    auto const k = revtsg::arity( kind );
    std::vector<uint32_t> table( std::size_t{1} << k );
    for ( uint32_t in = 0u; in < table.size(); ++in )
    {
      table[in] = apply_packed( kind, in );
    }
    return gate_def( kind, k, std::move( table ) );
  }

  static gate_def from_table( uint32_t arity, std::vector<uint32_t> table )
  {
    if ( arity == 0u || arity > max_arity )
    {
      throw capacity_error( "gate arity must lie in [1, 16]" );
    }
    if ( table.size() != ( std::size_t{1} << arity ) )
    {
      throw domain_error( "table size must be 2^arity" );
    }
    for ( auto v : table )
    {
      if ( v >> arity )
      {
        throw domain_error( "table entry exceeds the output width" );
      }
    }
    return gate_def( gate_kind::custom, arity, std::move( table ) );
  }

  gate_kind kind() const noexcept { return kind_; }
  uint32_t arity() const noexcept { return arity_; }
  std::vector<uint32_t> const& table() const noexcept { return table_; }

  uint32_t operator()( uint32_t in ) const { return table_.at( in ); }

private:
  gate_def( gate_kind kind, uint32_t arity, std::vector<uint32_t> table )
      : kind_( kind ), arity_( arity ), table_( std::move( table ) ) {}

  gate_kind kind_;
  uint32_t arity_;
  std::vector<uint32_t> table_;
};

inline constexpr uint32_t bijectivity_arity_bound = 8u;

/*! \brief Returns true iff the gate's table is a permutation of {0,1}^k

  Throws capacity_error for arities above `bijectivity_arity_bound`.
*/
inline bool check_bijective( gate_def const& g )
{
  if ( g.arity() > bijectivity_arity_bound )
  {
    throw capacity_error( "bijectivity check is bounded to arity 8" );
  }
  std::vector<bool> seen( g.table().size(), false );
  for ( auto out : g.table() )
  {
    if ( seen[out] )
    {
      return false;
    }
    seen[out] = true;
  }
  return true;
}

/*! \brief Inverse permutation of a bijective gate

  The involutions (NOT, Feynman, Toffoli, Fredkin) keep their kind; every
  other inverse is returned as a custom gate.
*/
inline gate_def gate_inverse( gate_def const& g )
{
  if ( !check_bijective( g ) )
  {
    throw domain_error( "only bijective gates can be inverted" );
  }
  std::vector<uint32_t> inv( g.table().size() );
  for ( uint32_t in = 0u; in < inv.size(); ++in )
  {
    inv[g( in )] = in;
  }
  if ( inv == g.table() && g.kind() != gate_kind::custom )
  {
    return g;
  }
  return gate_def::from_table( g.arity(), std::move( inv ) );
}

} // namespace revtsg
