/*!
  \file synth.hpp
  \brief Generators for TSG adders and the Fredkin/TSG tree multiplier
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gates.hpp"
#include "simulate.hpp"

namespace revtsg
{

/*! \brief Lines carrying a binary number, least significant bit first */
struct weighted_row
{
  std::vector<line_id> lines;
  uint32_t base_weight = 0u;

  uint32_t width() const noexcept { return static_cast<uint32_t>( lines.size() ); }

  /*! \brief Σ bit_i · 2^(base_weight + i) for a state of up to 64 weighted bits */
  uint64_t value( bit_state const& s ) const
  {
    uint64_t v = 0u;
    for ( uint32_t i = 0u; i < lines.size(); ++i )
    {
      v |= static_cast<uint64_t>( s[lines[i]] ) << ( base_weight + i );
    }
    return v;
  }
};

enum class adder_style
{
  ripple
};

struct synth_params
{
  uint32_t n = 4u;
  adder_style style = adder_style::ripple;
};

/*! \brief A circuit builder that hands out uniquely named ancillae

  Names are `<prefix><k>` with an independent counter per prefix.
*/
class synth_builder : public circuit_builder
{
public:
  line_id fresh_constant( char prefix = 'z' )
  {
    auto& counter = counters_[static_cast<unsigned char>( prefix )];
    return add_constant( std::string( 1, prefix ) + std::to_string( counter++ ), false );
  }

private:
  std::array<uint32_t, 256> counters_{};
};

/*! \brief Single TSG cell as a full adder

  Lines `a, b, zero, cin`; the gate is wired `(a, b, zero, cin)`, the sum
  appears on `zero` and the carry on `cin`.
*/
inline circuit make_full_adder()
{
  circuit_builder b;
  auto const a = b.add_input( "a" );
  auto const bb = b.add_input( "b" );
  auto const zero = b.add_constant( "zero", false );
  auto const cin = b.add_input( "cin" );
  b.add_gate( gate_kind::tsg, {a, bb, zero, cin}, 1u );
  b.set_output( zero, "sum" );
  b.set_output( cin, "carry" );
  return b.build();
}

/*! \brief Appends an n-cell TSG ripple adder computing A + B + carry_in

  Returns the sum row (width n + 1, carry-out last).  The carry travels on
  the `carry_in` line itself, which ends up holding the carry-out.
*/
inline weighted_row add_ripple_adder( synth_builder& b, std::span<line_id const> lhs, std::span<line_id const> rhs,
                                      line_id carry_in, std::optional<uint32_t> level )
{
  if ( lhs.size() != rhs.size() || lhs.empty() )
  {
    throw domain_error( "ripple adder operands must have equal nonzero width" );
  }
  weighted_row sum;
  for ( std::size_t i = 0u; i < lhs.size(); ++i )
  {
    auto const s = b.fresh_constant( 'z' );
    b.add_gate( gate_kind::tsg, {lhs[i], rhs[i], s, carry_in}, level );
    sum.lines.push_back( s );
  }
  sum.lines.push_back( carry_in );
  return sum;
}

/*! \brief n-bit ripple adder with inputs `x*`, `y*`, `cin` and outputs `s*`, `cout` */
inline circuit make_ripple_adder( uint32_t n )
{
  if ( n < 1u )
  {
    throw domain_error( "adder width must be at least 1" );
  }
  synth_builder b;
  std::vector<line_id> xs, ys;
  for ( uint32_t i = 0u; i < n; ++i )
  {
    xs.push_back( b.add_input( "x" + std::to_string( i ) ) );
  }
  for ( uint32_t i = 0u; i < n; ++i )
  {
    ys.push_back( b.add_input( "y" + std::to_string( i ) ) );
  }
  auto const cin = b.add_input( "cin" );
  auto const sum = add_ripple_adder( b, xs, ys, cin, 1u );
  for ( uint32_t i = 0u; i < n; ++i )
  {
    b.set_output( sum.lines[i], "s" + std::to_string( i ) );
  }
  b.set_output( cin, "cout" );
  return b.build();
}

/*! \brief Appends the Fredkin partial-product stage

  Each `y_j` is copied onto n - 1 fresh ancillae with Feynman gates, then
  gate (i, j) is wired `(x_i, copy of y_j, 0)` so its third line carries
  `x_i & y_j`.  The control line passes `x_i` through unchanged, so x bits
  need no copies.  Row i holds `x_i & y` at base weight i.
*/
inline std::vector<weighted_row> add_partial_products( synth_builder& b, std::span<line_id const> xs,
                                                       std::span<line_id const> ys, std::optional<uint32_t> level )
{
  auto const n = xs.size();
  std::vector<std::vector<line_id>> copies( ys.size() );
  for ( std::size_t j = 0u; j < ys.size(); ++j )
  {
    copies[j].push_back( ys[j] );
    for ( std::size_t i = 1u; i < n; ++i )
    {
      auto const g = b.fresh_constant( 'g' );
      b.add_gate( gate_kind::feynman, {ys[j], g}, level );
      copies[j].push_back( g );
    }
  }
  std::vector<weighted_row> rows( n );
  for ( std::size_t i = 0u; i < n; ++i )
  {
    rows[i].base_weight = static_cast<uint32_t>( i );
    for ( std::size_t j = 0u; j < ys.size(); ++j )
    {
      auto const z = b.fresh_constant( 'z' );
      b.add_gate( gate_kind::fredkin, {xs[i], copies[j][i], z}, level );
      rows[i].lines.push_back( z );
    }
  }
  return rows;
}

struct partial_product_stage
{
  circuit netlist;
  std::vector<weighted_row> rows;
};

/*! \brief Standalone partial-product stage; outputs are `pp<i>_<j>` = x_i & y_j */
inline partial_product_stage make_partial_products( uint32_t n )
{
  if ( n < 1u )
  {
    throw domain_error( "operand width must be at least 1" );
  }
  synth_builder b;
  std::vector<line_id> xs, ys;
  for ( uint32_t i = 0u; i < n; ++i )
  {
    xs.push_back( b.add_input( "x" + std::to_string( i ) ) );
  }
  for ( uint32_t i = 0u; i < n; ++i )
  {
    ys.push_back( b.add_input( "y" + std::to_string( i ) ) );
  }
  auto rows = add_partial_products( b, xs, ys, 0u );
  for ( uint32_t i = 0u; i < n; ++i )
  {
    for ( uint32_t j = 0u; j < n; ++j )
    {
      b.set_output( rows[i].lines[j], "pp" + std::to_string( i ) + "_" + std::to_string( j ) );
    }
  }
  return {b.build(), std::move( rows )};
}

/*! \brief Adds two rows whose base weights differ by `shift` >= 1

  The low `shift` bits of `a` pass through; a ripple adder of width
  `max(width(a) - shift, width(b))` adds the rest of `a` to `b`, padding
  either operand with fresh zero lines.  The result has width
  `shift + w + 1` at the base weight of `a`.
*/
inline weighted_row combine_shifted( synth_builder& b, weighted_row const& a, weighted_row const& bw,
                                     std::optional<uint32_t> level )
{
  if ( bw.base_weight <= a.base_weight )
  {
    throw domain_error( "combine_shifted needs base_weight(b) - base_weight(a) >= 1" );
  }
  auto const shift = bw.base_weight - a.base_weight;
  auto const upper = a.width() > shift ? a.width() - shift : 0u;
  auto const w = std::max( upper, bw.width() );

  weighted_row result;
  result.base_weight = a.base_weight;
  for ( uint32_t i = 0u; i < shift; ++i )
  {
    result.lines.push_back( i < a.width() ? a.lines[i] : b.fresh_constant( 'z' ) );
  }

  auto const cin = b.fresh_constant( 'z' );
  std::vector<line_id> lhs, rhs;
  for ( uint32_t i = 0u; i < w; ++i )
  {
    lhs.push_back( shift + i < a.width() ? a.lines[shift + i] : b.fresh_constant( 'z' ) );
    rhs.push_back( i < bw.width() ? bw.lines[i] : b.fresh_constant( 'z' ) );
  }
  auto const sum = add_ripple_adder( b, lhs, rhs, cin, level );
  result.lines.insert( result.lines.end(), sum.lines.begin(), sum.lines.end() );
  return result;
}

/*! \brief N x N tree multiplier

  Level 0 generates the n partial-product rows with Fredkin gates.  Level k
  merges adjacent rows pairwise with `combine_shifted`; an odd row left over
  at a level passes through unmerged.  The low 2n bits of the final row are
  the outputs `p0 .. p<2n-1>`, every other line is garbage.

  Line names: `x*`, `y*` inputs, `g*` operand-copy ancillae, `p*` product
  lines and `z*` for all remaining constants.
*/
inline circuit make_multiplier( synth_params const& params )
{
  auto const n = params.n;
  if ( n < 1u )
  {
    throw domain_error( "operand width must be at least 1" );
  }
  synth_builder b;
  std::vector<line_id> xs, ys;
  for ( uint32_t i = 0u; i < n; ++i )
  {
    xs.push_back( b.add_input( "x" + std::to_string( i ) ) );
  }
  for ( uint32_t i = 0u; i < n; ++i )
  {
    ys.push_back( b.add_input( "y" + std::to_string( i ) ) );
  }

  auto rows = add_partial_products( b, xs, ys, 0u );
  for ( uint32_t level = 1u; rows.size() > 1u; ++level )
  {
    std::vector<weighted_row> next;
    for ( std::size_t i = 0u; i + 1u < rows.size(); i += 2u )
    {
      next.push_back( combine_shifted( b, rows[i], rows[i + 1u], level ) );
    }
    if ( rows.size() % 2u == 1u )
    {
      next.push_back( rows.back() );
    }
    rows = std::move( next );
  }

  auto product = rows.front().lines;
  while ( product.size() < 2u * n )
  {
    product.push_back( b.fresh_constant( 'z' ) );
  }
  for ( uint32_t k = 0u; k < 2u * n; ++k )
  {
    b.rename( product[k], "p" + std::to_string( k ) );
    b.set_output( product[k], "p" + std::to_string( k ) );
  }

  /* renumber the remaining ancillae densely in line order */
  uint32_t next_z = 0u, next_g = 0u;
  for ( line_id i = 0u; i < b.num_lines(); ++i )
  {
    auto const& role = b.line( i );
    if ( !role.is_constant() || role.output )
    {
      continue;
    }
    if ( role.name.front() == 'g' )
    {
      b.rename( i, "g" + std::to_string( next_g++ ) );
    }
    else
    {
      b.rename( i, "z" + std::to_string( next_z++ ) );
    }
  }
  return b.build();
}

struct full_adder_reference
{
  std::string_view design;
  uint32_t gates;
  uint32_t garbage;
  uint32_t unit_delay;
};

struct multiplier_reference
{
  std::string_view design;
  uint32_t gates;
};

struct literature_metrics
{
  std::array<full_adder_reference, 4> full_adders;
  std::array<multiplier_reference, 2> multipliers;
};

/*! \brief Published full-adder and 4x4 multiplier figures, verbatim */
inline constexpr literature_metrics reference_constants()
{
  return {{{{"tsg-single-gate", 1u, 2u, 1u},
            {"two-ng-one-feynman", 3u, 3u, 3u},
            {"ng-toffoli-feynman", 3u, 2u, 3u},
            {"five-fredkin", 5u, 5u, 5u}}},
          {{{"tsg-tree-4x4", 29u}, {"reversible-array-4x4", 40u}}}};
}

} // namespace revtsg
