/*!
  \file circuit.hpp
  \brief Reversible circuit IR: tagged lines and an ordered gate cascade
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "gates.hpp"

namespace revtsg
{

using line_id = uint32_t;

/*! \brief Primary output tag; `weight` is the bit position in the output word */
struct output_tag
{
  std::string name;
  uint32_t weight;
};

/*! \brief Input-side and output-side role of one line

  A line without a constant is a primary input called `name`.  A line
  without an output tag is garbage.
*/
struct line_role
{
  std::string name;
  std::optional<bool> constant;
  std::optional<output_tag> output;

  bool is_input() const noexcept { return !constant.has_value(); }
  bool is_constant() const noexcept { return constant.has_value(); }
  bool is_garbage() const noexcept { return !output.has_value(); }
};

struct gate_instance
{
  gate_kind kind;
  std::array<line_id, 4> operand_storage{};
  std::optional<uint32_t> level;

  std::span<line_id const> operands() const noexcept
  {
    return {operand_storage.data(), arity( kind )};
  }
};

inline bool is_identifier( std::string_view s )
{
  if ( s.empty() )
  {
    return false;
  }
  auto const alpha = []( char c ) { return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || c == '_'; };
  auto const digit = []( char c ) { return c >= '0' && c <= '9'; };
  if ( !alpha( s.front() ) )
  {
    return false;
  }
  return std::all_of( s.begin() + 1, s.end(), [&]( char c ) { return alpha( c ) || digit( c ); } );
}

class circuit_builder;

/*! \brief An immutable cascade of primitive gates over a fixed set of lines

  Construct through `circuit_builder`.
*/
class circuit
{
public:
  circuit() = default;

  uint32_t num_lines() const noexcept { return static_cast<uint32_t>( lines_.size() ); }
  uint32_t num_gates() const noexcept { return static_cast<uint32_t>( gates_.size() ); }

  std::vector<line_role> const& lines() const noexcept { return lines_; }
  line_role const& line( line_id id ) const { return lines_.at( id ); }
  std::vector<gate_instance> const& gates() const noexcept { return gates_; }

  /*! \brief Primary input lines in line order */
  std::vector<line_id> const& inputs() const noexcept { return inputs_; }

  /*! \brief Primary output lines ordered by weight */
  std::vector<line_id> const& outputs() const noexcept { return outputs_; }

  std::optional<line_id> find_line( std::string_view name ) const
  {
    for ( line_id i = 0u; i < lines_.size(); ++i )
    {
      if ( lines_[i].name == name )
      {
        return i;
      }
    }
    return std::nullopt;
  }

  /*! \brief True iff every gate carries a level annotation */
  bool has_levels() const
  {
    return std::all_of( gates_.begin(), gates_.end(), []( auto const& g ) { return g.level.has_value(); } );
  }

private:
  friend class circuit_builder;

  std::vector<line_role> lines_;
  std::vector<gate_instance> gates_;
  std::vector<line_id> inputs_;
  std::vector<line_id> outputs_;
};

class circuit_builder
{
public:
  line_id add_input( std::string name )
  {
    lines_.push_back( {std::move( name ), std::nullopt, std::nullopt} );
    return static_cast<line_id>( lines_.size() - 1u );
  }

  line_id add_constant( std::string name, bool value = false )
  {
    lines_.push_back( {std::move( name ), value, std::nullopt} );
    return static_cast<line_id>( lines_.size() - 1u );
  }

  void add_gate( gate_kind kind, std::span<line_id const> operands, std::optional<uint32_t> level = std::nullopt )
  {
    if ( kind == gate_kind::custom )
    {
      throw netlist_error( "circuits hold primitive gates only" );
    }
    if ( operands.size() != arity( kind ) )
    {
      throw netlist_error( std::string( name( kind ) ) + " expects " + std::to_string( arity( kind ) ) + " operands" );
    }
    gate_instance g{kind, {}, level};
    for ( std::size_t i = 0u; i < operands.size(); ++i )
    {
      if ( operands[i] >= lines_.size() )
      {
        throw netlist_error( "operand line " + std::to_string( operands[i] ) + " out of range" );
      }
      for ( std::size_t j = 0u; j < i; ++j )
      {
        if ( operands[j] == operands[i] )
        {
          throw netlist_error( "gate lists line '" + lines_[operands[i]].name + "' twice" );
        }
      }
      g.operand_storage[i] = operands[i];
    }
    gates_.push_back( g );
  }

  void add_gate( gate_kind kind, std::initializer_list<line_id> operands, std::optional<uint32_t> level = std::nullopt )
  {
    add_gate( kind, std::span<line_id const>( operands.begin(), operands.size() ), level );
  }

  /*! \brief Tags `line` as the next primary output (weight = outputs so far) */
  void set_output( line_id line, std::string label )
  {
    auto& role = lines_.at( line );
    if ( role.output )
    {
      throw netlist_error( "line '" + role.name + "' is already an output" );
    }
    role.output = output_tag{std::move( label ), num_outputs_++};
  }

  void rename( line_id line, std::string name ) { lines_.at( line ).name = std::move( name ); }

  line_role const& line( line_id id ) const { return lines_.at( id ); }
  uint32_t num_lines() const noexcept { return static_cast<uint32_t>( lines_.size() ); }
  uint32_t num_gates() const noexcept { return static_cast<uint32_t>( gates_.size() ); }

  circuit build() const
  {
    std::unordered_set<std::string_view> names, labels;
    circuit c;
    c.lines_ = lines_;
    c.gates_ = gates_;
    c.outputs_.resize( num_outputs_ );
    for ( line_id i = 0u; i < lines_.size(); ++i )
    {
      auto const& role = lines_[i];
      if ( !is_identifier( role.name ) )
      {
        throw netlist_error( "invalid line name '" + role.name + "'" );
      }
      if ( !names.insert( role.name ).second )
      {
        throw netlist_error( "duplicate line name '" + role.name + "'" );
      }
      if ( role.is_input() )
      {
        c.inputs_.push_back( i );
      }
      if ( role.output )
      {
        if ( !is_identifier( role.output->name ) )
        {
          throw netlist_error( "invalid output name '" + role.output->name + "'" );
        }
        if ( !labels.insert( role.output->name ).second )
        {
          throw netlist_error( "duplicate output name '" + role.output->name + "'" );
        }
        c.outputs_[role.output->weight] = i;
      }
    }
    return c;
  }

private:
  std::vector<line_role> lines_;
  std::vector<gate_instance> gates_;
  uint32_t num_outputs_ = 0u;
};

} // namespace revtsg
