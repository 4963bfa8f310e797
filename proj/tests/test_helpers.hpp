#pragma once

#include <cstdint>
#include <random>

#include <revtsg/circuit.hpp>
#include <revtsg/simulate.hpp>

namespace revtsg::test
{

inline bit_state random_state( std::size_t n, std::mt19937_64& rng )
{
  bit_state s( n );
  for ( std::size_t i = 0u; i < n; ++i )
  {
    s.set( i, rng() & 1u );
  }
  return s;
}

/* integer value of the outputs after driving x*, y* (and cin when present) */
inline uint64_t evaluate( circuit const& c, uint64_t x, uint64_t y, bool cin = false )
{
  input_assignment inputs;
  for ( auto id : c.inputs() )
  {
    inputs[c.line( id ).name] = false;
  }
  assign_word( inputs, "x", x, word_width( c, "x" ) );
  assign_word( inputs, "y", y, word_width( c, "y" ) );
  if ( inputs.count( "cin" ) )
  {
    inputs["cin"] = cin;
  }
  return output_word( c, run( c, initial_state( c, inputs ) ) );
}

} // namespace revtsg::test
