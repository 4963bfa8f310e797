/*!
  \file analysis.hpp
  \brief Cost census, closed-form multiplier model, delay, Landauer bound and
         power-gating activity
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gates.hpp"
#include "simulate.hpp"
#include "synth.hpp"

namespace revtsg
{

struct cost_report
{
  std::map<gate_kind, uint32_t> gates_by_kind;
  /*! Feynman gates whose target is a still-untouched constant-0 line */
  uint32_t copy_gates = 0u;
  /*! TSG gates whose third operand is a still-untouched constant-0 line */
  uint32_t fa_cells = 0u;
  uint32_t garbage = 0u;
  uint32_t constants = 0u;
  uint32_t primary_inputs = 0u;
  uint32_t primary_outputs = 0u;
  uint32_t lines = 0u;
  uint32_t levels = 0u;
  /*! ASAP gate depth over lines */
  uint32_t depth = 0u;
  uint32_t total_gates = 0u;

  uint32_t count( gate_kind kind ) const
  {
    auto const it = gates_by_kind.find( kind );
    return it == gates_by_kind.end() ? 0u : it->second;
  }
  uint32_t core_gates() const noexcept { return total_gates - copy_gates; }
};

namespace detail
{

/* visits every gate with a flag telling whether each operand is an untouched constant-0 line */
template<typename Fn>
void foreach_gate_with_freshness( circuit const& c, Fn&& fn )
{
  std::vector<bool> touched( c.num_lines(), false );
  auto fresh_zero = [&]( line_id l ) {
    auto const& role = c.line( l );
    return !touched[l] && role.is_constant() && !*role.constant;
  };
  for ( uint32_t i = 0u; i < c.num_gates(); ++i )
  {
    auto const& g = c.gates()[i];
    fn( i, g, fresh_zero );
    for ( auto l : g.operands() )
    {
      touched[l] = true;
    }
  }
}

} // namespace detail

inline bool is_fa_cell_kind( gate_instance const& g ) { return g.kind == gate_kind::tsg; }

inline cost_report measure( circuit const& c )
{
  cost_report r;
  auto const roles = count_roles( c );
  r.garbage = roles.garbage;
  r.constants = roles.constants;
  r.primary_inputs = roles.primary_inputs;
  r.primary_outputs = roles.primary_outputs;
  r.lines = c.num_lines();
  r.total_gates = c.num_gates();

  std::vector<uint32_t> line_depth( c.num_lines(), 0u );
  std::optional<uint32_t> max_level;
  detail::foreach_gate_with_freshness( c, [&]( uint32_t, gate_instance const& g, auto const& fresh_zero ) {
    ++r.gates_by_kind[g.kind];
    auto const ops = g.operands();
    if ( g.kind == gate_kind::feynman && fresh_zero( ops[1] ) )
    {
      ++r.copy_gates;
    }
    if ( g.kind == gate_kind::tsg && fresh_zero( ops[2] ) )
    {
      ++r.fa_cells;
    }
    uint32_t d = 0u;
    for ( auto l : ops )
    {
      d = std::max( d, line_depth[l] );
    }
    for ( auto l : ops )
    {
      line_depth[l] = d + 1u;
    }
    r.depth = std::max( r.depth, d + 1u );
    if ( g.level )
    {
      max_level = std::max( max_level.value_or( 0u ), *g.level );
    }
  } );
  r.levels = max_level ? *max_level : r.depth;
  return r;
}

constexpr uint32_t ceil_log2( uint64_t n )
{
  uint32_t k = 0u;
  while ( ( uint64_t{1} << k ) < n )
  {
    ++k;
  }
  return k;
}

struct closed_form_census
{
  uint64_t fredkin;
  uint64_t fa_cells;
  uint64_t adders;
  uint32_t levels;

  uint64_t gates() const noexcept { return fredkin + fa_cells; }
};

/*! \brief Closed-form census of the N x N tree multiplier

  n² Fredkin gates, (n - 1) adders of n bits each, so n(n - 1) full-adder
  cells, over ⌈log₂ n⌉ addition levels.
*/
inline closed_form_census closed_form_model( uint32_t n )
{
  if ( n < 2u )
  {
    throw domain_error( "closed-form model needs n >= 2" );
  }
  uint64_t const w = n;
  return {w * w, w * ( w - 1u ), w - 1u, ceil_log2( w )};
}

struct delay_model
{
  double d = 1.0;
  double d_prime = 1.0;
};

/*! \brief Coefficients of d and d' in the worst-case delay */
struct delay_terms
{
  uint64_t d_coefficient;
  uint64_t d_prime_coefficient;
};

inline delay_terms delay_coefficients( uint32_t n )
{
  if ( n < 1u )
  {
    throw domain_error( "operand width must be at least 1" );
  }
  return {1u, uint64_t{n} * ceil_log2( n )};
}

/*! \brief Worst-case multiplier delay `d + n·d'·⌈log₂ n⌉` */
inline double delay_estimate( uint32_t n, delay_model const& m )
{
  if ( m.d < 0.0 || m.d_prime < 0.0 )
  {
    throw domain_error( "delays must be non-negative" );
  }
  auto const t = delay_coefficients( n );
  return static_cast<double>( t.d_coefficient ) * m.d + static_cast<double>( t.d_prime_coefficient ) * m.d_prime;
}

inline constexpr char const* delay_formula = "d + n*d'*ceil(log2 n)";

inline constexpr double boltzmann_constant = 1.380649e-23;

/*! \brief Minimum heat for erasing `bits_lost` bits at `kelvin`, in joules */
inline double landauer_energy( uint64_t bits_lost, double kelvin )
{
  if ( !( kelvin > 0.0 ) )
  {
    throw domain_error( "temperature must be positive" );
  }
  return static_cast<double>( bits_lost ) * boltzmann_constant * kelvin * std::log( 2.0 );
}

enum class gating_reason
{
  operands_zero,
  level_complete,
  active
};

inline char const* to_string( gating_reason r )
{
  switch ( r )
  {
  case gating_reason::operands_zero:
    return "operands_zero";
  case gating_reason::level_complete:
    return "level_complete";
  case gating_reason::active:
    return "active";
  }
  return "unknown";
}

struct adder_activity
{
  uint32_t level;
  uint32_t first_gate;
  uint32_t cells;
  bool lhs_zero;
  bool rhs_zero;
  /*! either operands_zero or active; level_complete only appears per step */
  gating_reason reason;
};

struct level_activity
{
  uint32_t level;
  uint32_t active;
  uint32_t gated;
};

/*! \brief Cell status while the adders of level `step` compute */
struct step_activity
{
  uint32_t step;
  uint32_t running;
  uint32_t gated_zero;
  uint32_t complete;
  uint32_t pending;
};

struct activity_report
{
  std::vector<level_activity> per_level;
  std::vector<adder_activity> adders;
  std::vector<step_activity> steps;
  uint32_t total_cells = 0u;
  uint32_t total_active = 0u;

  uint32_t total_gated() const noexcept { return total_cells - total_active; }

  /*! \brief Status of an adder while level `step` computes */
  static gating_reason reason_at( adder_activity const& a, uint32_t step )
  {
    return step > a.level ? gating_reason::level_complete : a.reason;
  }
};

/*! \brief Static power-gating analysis for a concrete input assignment

  Full-adder cells are grouped into adders: contiguous runs of cells at the
  same level that share a carry line.  Rows are tracked through the
  cascade: a Fredkin partial-product gate adds its third line to the row of
  its control line, and an adder merges its operand rows into one result row
  made of the untouched low lines of its left row, its sum lines and its
  carry line.  An adder is gated (operands_zero) when both input rows are
  all-zero at the moment it starts; every adder is switched off
  (level_complete) in every step after its own level.

  Throws domain_error when a full-adder cell has no level annotation.
*/
inline activity_report activity_analysis( circuit const& c, input_assignment const& inputs )
{
  struct group
  {
    uint32_t first, last, level;
  };
  std::vector<group> groups;
  std::vector<bool> fredkin_pp( c.num_gates(), false );
  std::vector<bool> fa_cell( c.num_gates(), false );
  detail::foreach_gate_with_freshness( c, [&]( uint32_t i, gate_instance const& g, auto const& fresh_zero ) {
    auto const ops = g.operands();
    if ( g.kind == gate_kind::fredkin && fresh_zero( ops[2] ) )
    {
      fredkin_pp[i] = true;
    }
    if ( g.kind == gate_kind::tsg && fresh_zero( ops[2] ) )
    {
      if ( !g.level )
      {
        throw domain_error( "missing level annotations" );
      }
      fa_cell[i] = true;
      if ( !groups.empty() && groups.back().last + 1u == i && groups.back().level == *g.level &&
           c.gates()[groups.back().first].operands()[3] == ops[3] )
      {
        groups.back().last = i;
      }
      else
      {
        groups.push_back( {i, i, *g.level} );
      }
    }
  } );

  auto state = initial_state( c, inputs );
  std::vector<int32_t> row_of_line( c.num_lines(), -1 );
  std::map<line_id, int32_t> row_of_control;
  int32_t next_row = 0;

  activity_report report;
  std::size_t next_group = 0u;
  for ( uint32_t i = 0u; i < c.num_gates(); ++i )
  {
    auto const& g = c.gates()[i];
    if ( fredkin_pp[i] )
    {
      auto const [it, inserted] = row_of_control.try_emplace( g.operands()[0], next_row );
      if ( inserted )
      {
        ++next_row;
      }
      row_of_line[g.operands()[2]] = it->second;
    }
    if ( next_group < groups.size() && groups[next_group].first == i )
    {
      auto const& grp = groups[next_group++];
      std::set<int32_t> lhs_rows, rhs_rows;
      std::vector<line_id> lhs_lines, rhs_lines;
      for ( auto k = grp.first; k <= grp.last; ++k )
      {
        auto const ops = c.gates()[k].operands();
        lhs_lines.push_back( ops[0] );
        rhs_lines.push_back( ops[1] );
        if ( row_of_line[ops[0]] >= 0 )
        {
          lhs_rows.insert( row_of_line[ops[0]] );
        }
        if ( row_of_line[ops[1]] >= 0 )
        {
          rhs_rows.insert( row_of_line[ops[1]] );
        }
      }
      auto row_zero = [&]( std::set<int32_t> const& rows, std::vector<line_id> const& fallback ) {
        if ( rows.empty() )
        {
          return std::none_of( fallback.begin(), fallback.end(), [&]( line_id l ) { return state[l]; } );
        }
        for ( line_id l = 0u; l < c.num_lines(); ++l )
        {
          if ( rows.count( row_of_line[l] ) && state[l] )
          {
            return false;
          }
        }
        return true;
      };
      adder_activity a{grp.level, grp.first, grp.last - grp.first + 1u, row_zero( lhs_rows, lhs_lines ),
                       row_zero( rhs_rows, rhs_lines ), gating_reason::active};
      if ( a.lhs_zero && a.rhs_zero )
      {
        a.reason = gating_reason::operands_zero;
      }
      report.adders.push_back( a );

      auto const merged = next_row++;
      for ( line_id l = 0u; l < c.num_lines(); ++l )
      {
        if ( lhs_rows.count( row_of_line[l] ) )
        {
          row_of_line[l] = merged;
        }
        else if ( rhs_rows.count( row_of_line[l] ) )
        {
          row_of_line[l] = -1;
        }
      }
      for ( auto k = grp.first; k <= grp.last; ++k )
      {
        auto const ops = c.gates()[k].operands();
        row_of_line[ops[0]] = -1;
        row_of_line[ops[1]] = -1;
        row_of_line[ops[2]] = merged;
        row_of_line[ops[3]] = merged;
      }
    }
    apply_gate( g, state );
  }

  std::map<uint32_t, level_activity> levels;
  for ( auto const& a : report.adders )
  {
    auto& lv = levels.try_emplace( a.level, level_activity{a.level, 0u, 0u} ).first->second;
    ( a.reason == gating_reason::active ? lv.active : lv.gated ) += a.cells;
    report.total_cells += a.cells;
    if ( a.reason == gating_reason::active )
    {
      report.total_active += a.cells;
    }
  }
  for ( auto const& [level, lv] : levels )
  {
    report.per_level.push_back( lv );
  }
  for ( auto const& lv : report.per_level )
  {
    step_activity st{lv.level, lv.active, lv.gated, 0u, 0u};
    for ( auto const& other : report.per_level )
    {
      if ( other.level < lv.level )
      {
        st.complete += other.active + other.gated;
      }
      else if ( other.level > lv.level )
      {
        st.pending += other.active + other.gated;
      }
    }
    report.steps.push_back( st );
  }
  return report;
}

/*! \brief Activity for operand words on `x*` and `y*`; all other inputs are 0 */
inline activity_report activity_analysis( circuit const& c, uint64_t x, uint64_t y )
{
  auto const wx = word_width( c, "x" );
  auto const wy = word_width( c, "y" );
  if ( ( wx < 64u && ( x >> wx ) != 0u ) || ( wy < 64u && ( y >> wy ) != 0u ) )
  {
    throw domain_error( "operand does not fit the circuit's operand width" );
  }
  input_assignment inputs;
  for ( auto id : c.inputs() )
  {
    inputs[c.line( id ).name] = false;
  }
  assign_word( inputs, "x", x, wx );
  assign_word( inputs, "y", y, wy );
  return activity_analysis( c, inputs );
}

using kv_document = std::vector<std::pair<std::string, std::string>>;

inline std::string render_kv( kv_document const& doc )
{
  std::string out;
  for ( auto const& [k, v] : doc )
  {
    out += k + "=" + v + "\n";
  }
  return out;
}

inline kv_document to_kv( cost_report const& r )
{
  auto s = []( auto v ) { return std::to_string( v ); };
  return {{"gates.not", s( r.count( gate_kind::not_gate ) )},
          {"gates.feynman", s( r.count( gate_kind::feynman ) )},
          {"gates.toffoli", s( r.count( gate_kind::toffoli ) )},
          {"gates.fredkin", s( r.count( gate_kind::fredkin ) )},
          {"gates.tsg", s( r.count( gate_kind::tsg ) )},
          {"gates.total", s( r.total_gates )},
          {"gates.copy", s( r.copy_gates )},
          {"gates.core", s( r.core_gates() )},
          {"fa_cells", s( r.fa_cells )},
          {"lines", s( r.lines )},
          {"inputs", s( r.primary_inputs )},
          {"constants", s( r.constants )},
          {"outputs", s( r.primary_outputs )},
          {"garbage", s( r.garbage )},
          {"levels", s( r.levels )},
          {"depth", s( r.depth )}};
}

inline std::string render_text( cost_report const& r )
{
  std::ostringstream os;
  os << "gates     " << r.total_gates << " (not " << r.count( gate_kind::not_gate ) << ", feynman "
     << r.count( gate_kind::feynman ) << ", toffoli " << r.count( gate_kind::toffoli ) << ", fredkin "
     << r.count( gate_kind::fredkin ) << ", tsg " << r.count( gate_kind::tsg ) << ")\n";
  os << "core      " << r.core_gates() << "\n";
  os << "copies    " << r.copy_gates << "\n";
  os << "fa cells  " << r.fa_cells << "\n";
  os << "lines     " << r.lines << " (inputs " << r.primary_inputs << ", constants " << r.constants << ")\n";
  os << "outputs   " << r.primary_outputs << "\n";
  os << "garbage   " << r.garbage << "\n";
  os << "levels    " << r.levels << "\n";
  os << "depth     " << r.depth << "\n";
  return os.str();
}

inline std::string render_text( activity_report const& r )
{
  std::ostringstream os;
  os << "total_active " << r.total_active << " of " << r.total_cells << " fa cells\n";
  for ( auto const& lv : r.per_level )
  {
    os << "level " << lv.level << ": active " << lv.active << ", gated " << lv.gated << "\n";
  }
  for ( auto const& st : r.steps )
  {
    os << "step " << st.step << ": running " << st.running << ", gated(zero) " << st.gated_zero << ", complete "
       << st.complete << ", pending " << st.pending << "\n";
  }
  for ( auto const& a : r.adders )
  {
    os << "adder @gate " << a.first_gate << " level " << a.level << " cells " << a.cells << ": "
       << to_string( a.reason ) << "\n";
  }
  return os.str();
}

/*! \brief 4x4 multiplier comparison against published and closed-form figures */
struct comparison_report
{
  literature_metrics literature = reference_constants();
  cost_report measured;
  cost_report measured_full_adder = revtsg::measure( make_full_adder() );
  std::optional<uint32_t> n;
  std::optional<closed_form_census> model;

  std::string render_text() const
  {
    std::ostringstream os;
    os << "multiplier gate counts\n";
    for ( auto const& m : literature.multipliers )
    {
      os << "  published " << std::left << std::setw( 24 ) << m.design << m.gates << "\n";
    }
    if ( model )
    {
      os << "  closed-form n=" << std::left << std::setw( 21 ) << *n << model->gates() << " (" << model->fredkin
         << " fredkin + " << model->fa_cells << " fa cells, " << model->adders << " adders, " << model->levels
         << " levels)\n";
    }
    os << "  measured " << std::left << std::setw( 25 ) << "core" << measured.core_gates() << " ("
       << measured.count( gate_kind::fredkin ) << " fredkin + " << measured.count( gate_kind::tsg ) << " tsg)\n";
    os << "  measured " << std::left << std::setw( 25 ) << "copy overhead" << measured.copy_gates << "\n";
    os << "  measured " << std::left << std::setw( 25 ) << "total" << measured.total_gates << "\n";
    os << "  measured " << std::left << std::setw( 25 ) << "garbage" << measured.garbage << "\n";
    if ( model )
    {
      os << "  fa cells closed-form vs measured: " << model->fa_cells << " vs " << measured.fa_cells << " (delta "
         << static_cast<int64_t>( measured.fa_cells ) - static_cast<int64_t>( model->fa_cells ) << ")\n";
      auto const t = delay_coefficients( *n );
      os << "  delay " << delay_formula << " = " << t.d_coefficient << "*d + " << t.d_prime_coefficient << "*d'\n";
    }
    os << "full adders (gates, garbage, unit delay)\n";
    for ( auto const& fa : literature.full_adders )
    {
      os << "  published " << std::left << std::setw( 24 ) << fa.design << fa.gates << " " << fa.garbage << " "
         << fa.unit_delay << "\n";
    }
    os << "  measured  " << std::left << std::setw( 24 ) << "tsg-single-gate" << measured_full_adder.total_gates
       << " " << measured_full_adder.garbage << " " << measured_full_adder.levels << "\n";
    return os.str();
  }

  kv_document to_kv() const
  {
    auto s = []( auto v ) { return std::to_string( v ); };
    kv_document doc;
    for ( auto const& m : literature.multipliers )
    {
      doc.emplace_back( "published." + std::string( m.design ) + ".gates", s( m.gates ) );
    }
    for ( auto const& fa : literature.full_adders )
    {
      doc.emplace_back( "published." + std::string( fa.design ) + ".fa",
                        s( fa.gates ) + "," + s( fa.garbage ) + "," + s( fa.unit_delay ) );
    }
    doc.emplace_back( "measured.full_adder", s( measured_full_adder.total_gates ) + "," +
                                                 s( measured_full_adder.garbage ) + "," +
                                                 s( measured_full_adder.levels ) );
    if ( model )
    {
      doc.emplace_back( "model.n", s( *n ) );
      doc.emplace_back( "model.fredkin", s( model->fredkin ) );
      doc.emplace_back( "model.fa_cells", s( model->fa_cells ) );
      doc.emplace_back( "model.adders", s( model->adders ) );
      doc.emplace_back( "model.levels", s( model->levels ) );
      doc.emplace_back( "model.gates", s( model->gates() ) );
      auto const t = delay_coefficients( *n );
      doc.emplace_back( "model.delay", s( t.d_coefficient ) + "*d+" + s( t.d_prime_coefficient ) + "*d'" );
    }
    doc.emplace_back( "measured.fredkin", s( measured.count( gate_kind::fredkin ) ) );
    doc.emplace_back( "measured.tsg", s( measured.count( gate_kind::tsg ) ) );
    doc.emplace_back( "measured.fa_cells", s( measured.fa_cells ) );
    doc.emplace_back( "measured.copy_gates", s( measured.copy_gates ) );
    doc.emplace_back( "measured.core_gates", s( measured.core_gates() ) );
    doc.emplace_back( "measured.total_gates", s( measured.total_gates ) );
    doc.emplace_back( "measured.garbage", s( measured.garbage ) );
    doc.emplace_back( "measured.levels", s( measured.levels ) );
    return doc;
  }
};

/*! \brief Comparison report; the closed-form columns need an operand width n >= 2 */
inline comparison_report make_comparison_report( cost_report const& measured, std::optional<uint32_t> n )
{
  comparison_report r;
  r.measured = measured;
  if ( n && *n >= 2u )
  {
    r.n = n;
    r.model = closed_form_model( *n );
  }
  return r;
}

} // namespace revtsg
