#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revtsg
{

/*! \brief Base class of all errors raised by this library */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief An enumeration or table bound was exceeded */
class capacity_error : public error
{
public:
  using error::error;
};

/*! \brief An argument is outside the domain of an operation */
class domain_error : public error
{
public:
  using error::error;
};

/*! \brief A circuit under construction violates a structural invariant */
class netlist_error : public error
{
public:
  using error::error;
};

/*! \brief Simulation inputs do not match the circuit's primary inputs */
class input_error : public error
{
public:
  input_error( std::string const& msg, std::string name )
      : error( msg ), name_( std::move( name ) ) {}

  std::string const& name() const noexcept { return name_; }

private:
  std::string name_;
};

enum class parse_errc
{
  syntax,
  unknown_mnemonic,
  arity_mismatch,
  undeclared_line,
  duplicate_operand,
  constant_length_mismatch
};

inline char const* to_string( parse_errc e )
{
  switch ( e )
  {
  case parse_errc::syntax:
    return "syntax";
  case parse_errc::unknown_mnemonic:
    return "unknown-mnemonic";
  case parse_errc::arity_mismatch:
    return "arity-mismatch";
  case parse_errc::undeclared_line:
    return "undeclared-line";
  case parse_errc::duplicate_operand:
    return "duplicate-operand";
  case parse_errc::constant_length_mismatch:
    return "constant-length-mismatch";
  }
  return "unknown";
}

/*! \brief Netlist text could not be parsed

  Carries the error category and the 1-based line number of the offending
  text line (0 when the problem is detected after the whole text was read).
*/
class parse_error : public error
{
public:
  parse_error( parse_errc kind, std::size_t line, std::string const& msg )
      : error( "line " + std::to_string( line ) + ": " + to_string( kind ) + ": " + msg ),
        kind_( kind ), line_( line ) {}

  parse_errc kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

private:
  parse_errc kind_;
  std::size_t line_;
};

} // namespace revtsg
