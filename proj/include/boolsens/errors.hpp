#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace boolsens
{

/// Malformed input: bad table length, out-of-range index, syntax errors.
class InvalidInput : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked to run above the variable count it is configured for.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded( std::string operation, int n, int cap )
      : std::runtime_error( operation + ": n = " + std::to_string( n ) + " exceeds cap " + std::to_string( cap ) ),
        operation_( std::move( operation ) ), n_( n ), cap_( cap )
  {
  }

  std::string const& operation() const noexcept { return operation_; }
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

private:
  std::string operation_;
  int n_;
  int cap_;
};

/// Expression syntax error; position is the 0-based character offset.
class ParseError : public InvalidInput
{
public:
  ParseError( std::string const& what, std::size_t position )
      : InvalidInput( "at position " + std::to_string( position ) + ": " + what ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Iterative solver ran out of its iteration budget.
class NoConvergence : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline void check_cap( char const* operation, int n, int cap )
{
  if ( n > cap )
    throw CapExceeded( operation, n, cap );
}

} // namespace boolsens
