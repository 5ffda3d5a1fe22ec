#pragma once

#include "boolean_function.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace boolsens
{

/// Hex encoding of a table: most significant digit first, table index i is bit (i mod 4)
/// of digit floor(i/4) counted from the right end of the string.
inline std::string to_hex( BooleanFunction const& f )
{
  std::size_t const bits = f.num_points();
  std::size_t const digits = bits < 4 ? 1 : bits / 4;
  std::string out( digits, '0' );
  for ( std::size_t d = 0; d < digits; ++d )
  {
    unsigned v = 0;
    for ( unsigned b = 0; b < 4; ++b )
    {
      std::size_t const i = d * 4 + b;
      if ( i < bits && f( i ) )
        v |= 1u << b;
    }
    out[digits - 1 - d] = "0123456789abcdef"[v];
  }
  return out;
}

inline BooleanFunction from_hex( int n, std::string_view hex, int max_vars = default_max_vars )
{
  if ( n < 0 )
    throw InvalidInput( "negative variable count" );
  check_cap( "truth table", n, max_vars );
  std::size_t const bits = std::size_t{ 1 } << n;
  std::size_t const digits = bits < 4 ? 1 : bits / 4;
  if ( hex.size() != digits )
    throw InvalidInput( "expected " + std::to_string( digits ) + " hex digits for n = " + std::to_string( n ) + ", got " +
                        std::to_string( hex.size() ) );
  BitTable t( bits );
  for ( std::size_t d = 0; d < digits; ++d )
  {
    char const c = static_cast<char>( std::tolower( static_cast<unsigned char>( hex[digits - 1 - d] ) ) );
    unsigned v;
    if ( c >= '0' && c <= '9' )
      v = static_cast<unsigned>( c - '0' );
    else if ( c >= 'a' && c <= 'f' )
      v = static_cast<unsigned>( c - 'a' + 10 );
    else
      throw InvalidInput( std::string( "invalid hex digit '" ) + hex[digits - 1 - d] + "'" );
    for ( unsigned b = 0; b < 4; ++b )
    {
      std::size_t const i = d * 4 + b;
      bool const bit = ( v >> b ) & 1;
      if ( i >= bits )
      {
        if ( bit )
          throw InvalidInput( "hex digit sets bits beyond the table length" );
        continue;
      }
      t.set( i, bit );
    }
  }
  return BooleanFunction( n, std::move( t ), max_vars );
}

/// Two-line text format: decimal n, then the hex table.
inline std::string write_truth_table( BooleanFunction const& f )
{
  return std::to_string( f.num_vars() ) + "\n" + to_hex( f ) + "\n";
}

inline BooleanFunction read_truth_table( std::istream& in, int max_vars = default_max_vars )
{
  std::string line;
  if ( !std::getline( in, line ) )
    throw InvalidInput( "truth table: missing variable count line" );
  int n = -1;
  std::istringstream ns( line );
  if ( !( ns >> n ) || n < 0 || !( ns >> std::ws ).eof() )
    throw InvalidInput( "truth table: first line must be a non-negative integer" );
  if ( !std::getline( in, line ) )
    throw InvalidInput( "truth table: missing hex table line" );
  while ( !line.empty() && std::isspace( static_cast<unsigned char>( line.back() ) ) )
    line.pop_back();
  return from_hex( n, line, max_vars );
}

inline BooleanFunction read_truth_table_file( std::string const& path, int max_vars = default_max_vars )
{
  std::ifstream in( path );
  if ( !in )
    throw InvalidInput( "cannot open truth table file '" + path + "'" );
  return read_truth_table( in, max_vars );
}

} // namespace boolsens
