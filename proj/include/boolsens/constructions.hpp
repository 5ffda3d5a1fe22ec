#pragma once

#include "boolean_function.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace boolsens
{

inline BooleanFunction and_f( int n )
{
  return BooleanFunction::from_predicate( n, [all = ( std::uint64_t{ 1 } << n ) - 1]( std::uint64_t x ) { return x == all; } );
}

inline BooleanFunction or_f( int n )
{
  return BooleanFunction::from_predicate( n, []( std::uint64_t x ) { return x != 0; } );
}

inline BooleanFunction parity_f( int n )
{
  return BooleanFunction::from_predicate( n, []( std::uint64_t x ) { return std::popcount( x ) & 1; } );
}

/// x_var on n variables.
inline BooleanFunction dictator_f( int n, int var )
{
  if ( var < 1 || var > n )
    throw InvalidInput( "dictator: variable out of range" );
  return BooleanFunction::from_predicate( n, [var]( std::uint64_t x ) { return ( x >> ( var - 1 ) ) & 1; } );
}

/// AND of k ORs, each over k variables; variable (i, j) is x_{(i-1)k + j}.
inline BooleanFunction and_of_ors( int k, int max_vars = default_max_vars )
{
  if ( k < 1 )
    throw InvalidInput( "and_of_ors: k must be >= 1" );
  check_cap( "and_of_ors", k * k, max_vars );
  std::uint64_t const block = ( std::uint64_t{ 1 } << k ) - 1;
  return BooleanFunction::from_predicate( k * k, [k, block]( std::uint64_t x ) {
    for ( int i = 0; i < k; ++i )
      if ( ( ( x >> ( i * k ) ) & block ) == 0 )
        return false;
    return true;
  } );
}

/// Rubinstein's function on k^2 variables (k even): k blocks of k consecutive variables; the value
/// is 1 iff some block has exactly two ones and they occupy an aligned pair of positions
/// (2j-1, 2j) within the block.
inline BooleanFunction rubinstein( int k, int max_vars = default_max_vars )
{
  if ( k < 2 || k % 2 != 0 )
    throw InvalidInput( "rubinstein: k must be a positive even number" );
  check_cap( "rubinstein", k * k, max_vars );
  std::uint64_t const block = ( std::uint64_t{ 1 } << k ) - 1;
  return BooleanFunction::from_predicate( k * k, [k, block]( std::uint64_t x ) {
    for ( int i = 0; i < k; ++i )
    {
      std::uint64_t const b = ( x >> ( i * k ) ) & block;
      for ( int j = 0; j < k; j += 2 )
        if ( b == ( std::uint64_t{ 3 } << j ) )
          return true;
    }
    return false;
  } );
}

/// E3(x, y, z) = 1 iff the weight of (x, y, z) is 1 or 2; multilinear form x+y+z-xy-yz-zx.
inline bool e3( bool x, bool y, bool z ) noexcept
{
  int const w = int( x ) + int( y ) + int( z );
  return w == 1 || w == 2;
}

/// Complete ternary tree of E3 gates of depth t over 3^t leaves x_1..x_{3^t}, left to right.
inline BooleanFunction e3_tree( int depth, int max_vars = default_max_vars )
{
  if ( depth < 1 )
    throw InvalidInput( "e3_tree: depth must be >= 1" );
  int n = 1;
  for ( int i = 0; i < depth; ++i )
  {
    n *= 3;
    check_cap( "e3_tree", n, max_vars );
  }
  return BooleanFunction::from_predicate( n, [n]( std::uint64_t x ) {
    std::uint64_t level[64];
    int width = n;
    for ( int i = 0; i < n; ++i )
      level[i] = ( x >> i ) & 1;
    while ( width > 1 )
    {
      for ( int i = 0; i < width / 3; ++i )
        level[i] = e3( level[3 * i], level[3 * i + 1], level[3 * i + 2] );
      width /= 3;
    }
    return level[0] != 0;
  } );
}

/// Named family lookup for the command line: and, or, parity (n = parameter), and_of_ors,
/// rubinstein (k = parameter), e3 (depth = parameter).
inline BooleanFunction make_family( std::string const& name, int parameter )
{
  if ( name == "and" )
    return and_f( parameter );
  if ( name == "or" )
    return or_f( parameter );
  if ( name == "parity" )
    return parity_f( parameter );
  if ( name == "and_of_ors" || name == "and-of-ors" )
    return and_of_ors( parameter );
  if ( name == "rubinstein" )
    return rubinstein( parameter );
  if ( name == "e3" || name == "e3_tree" )
    return e3_tree( parameter );
  throw InvalidInput( "unknown family '" + name + "'" );
}

} // namespace boolsens
