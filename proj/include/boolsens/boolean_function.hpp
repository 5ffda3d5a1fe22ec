#pragma once

#include "bit_table.hpp"
#include "errors.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boolsens
{

/// Subset of variables [n] as a bit mask: variable j (1-based) is bit j-1.
using VarSet = std::uint32_t;

inline constexpr int default_max_vars = 24;

inline constexpr VarSet var_bit( int var ) noexcept { return VarSet{ 1 } << ( var - 1 ); }
inline constexpr VarSet full_set( int n ) noexcept { return n >= 32 ? ~VarSet{ 0 } : ( VarSet{ 1 } << n ) - 1; }
inline constexpr int set_size( std::uint64_t s ) noexcept { return std::popcount( s ); }

/// Point of {0,1}^n. Variable x_j is bit j-1 of index, so x_1 is the least-significant bit.
struct Assignment
{
  int n = 0;
  std::uint64_t index = 0;

  friend bool operator==( Assignment const&, Assignment const& ) = default;
};

inline Assignment make_assignment( int n, std::uint64_t index )
{
  if ( n < 0 || n > 63 || index >= ( std::uint64_t{ 1 } << n ) )
    throw InvalidInput( "assignment index " + std::to_string( index ) + " out of range for n = " + std::to_string( n ) );
  return { n, index };
}

/// x^(S): the point differing from x exactly on the variables in S.
inline Assignment flip_set( Assignment x, VarSet s )
{
  if ( ( s & ~full_set( x.n ) ) != 0 )
    throw InvalidInput( "flip set is not a subset of [n]" );
  return { x.n, x.index ^ s };
}

/// Truth table of f : {0,1}^n -> {0,1}. Immutable after construction.
class BooleanFunction
{
public:
  BooleanFunction() : BooleanFunction( 0, BitTable( 1 ) ) {}

  BooleanFunction( int n, BitTable table, int max_vars = default_max_vars ) : n_( n ), table_( std::move( table ) )
  {
    if ( n < 0 )
      throw InvalidInput( "negative variable count" );
    check_cap( "BooleanFunction", n, max_vars );
    if ( table_.size() != ( std::size_t{ 1 } << n ) )
      throw InvalidInput( "table length " + std::to_string( table_.size() ) + " != 2^" + std::to_string( n ) );
  }

  template<typename Predicate>
  static BooleanFunction from_predicate( int n, Predicate&& pred, int max_vars = default_max_vars )
  {
    if ( n < 0 )
      throw InvalidInput( "negative variable count" );
    check_cap( "BooleanFunction", n, max_vars );
    BitTable t( std::size_t{ 1 } << n );
    for ( std::uint64_t x = 0; x < t.size(); ++x )
      if ( pred( x ) )
        t.set( x );
    return BooleanFunction( n, std::move( t ), max_vars );
  }

  static BooleanFunction constant( int n, bool value ) { return BooleanFunction( n, BitTable( std::size_t{ 1 } << n, value ) ); }

  int num_vars() const noexcept { return n_; }
  std::uint64_t num_points() const noexcept { return std::uint64_t{ 1 } << n_; }

  bool operator()( std::uint64_t x ) const noexcept { return table_.test( x ); }
  bool operator()( Assignment x ) const noexcept { return table_.test( x.index ); }

  BitTable const& table() const noexcept { return table_; }

  bool is_constant() const noexcept { return table_.none() || table_.all(); }

  std::uint64_t weight() const noexcept { return table_.count(); }

  friend bool operator==( BooleanFunction const&, BooleanFunction const& ) = default;

private:
  int n_;
  BitTable table_;
};

/// Builds a function from an explicit list of bits; index i is f at the point whose bits spell i.
template<typename Int>
BooleanFunction from_truth_table( int n, std::span<Int const> bits, int max_vars = default_max_vars )
{
  if ( n < 0 )
    throw InvalidInput( "negative variable count" );
  check_cap( "from_truth_table", n, max_vars );
  auto const len = std::size_t{ 1 } << n;
  if ( bits.size() != len )
    throw InvalidInput( "table length " + std::to_string( bits.size() ) + " != " + std::to_string( len ) );
  BitTable t( len );
  for ( std::size_t i = 0; i < len; ++i )
  {
    if ( bits[i] != Int{ 0 } && bits[i] != Int{ 1 } )
      throw InvalidInput( "table entry " + std::to_string( i ) + " is not a bit" );
    t.set( i, bits[i] == Int{ 1 } );
  }
  return BooleanFunction( n, std::move( t ), max_vars );
}

inline BooleanFunction from_truth_table( int n, std::vector<int> const& bits, int max_vars = default_max_vars )
{
  return from_truth_table<int>( n, std::span<int const>( bits ), max_vars );
}

/// Fixes x_var (1-based) to value; variables above var shift down by one.
inline BooleanFunction restrict( BooleanFunction const& f, int var, bool value )
{
  int const n = f.num_vars();
  if ( var < 1 || var > n )
    throw InvalidInput( "restrict: variable " + std::to_string( var ) + " out of range [1, " + std::to_string( n ) + "]" );
  int const pos = var - 1;
  std::uint64_t const low_mask = ( std::uint64_t{ 1 } << pos ) - 1;
  std::uint64_t const fixed = std::uint64_t{ value } << pos;
  BitTable t( std::size_t{ 1 } << ( n - 1 ) );
  for ( std::uint64_t y = 0; y < t.size(); ++y )
  {
    std::uint64_t const x = ( y & low_mask ) | fixed | ( ( y & ~low_mask ) << 1 );
    if ( f( x ) )
      t.set( y );
  }
  return BooleanFunction( n - 1, std::move( t ) );
}

/// Variables whose two restrictions differ.
inline VarSet relevant_variables( BooleanFunction const& f )
{
  VarSet result = 0;
  for ( int i = 0; i < f.num_vars(); ++i )
  {
    std::uint64_t const bit = std::uint64_t{ 1 } << i;
    for ( std::uint64_t x = 0; x < f.num_points(); ++x )
    {
      if ( ( x & bit ) == 0 && f( x ) != f( x | bit ) )
      {
        result |= VarSet{ 1 } << i;
        break;
      }
    }
  }
  return result;
}

/// Function of the ±1 view: input bit b is (-1)^b, output bit b is (-1)^b.
class PlusMinusView
{
public:
  explicit PlusMinusView( BooleanFunction const& f ) : n_( f.num_vars() ), values_( f.num_points() )
  {
    for ( std::uint64_t x = 0; x < f.num_points(); ++x )
      values_[x] = f( x ) ? -1 : 1;
  }

  int num_vars() const noexcept { return n_; }

  /// Value at the point with the given ±1 coordinates (coordinate j-1 is x_j).
  int operator()( std::span<int const> point ) const
  {
    if ( point.size() != static_cast<std::size_t>( n_ ) )
      throw InvalidInput( "point dimension mismatch" );
    std::uint64_t index = 0;
    for ( std::size_t j = 0; j < point.size(); ++j )
    {
      if ( point[j] != 1 && point[j] != -1 )
        throw InvalidInput( "coordinate is not ±1" );
      if ( point[j] == -1 )
        index |= std::uint64_t{ 1 } << j;
    }
    return values_[index];
  }

  /// Value at the ±1 image of the 0/1 point with this index.
  int at_index( std::uint64_t index ) const noexcept { return values_[index]; }

  std::span<int const> values() const noexcept { return values_; }

  BooleanFunction to_boolean() const
  {
    return BooleanFunction::from_predicate( n_, [this]( std::uint64_t x ) { return values_[x] == -1; } );
  }

private:
  int n_;
  std::vector<int> values_;
};

inline PlusMinusView to_pm1( BooleanFunction const& f ) { return PlusMinusView( f ); }

} // namespace boolsens

template<>
struct std::hash<boolsens::BooleanFunction>
{
  std::size_t operator()( boolsens::BooleanFunction const& f ) const noexcept
  {
    return f.table().hash() ^ static_cast<std::size_t>( f.num_vars() );
  }
};
