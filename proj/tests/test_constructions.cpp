#include "oracles.hpp"

#include <boolsens/constructions.hpp>
#include <boolsens/measures/block_sensitivity.hpp>
#include <boolsens/measures/degree.hpp>
#include <boolsens/measures/sensitivity.hpp>

#include <gtest/gtest.h>

#include <chrono>

using namespace boolsens;

TEST( Basic, AndOrParity )
{
  EXPECT_EQ( oracle::table_of( and_f( 2 ) ), ( oracle::Table{ 0, 0, 0, 1 } ) );
  EXPECT_EQ( or_f( 1 ), dictator_f( 1, 1 ) );
  EXPECT_TRUE( parity_f( 3 )( 7 ) );
  EXPECT_FALSE( parity_f( 3 )( 3 ) );
  EXPECT_THROW( dictator_f( 2, 3 ), InvalidInput );
}

TEST( AndOfOrs, Examples )
{
  EXPECT_EQ( and_of_ors( 1 ), dictator_f( 1, 1 ) );
  EXPECT_EQ( sensitivity( and_of_ors( 2 ) ), 2 );
  auto const f = and_of_ors( 3 );
  EXPECT_EQ( f.num_vars(), 9 );
  EXPECT_EQ( degree( f ), 9 );
  EXPECT_EQ( sensitivity( f ), 3 );
  for ( int k = 1; k <= 3; ++k )
  {
    auto const g = and_of_ors( k );
    EXPECT_EQ( sensitivity( g ), k );
    EXPECT_GE( block_sensitivity( g ), k );
    EXPECT_EQ( degree( g ), k * k );
  }
  // Clause j covers variables j*k+1 .. j*k+k.
  EXPECT_TRUE( f( 0b001'010'100 ) );
  EXPECT_FALSE( f( 0b000'010'100 ) );
}

TEST( Rubinstein, SmallCaseByHand )
{
  auto const f = rubinstein( 2 );
  EXPECT_TRUE( f( 0b0011 ) );  // x1 = x2 = 1, x3 = x4 = 0
  EXPECT_FALSE( f( 0b0101 ) ); // x1 = x3 = 1
  EXPECT_TRUE( f( 0b1100 ) );
  EXPECT_FALSE( f( 0b0110 ) ); // x2 = x3 = 1 is not one of the aligned pairs
  EXPECT_TRUE( f( 0b1111 ) ); // each block is its own aligned pair
  EXPECT_EQ( sensitivity( f ), 2 );
  EXPECT_EQ( block_sensitivity( f ), 2 );
  EXPECT_EQ( block_sensitivity( f ), oracle::block_sensitivity( oracle::table_of( f ) ) );
  EXPECT_THROW( rubinstein( 3 ), InvalidInput );
}

TEST( Rubinstein, SixteenVariables )
{
  auto const start = std::chrono::steady_clock::now();
  auto const f = rubinstein( 4 );
  int const s = sensitivity( f );
  double const seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  EXPECT_EQ( s, 4 );
  EXPECT_LT( seconds, 5.0 );
  int const bs0 = block_sensitivity_at( f, 0 );
  EXPECT_EQ( bs0, 8 );
  EXPECT_EQ( 2 * bs0, s * s );
}

TEST( Rubinstein, GlobalBlockSensitivityAtSixteenVariables )
{
  // The function is invariant under permuting blocks, swapping the two aligned pairs of a block
  // and swapping the two bits of a pair, so one point per orbit suffices. A pair is 00, 01 or 11
  // up to its swap; a block is an unordered pair of pair types; a point is a multiset of blocks.
  auto const f = rubinstein( 4 );
  std::uint64_t const pair_bits[] = { 0b00, 0b01, 0b11 };
  std::vector<std::uint64_t> blocks;
  for ( int a = 0; a < 3; ++a )
    for ( int b = a; b < 3; ++b )
      blocks.push_back( pair_bits[a] | ( pair_bits[b] << 2 ) );
  int best = 0;
  std::size_t points = 0;
  for ( std::size_t i = 0; i < blocks.size(); ++i )
    for ( std::size_t j = i; j < blocks.size(); ++j )
      for ( std::size_t k = j; k < blocks.size(); ++k )
        for ( std::size_t l = k; l < blocks.size(); ++l )
        {
          std::uint64_t const x = blocks[i] | ( blocks[j] << 4 ) | ( blocks[k] << 8 ) | ( blocks[l] << 12 );
          best = std::max( best, block_sensitivity_at( f, x ) );
          ++points;
        }
  EXPECT_EQ( points, 126u );
  EXPECT_EQ( best, 8 );
}

TEST( E3Tree, DepthOneAndTwo )
{
  auto const t1 = e3_tree( 1 );
  EXPECT_EQ( degree( t1 ), 2 );
  EXPECT_FALSE( t1( 0 ) );
  EXPECT_FALSE( t1( 0b111 ) );
  EXPECT_TRUE( t1( 0b001 ) );
  auto const t2 = e3_tree( 2 );
  EXPECT_EQ( t2.num_vars(), 9 );
  EXPECT_EQ( degree( t2 ), 4 );
  for ( auto const& f : { t1, t2 } )
  {
    EXPECT_FALSE( f( 0 ) );
    for ( int i = 0; i < f.num_vars(); ++i )
      EXPECT_TRUE( f( std::uint64_t{ 1 } << i ) );
  }
  for ( bool x : { false, true } )
    for ( bool y : { false, true } )
      for ( bool z : { false, true } )
      {
        EXPECT_EQ( e3( x, y, z ), e3( y, z, x ) );
        EXPECT_EQ( e3( x, y, z ), e3( y, x, z ) );
      }
}

TEST( Families, LookupByName )
{
  EXPECT_EQ( make_family( "and", 3 ), and_f( 3 ) );
  EXPECT_EQ( make_family( "parity", 2 ), parity_f( 2 ) );
  EXPECT_EQ( make_family( "rubinstein", 2 ), rubinstein( 2 ) );
  EXPECT_EQ( make_family( "and_of_ors", 2 ), and_of_ors( 2 ) );
  EXPECT_EQ( make_family( "e3", 1 ), e3_tree( 1 ) );
  EXPECT_THROW( make_family( "majority", 3 ), InvalidInput );
  EXPECT_THROW( e3_tree( 3, 20 ), CapExceeded );
}
