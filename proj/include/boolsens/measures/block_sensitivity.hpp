#pragma once

#include "../boolean_function.hpp"
#include "caps.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace boolsens
{

/// Sensitive blocks at x with no proper sensitive subset, ordered by size then mask.
inline std::vector<VarSet> minimal_sensitive_blocks( BooleanFunction const& f, std::uint64_t x )
{
  int const n = f.num_vars();
  std::size_t const count = std::size_t{ 1 } << n;
  bool const v = f( x );
  // has_sensitive[S]: S or one of its subsets is sensitive.
  std::vector<std::uint8_t> has_sensitive( count, 0 );
  std::vector<VarSet> blocks;
  for ( std::size_t s = 1; s < count; ++s )
  {
    bool below = false;
    for ( std::size_t rest = s; rest && !below; rest &= rest - 1 )
      below = has_sensitive[s ^ ( rest & -rest )];
    bool const sensitive = f( x ^ s ) != v;
    if ( sensitive && !below )
      blocks.push_back( static_cast<VarSet>( s ) );
    has_sensitive[s] = below || sensitive;
  }
  std::stable_sort( blocks.begin(), blocks.end(),
                    []( VarSet a, VarSet b ) { return std::popcount( a ) < std::popcount( b ); } );
  return blocks;
}

struct BlockPacking
{
  int size = 0;
  std::vector<VarSet> blocks;
};

namespace detail
{

/// Maximum number of pairwise-disjoint sets among `blocks` (all subsets of [n]).
/// Branches on the lowest free element: either it stays uncovered or one block through it is taken.
/// Results per remaining-element mask are memoized; a size bound cuts branches that cannot improve.
class DisjointPacking
{
public:
  DisjointPacking( int n, std::vector<VarSet> const& blocks ) : memo_( std::size_t{ 1 } << n, -1 ), by_element_( n )
  {
    min_size_ = n + 1;
    // A block through the branching element lies inside the free mask only if that element is its lowest.
    for ( auto b : blocks )
    {
      by_element_[std::countr_zero( b )].push_back( b );
      min_size_ = std::min( min_size_, std::popcount( b ) );
    }
  }

  int solve( VarSet mask )
  {
    if ( mask == 0 || std::popcount( mask ) < min_size_ )
      return 0;
    auto& slot = memo_[mask];
    if ( slot >= 0 )
      return slot;
    int const low = std::countr_zero( mask );
    VarSet const without = mask & ( mask - 1 );
    int best = solve( without );
    int const bound = std::popcount( mask ) / min_size_;
    for ( auto b : by_element_[low] )
    {
      if ( best >= bound )
        break;
      if ( ( b & ~mask ) == 0 )
        best = std::max( best, 1 + solve( mask & ~b ) );
    }
    slot = static_cast<std::int8_t>( best );
    return best;
  }

  std::vector<VarSet> reconstruct( VarSet mask )
  {
    std::vector<VarSet> chosen;
    while ( mask != 0 && solve( mask ) > 0 )
    {
      int const target = solve( mask );
      int const low = std::countr_zero( mask );
      VarSet const without = mask & ( mask - 1 );
      if ( solve( without ) == target )
      {
        mask = without;
        continue;
      }
      for ( auto b : by_element_[low] )
      {
        if ( ( b & ~mask ) == 0 && 1 + solve( mask & ~b ) == target )
        {
          chosen.push_back( b );
          mask &= ~b;
          break;
        }
      }
    }
    return chosen;
  }

private:
  std::vector<std::int8_t> memo_;
  std::vector<std::vector<VarSet>> by_element_;
  int min_size_;
};

} // namespace detail

/// Exact block sensitivity at x with a maximum packing of minimal sensitive blocks.
inline BlockPacking block_sensitivity_packing( BooleanFunction const& f, std::uint64_t x, MeasureCaps const& caps = {} )
{
  check_cap( "block_sensitivity_at", f.num_vars(), caps.block_sensitivity_point );
  auto const blocks = minimal_sensitive_blocks( f, x );
  if ( blocks.empty() )
    return {};
  detail::DisjointPacking packing( f.num_vars(), blocks );
  VarSet const all = full_set( f.num_vars() );
  BlockPacking result;
  result.size = packing.solve( all );
  result.blocks = packing.reconstruct( all );
  return result;
}

inline int block_sensitivity_at( BooleanFunction const& f, std::uint64_t x, MeasureCaps const& caps = {} )
{
  return block_sensitivity_packing( f, x, caps ).size;
}

inline int block_sensitivity_at( BooleanFunction const& f, Assignment x, MeasureCaps const& caps = {} )
{
  return block_sensitivity_at( f, x.index, caps );
}

struct BlockSensitivityResult
{
  int value = 0;
  std::uint64_t witness = 0;
  std::vector<VarSet> blocks;
};

inline BlockSensitivityResult block_sensitivity_with_witness( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  check_cap( "block_sensitivity", f.num_vars(), caps.block_sensitivity_full );
  BlockSensitivityResult best;
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
  {
    auto p = block_sensitivity_packing( f, x, caps );
    if ( p.size > best.value )
      best = { p.size, x, std::move( p.blocks ) };
    if ( best.value == f.num_vars() )
      break;
  }
  return best;
}

inline int block_sensitivity( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  return block_sensitivity_with_witness( f, caps ).value;
}

} // namespace boolsens
