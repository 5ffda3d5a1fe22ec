#pragma once

#include "../boolean_function.hpp"

#include <cstdint>

namespace boolsens
{

/// Number of neighbours of x across which f changes value.
inline int sensitivity_at( BooleanFunction const& f, std::uint64_t x ) noexcept
{
  bool const v = f( x );
  int s = 0;
  for ( int i = 0; i < f.num_vars(); ++i )
    s += f( x ^ ( std::uint64_t{ 1 } << i ) ) != v;
  return s;
}

inline int sensitivity_at( BooleanFunction const& f, Assignment x ) { return sensitivity_at( f, x.index ); }

/// Variables sensitive at x, as a mask.
inline VarSet sensitive_variables( BooleanFunction const& f, std::uint64_t x ) noexcept
{
  bool const v = f( x );
  VarSet s = 0;
  for ( int i = 0; i < f.num_vars(); ++i )
    if ( f( x ^ ( std::uint64_t{ 1 } << i ) ) != v )
      s |= VarSet{ 1 } << i;
  return s;
}

struct PointMeasure
{
  int value = 0;
  std::uint64_t witness = 0; ///< first point (in index order) attaining value
};

inline PointMeasure sensitivity_with_witness( BooleanFunction const& f ) noexcept
{
  PointMeasure best;
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
  {
    int const s = sensitivity_at( f, x );
    if ( s > best.value )
      best = { s, x };
    if ( best.value == f.num_vars() )
      break;
  }
  return best;
}

inline int sensitivity( BooleanFunction const& f ) noexcept { return sensitivity_with_witness( f ).value; }

} // namespace boolsens
