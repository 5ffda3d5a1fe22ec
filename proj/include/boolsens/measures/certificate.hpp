#pragma once

#include "../boolean_function.hpp"
#include "caps.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace boolsens
{

struct Certificate
{
  int size = 0;
  VarSet variables = 0; ///< coordinates fixed to x's values
};

/// True if f is constant on the subcube through x that leaves the `free` coordinates open.
inline bool constant_on_subcube( BooleanFunction const& f, std::uint64_t x, std::uint64_t free )
{
  bool const v = f( x );
  std::uint64_t const base = x & ~free;
  std::uint64_t sub = free;
  for ( ;; )
  {
    if ( f( base | sub ) != v )
      return false;
    if ( sub == 0 )
      return true;
    sub = ( sub - 1 ) & free;
  }
}

/// Smallest set of coordinates whose values at x force f; sizes are tried in increasing order.
inline Certificate minimum_certificate( BooleanFunction const& f, std::uint64_t x, MeasureCaps const& caps = {} )
{
  int const n = f.num_vars();
  check_cap( "certificate_at", n, caps.certificate_point );
  std::uint64_t const all = full_set( n );
  for ( int k = 0; k < n; ++k )
  {
    // Gosper's hack over k-subsets of [n].
    std::uint64_t s = k == 0 ? 0 : ( std::uint64_t{ 1 } << k ) - 1;
    while ( s <= all )
    {
      if ( constant_on_subcube( f, x, all & ~s ) )
        return { k, static_cast<VarSet>( s ) };
      if ( s == 0 )
        break;
      std::uint64_t const c = s & -s;
      std::uint64_t const r = s + c;
      s = ( ( ( r ^ s ) >> 2 ) / c ) | r;
    }
  }
  return { n, static_cast<VarSet>( all ) };
}

inline int certificate_at( BooleanFunction const& f, std::uint64_t x, MeasureCaps const& caps = {} )
{
  return minimum_certificate( f, x, caps ).size;
}

inline int certificate_at( BooleanFunction const& f, Assignment x, MeasureCaps const& caps = {} )
{
  return certificate_at( f, x.index, caps );
}

struct CertificateResult
{
  int value = 0;
  std::uint64_t witness = 0;
  VarSet certificate = 0;
};

/// C(f) = max_x C_x(f). Classifies all 3^n subcubes as constant or not in one pass, then for
/// each x takes the largest free set whose subcube through x is constant.
inline CertificateResult certificate_complexity_with_witness( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  int const n = f.num_vars();
  check_cap( "certificate_complexity", n, caps.certificate_full );
  std::vector<std::uint64_t> pow3( n + 1, 1 );
  for ( int i = 1; i <= n; ++i )
    pow3[i] = pow3[i - 1] * 3;

  // Subcube label per coordinate: digit 0 or 1 fixes it, digit 2 leaves it free.
  // state: 0 = constant 0, 1 = constant 1, 2 = mixed.
  std::vector<std::uint8_t> state( pow3[n] );
  for ( std::uint64_t idx = 0; idx < pow3[n]; ++idx )
  {
    std::uint64_t rest = idx;
    int free_digit = -1;
    std::uint64_t point = 0;
    for ( int i = 0; i < n; ++i, rest /= 3 )
    {
      auto const d = rest % 3;
      if ( d == 2 )
      {
        free_digit = i;
        break;
      }
      point |= d << i;
    }
    if ( free_digit < 0 )
    {
      state[idx] = f( point ) ? 1 : 0;
      continue;
    }
    auto const a = state[idx - 2 * pow3[free_digit]];
    auto const b = state[idx - pow3[free_digit]];
    state[idx] = a == b ? a : 2;
  }

  std::size_t const count = std::size_t{ 1 } << n;
  std::vector<std::uint64_t> offset( count );
  CertificateResult best;
  for ( std::uint64_t x = 0; x < count; ++x )
  {
    std::uint64_t base = 0;
    for ( int i = 0; i < n; ++i )
      if ( ( x >> i ) & 1 )
        base += pow3[i];
    int best_free = 0;
    std::uint64_t best_set = 0;
    offset[0] = base;
    for ( std::uint64_t t = 1; t < count; ++t )
    {
      int const low = std::countr_zero( t );
      std::uint64_t const delta = ( ( x >> low ) & 1 ) ? pow3[low] : 2 * pow3[low];
      offset[t] = offset[t & ( t - 1 )] + delta;
      int const size = std::popcount( t );
      if ( size > best_free && state[offset[t]] != 2 )
      {
        best_free = size;
        best_set = t;
      }
    }
    int const c = n - best_free;
    if ( x == 0 || c > best.value )
      best = { c, x, static_cast<VarSet>( ( count - 1 ) & ~best_set ) };
  }
  return best;
}

inline int certificate_complexity( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  return certificate_complexity_with_witness( f, caps ).value;
}

} // namespace boolsens
