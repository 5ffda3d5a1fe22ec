#pragma once

#include "../errors.hpp"

#include <cstddef>
#include <type_traits>
#include <vector>

namespace boolsens
{

enum class LpStatus
{
  optimal,
  unbounded
};

template<typename Scalar>
struct LpSolution
{
  LpStatus status = LpStatus::optimal;
  Scalar objective{ 0 };
  std::vector<Scalar> x;
  std::size_t pivots = 0;
};

/// Pivot tolerance: zero for exact scalar types.
template<typename Scalar>
Scalar pivot_tolerance()
{
  if constexpr ( std::is_floating_point_v<Scalar> )
    return Scalar( 1e-11 );
  else
    return Scalar( 0 );
}

/// Dense tableau simplex for   max c'x  s.t.  A x <= b,  x >= 0,  with b >= 0 so the slack basis
/// is feasible from the start. Bland's rule on both entering and leaving variables rules out
/// cycling and makes the pivot sequence deterministic. A is row-major, rows x cols.
template<typename Scalar>
LpSolution<Scalar> simplex_maximize( std::vector<Scalar> const& A, std::vector<Scalar> const& b,
                                     std::vector<Scalar> const& c, std::size_t max_pivots = 100000 )
{
  std::size_t const rows = b.size();
  std::size_t const cols = c.size();
  if ( A.size() != rows * cols )
    throw InvalidInput( "simplex: constraint matrix shape mismatch" );
  Scalar const tol = pivot_tolerance<Scalar>();
  for ( auto const& v : b )
    if ( v < Scalar( 0 ) )
      throw InvalidInput( "simplex: right-hand side must be non-negative" );

  std::size_t const width = cols + rows + 1; // structural, slack, rhs
  std::vector<Scalar> T( ( rows + 1 ) * width, Scalar( 0 ) );
  auto at = [&]( std::size_t r, std::size_t k ) -> Scalar& { return T[r * width + k]; };
  for ( std::size_t r = 0; r < rows; ++r )
  {
    for ( std::size_t k = 0; k < cols; ++k )
      at( r, k ) = A[r * cols + k];
    at( r, cols + r ) = Scalar( 1 );
    at( r, width - 1 ) = b[r];
  }
  for ( std::size_t k = 0; k < cols; ++k )
    at( rows, k ) = -c[k]; // objective row holds reduced costs negated
  std::vector<std::size_t> basis( rows );
  for ( std::size_t r = 0; r < rows; ++r )
    basis[r] = cols + r;

  LpSolution<Scalar> out;
  for ( ;; )
  {
    std::size_t enter = width;
    for ( std::size_t k = 0; k + 1 < width; ++k )
      if ( at( rows, k ) < -tol )
      {
        enter = k;
        break;
      }
    if ( enter == width )
      break;

    std::size_t leave = rows;
    Scalar best_ratio{ 0 };
    for ( std::size_t r = 0; r < rows; ++r )
    {
      if ( !( at( r, enter ) > tol ) )
        continue;
      Scalar const ratio = at( r, width - 1 ) / at( r, enter );
      if ( leave == rows || ratio < best_ratio || ( ratio == best_ratio && basis[r] < basis[leave] ) )
      {
        leave = r;
        best_ratio = ratio;
      }
    }
    if ( leave == rows )
    {
      out.status = LpStatus::unbounded;
      return out;
    }
    if ( ++out.pivots > max_pivots )
      throw NoConvergence( "simplex: pivot budget exhausted" );

    Scalar const p = at( leave, enter );
    for ( std::size_t k = 0; k < width; ++k )
      at( leave, k ) /= p;
    for ( std::size_t r = 0; r <= rows; ++r )
    {
      if ( r == leave )
        continue;
      Scalar const factor = at( r, enter );
      if ( factor == Scalar( 0 ) )
        continue;
      for ( std::size_t k = 0; k < width; ++k )
        at( r, k ) -= factor * at( leave, k );
    }
    basis[leave] = enter;
  }

  out.x.assign( cols, Scalar( 0 ) );
  for ( std::size_t r = 0; r < rows; ++r )
    if ( basis[r] < cols )
      out.x[basis[r]] = at( r, width - 1 );
  out.objective = at( rows, width - 1 );
  return out;
}

} // namespace boolsens
