#pragma once

#include "boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace boolsens
{

/// Multilinear polynomial over variables x_1..x_n, stored densely by monomial.
/// Coefficient of prod_{j in S} x_j lives at index S (same mask convention as VarSet).
template<typename Coeff>
class MultilinearPoly
{
public:
  MultilinearPoly() : MultilinearPoly( 0 ) {}

  explicit MultilinearPoly( int n ) : n_( n ), coeffs_( std::size_t{ 1 } << n, Coeff{ 0 } ) {}

  MultilinearPoly( int n, std::vector<Coeff> coeffs ) : n_( n ), coeffs_( std::move( coeffs ) )
  {
    if ( coeffs_.size() != ( std::size_t{ 1 } << n ) )
      throw InvalidInput( "coefficient vector must have 2^n entries" );
  }

  int num_vars() const noexcept { return n_; }

  Coeff const& operator[]( VarSet s ) const { return coeffs_.at( s ); }
  Coeff& operator[]( VarSet s ) { return coeffs_.at( s ); }

  std::vector<Coeff> const& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept
  {
    for ( auto const& c : coeffs_ )
      if ( c != Coeff{ 0 } )
        return false;
    return true;
  }

  /// Largest |S| with c_S != 0. The zero polynomial reports 0; check is_zero() to tell it apart.
  int degree() const noexcept
  {
    int d = 0;
    for ( std::size_t s = 0; s < coeffs_.size(); ++s )
      if ( coeffs_[s] != Coeff{ 0 } )
        d = std::max( d, std::popcount( s ) );
    return d;
  }

  /// Value at a 0/1 point: sum of c_S over S contained in the support of x.
  Coeff evaluate( std::uint64_t x ) const
  {
    Coeff sum{ 0 };
    std::uint64_t s = x;
    for ( ;; )
    {
      sum += coeffs_[s];
      if ( s == 0 )
        break;
      s = ( s - 1 ) & x;
    }
    return sum;
  }

  /// Values at all 2^n points (zeta transform over the subset lattice).
  std::vector<Coeff> evaluate_all() const
  {
    std::vector<Coeff> v = coeffs_;
    for ( int i = 0; i < n_; ++i )
    {
      std::size_t const bit = std::size_t{ 1 } << i;
      for ( std::size_t s = 0; s < v.size(); ++s )
        if ( s & bit )
          v[s] += v[s ^ bit];
    }
    return v;
  }

  template<typename Other>
  MultilinearPoly<Other> cast() const
  {
    std::vector<Other> c( coeffs_.begin(), coeffs_.end() );
    return MultilinearPoly<Other>( n_, std::move( c ) );
  }

  friend bool operator==( MultilinearPoly const&, MultilinearPoly const& ) = default;

private:
  int n_;
  std::vector<Coeff> coeffs_;
};

/// Exact representation of f by Möbius inversion: c_S = sum_{T ⊆ S} (-1)^{|S|-|T|} f(1_T).
inline MultilinearPoly<std::int64_t> multilinear_coeffs( BooleanFunction const& f )
{
  int const n = f.num_vars();
  std::vector<std::int64_t> c( f.num_points() );
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
    c[x] = f( x ) ? 1 : 0;
  for ( int i = 0; i < n; ++i )
  {
    std::size_t const bit = std::size_t{ 1 } << i;
    for ( std::size_t s = 0; s < c.size(); ++s )
      if ( s & bit )
        c[s] -= c[s ^ bit];
  }
  return MultilinearPoly<std::int64_t>( n, std::move( c ) );
}

} // namespace boolsens
