#pragma once

#include "../boolean_function.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace boolsens
{

/// Fourier coefficients of the ±1 view: f(x) = sum_S coeff(S) chi_S(x), chi_S(x) = prod_{i in S} x_i.
class FourierTable
{
public:
  FourierTable( int n, std::vector<double> coeffs ) : n_( n ), coeffs_( std::move( coeffs ) ) {}

  int num_vars() const noexcept { return n_; }
  double operator[]( VarSet s ) const { return coeffs_.at( s ); }
  std::vector<double> const& coefficients() const noexcept { return coeffs_; }

  /// sum_S coeff(S)^2; equals 1 for Boolean functions.
  double total_weight() const noexcept
  {
    double w = 0.0;
    for ( double c : coeffs_ )
      w += c * c;
    return w;
  }

  /// Value of the expansion at the ±1 image of the 0/1 point `index`.
  double evaluate( std::uint64_t index ) const noexcept
  {
    double v = 0.0;
    for ( std::size_t s = 0; s < coeffs_.size(); ++s )
      v += ( std::popcount( s & index ) & 1 ) ? -coeffs_[s] : coeffs_[s];
    return v;
  }

private:
  int n_;
  std::vector<double> coeffs_;
};

/// Fast Walsh-Hadamard transform in integers, then scaled by 2^-n (exact in double for n <= 24).
inline FourierTable fourier( BooleanFunction const& f )
{
  std::vector<std::int64_t> a( f.num_points() );
  for ( std::uint64_t x = 0; x < a.size(); ++x )
    a[x] = f( x ) ? -1 : 1;
  for ( std::size_t h = 1; h < a.size(); h <<= 1 )
    for ( std::size_t i = 0; i < a.size(); i += 2 * h )
      for ( std::size_t j = i; j < i + h; ++j )
      {
        auto const u = a[j];
        auto const v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
  double const scale = 1.0 / static_cast<double>( a.size() );
  std::vector<double> c( a.size() );
  for ( std::size_t s = 0; s < a.size(); ++s )
    c[s] = static_cast<double>( a[s] ) * scale;
  return FourierTable( f.num_vars(), std::move( c ) );
}

/// Pr_x[f(x) != f(x with bit var flipped)].
inline double influence( BooleanFunction const& f, int var )
{
  if ( var < 1 || var > f.num_vars() )
    throw InvalidInput( "influence: variable " + std::to_string( var ) + " out of range [1, " +
                        std::to_string( f.num_vars() ) + "]" );
  std::uint64_t const bit = std::uint64_t{ 1 } << ( var - 1 );
  std::uint64_t flips = 0;
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
    flips += f( x ) != f( x ^ bit );
  return static_cast<double>( flips ) / static_cast<double>( f.num_points() );
}

inline double total_influence( BooleanFunction const& f )
{
  double sum = 0.0;
  for ( int i = 1; i <= f.num_vars(); ++i )
    sum += influence( f, i );
  return sum;
}

} // namespace boolsens
