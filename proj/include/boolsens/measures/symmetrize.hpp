#pragma once

#include "../multilinear.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace boolsens
{

/// Univariate polynomial in the binomial basis: p(z) = sum_j c_j * C(z, j).
class BinomialPoly
{
public:
  explicit BinomialPoly( std::vector<double> coeffs ) : coeffs_( std::move( coeffs ) ) {}

  std::vector<double> const& coefficients() const noexcept { return coeffs_; }

  double operator()( double z ) const noexcept
  {
    double value = 0.0;
    double binom = 1.0; // C(z, j) for real z
    for ( std::size_t j = 0; j < coeffs_.size(); ++j )
    {
      value += coeffs_[j] * binom;
      binom *= ( z - static_cast<double>( j ) ) / static_cast<double>( j + 1 );
    }
    return value;
  }

  /// Highest j with |c_j| > tolerance (0 for the zero polynomial).
  int degree( double tolerance = 1e-9 ) const noexcept
  {
    for ( std::size_t j = coeffs_.size(); j-- > 0; )
      if ( std::abs( coeffs_[j] ) > tolerance )
        return static_cast<int>( j );
    return 0;
  }

private:
  std::vector<double> coeffs_;
};

struct Symmetrization
{
  std::vector<double> level_averages; ///< entry k: mean of p over the weight-k points
  BinomialPoly poly;
};

/// Averages p over each Hamming level and interpolates the n+1 averages by forward differences,
/// giving the unique polynomial of degree <= n through them; its degree never exceeds deg(p).
template<typename Coeff>
Symmetrization symmetrize( MultilinearPoly<Coeff> const& p )
{
  int const n = p.num_vars();
  auto const values = p.evaluate_all();
  std::vector<double> sum( n + 1, 0.0 );
  std::vector<double> count( n + 1, 0.0 );
  for ( std::size_t x = 0; x < values.size(); ++x )
  {
    int const w = std::popcount( x );
    sum[w] += static_cast<double>( values[x] );
    count[w] += 1.0;
  }
  std::vector<double> averages( n + 1 );
  for ( int k = 0; k <= n; ++k )
    averages[k] = sum[k] / count[k];

  // Newton forward differences: c_j = Delta^j p(0).
  std::vector<double> diff = averages;
  std::vector<double> coeffs( n + 1 );
  for ( int j = 0; j <= n; ++j )
  {
    coeffs[j] = diff[0];
    for ( int k = 0; k + 1 < static_cast<int>( diff.size() ) - j; ++k )
      diff[k] = diff[k + 1] - diff[k];
  }
  return { std::move( averages ), BinomialPoly( std::move( coeffs ) ) };
}

} // namespace boolsens
