#pragma once

#include "../boolean_function.hpp"
#include "caps.hpp"
#include "simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace boolsens
{

using Rational = boost::multiprecision::cpp_rational;

/// Best uniform approximation of f on {0,1}^n by multilinear polynomials of degree <= d.
template<typename Scalar>
struct BestApproximation
{
  Scalar error{ 0 };
  std::vector<Scalar> coefficients; ///< dense by monomial mask; zero above degree d
};

/// Solves  min eps  s.t.  |p(x) - f(x)| <= eps  for all x,  deg p <= d.
/// Substituting eps = 1 - t and splitting each coefficient into c+ - c- gives
///   max t  s.t.   p(x) + t <= f(x) + 1,   -p(x) + t <= 1 - f(x),
/// whose right-hand sides are non-negative, so the simplex starts at the origin.
template<typename Scalar>
BestApproximation<Scalar> best_approximation( BooleanFunction const& f, int d )
{
  std::vector<std::uint64_t> monomials;
  for ( std::uint64_t s = 0; s < f.num_points(); ++s )
    if ( std::popcount( s ) <= d )
      monomials.push_back( s );
  std::size_t const m = monomials.size();
  std::size_t const cols = 2 * m + 1;
  std::size_t const rows = 2 * f.num_points();

  std::vector<Scalar> A( rows * cols, Scalar( 0 ) );
  std::vector<Scalar> b( rows );
  std::vector<Scalar> c( cols, Scalar( 0 ) );
  c[2 * m] = Scalar( 1 );
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
  {
    std::size_t const up = 2 * x;
    std::size_t const down = 2 * x + 1;
    for ( std::size_t j = 0; j < m; ++j )
    {
      if ( ( monomials[j] & ~x ) != 0 )
        continue;
      A[up * cols + j] = Scalar( 1 );
      A[up * cols + m + j] = Scalar( -1 );
      A[down * cols + j] = Scalar( -1 );
      A[down * cols + m + j] = Scalar( 1 );
    }
    A[up * cols + 2 * m] = Scalar( 1 );
    A[down * cols + 2 * m] = Scalar( 1 );
    b[up] = Scalar( f( x ) ? 2 : 1 );
    b[down] = Scalar( f( x ) ? 0 : 1 );
  }

  auto const sol = simplex_maximize<Scalar>( A, b, c );
  if ( sol.status != LpStatus::optimal )
    throw NoConvergence( "approximation LP reported unbounded" );
  BestApproximation<Scalar> out;
  out.error = Scalar( 1 ) - sol.objective;
  out.coefficients.assign( f.num_points(), Scalar( 0 ) );
  for ( std::size_t j = 0; j < m; ++j )
    out.coefficients[monomials[j]] = sol.x[j] - sol.x[m + j];
  return out;
}

struct ApproxDegreeResult
{
  int degree = 0;
  double error = 0.0;                 ///< optimal eps at the reported degree
  std::vector<double> error_by_degree; ///< optimal eps for d = 0..degree
  std::vector<double> polynomial;      ///< optimal approximant at the reported degree
  bool exact_recheck = false;          ///< some degree's eps fell within the margin of 1/3
};

inline constexpr double approx_threshold = 1.0 / 3.0;
inline constexpr double approx_margin = 1e-9;

/// Smallest d whose best degree-d approximation has error below 1/3 - 1e-9. An optimum that lands
/// within 1e-9 of 1/3 is re-solved in exact rationals and compared to 1/3 strictly.
inline ApproxDegreeResult approx_degree_with_witness( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  check_cap( "approx_degree", f.num_vars(), caps.approx_degree );
  ApproxDegreeResult result;
  for ( int d = 0; d <= f.num_vars(); ++d )
  {
    auto const approx = best_approximation<double>( f, d );
    result.error_by_degree.push_back( approx.error );
    bool accept = approx.error < approx_threshold - approx_margin;
    if ( !accept && std::abs( approx.error - approx_threshold ) <= approx_margin )
    {
      result.exact_recheck = true;
      auto const exact = best_approximation<Rational>( f, d );
      accept = exact.error < Rational( 1, 3 );
      result.error_by_degree.back() = exact.error.convert_to<double>();
    }
    if ( accept )
    {
      result.degree = d;
      result.error = result.error_by_degree.back();
      result.polynomial = approx.coefficients;
      return result;
    }
  }
  // d = n interpolates f exactly, so reaching here means the LP solve is broken.
  throw NoConvergence( "approx_degree: no degree reached the threshold" );
}

inline int approx_degree( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  return approx_degree_with_witness( f, caps ).degree;
}

} // namespace boolsens
