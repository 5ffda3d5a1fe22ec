#pragma once

#include "errors.hpp"
#include "hypercube.hpp"
#include "json_format.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace boolsens
{

/// Square matrix with entries in {-1, 0, 1}; rows and columns are labelled (by cube vertices for
/// Huang matrices and their principal submatrices).
class SignedMatrix
{
public:
  SignedMatrix() = default;

  explicit SignedMatrix( std::size_t dim ) : dim_( dim ), entries_( dim * dim, 0 ), labels_( dim )
  {
    for ( std::size_t i = 0; i < dim; ++i )
      labels_[i] = i;
  }

  SignedMatrix( std::size_t dim, std::vector<std::int8_t> entries, std::vector<std::uint64_t> labels )
      : dim_( dim ), entries_( std::move( entries ) ), labels_( std::move( labels ) )
  {
    if ( entries_.size() != dim * dim || labels_.size() != dim )
      throw InvalidInput( "SignedMatrix: shape mismatch" );
    for ( auto e : entries_ )
      if ( e < -1 || e > 1 )
        throw InvalidInput( "SignedMatrix: entries must be in {-1, 0, 1}" );
  }

  std::size_t dim() const noexcept { return dim_; }
  int operator()( std::size_t r, std::size_t c ) const noexcept { return entries_[r * dim_ + c]; }
  void set( std::size_t r, std::size_t c, int value )
  {
    if ( value < -1 || value > 1 )
      throw InvalidInput( "SignedMatrix: entries must be in {-1, 0, 1}" );
    entries_[r * dim_ + c] = static_cast<std::int8_t>( value );
  }
  std::vector<std::uint64_t> const& labels() const noexcept { return labels_; }

  bool is_symmetric() const noexcept
  {
    for ( std::size_t r = 0; r < dim_; ++r )
      for ( std::size_t c = r + 1; c < dim_; ++c )
        if ( ( *this )( r, c ) != ( *this )( c, r ) )
          return false;
    return true;
  }

  /// Nonzero entries only between labels that differ in exactly one bit.
  bool respects_cube() const noexcept
  {
    for ( std::size_t r = 0; r < dim_; ++r )
      for ( std::size_t c = 0; c < dim_; ++c )
        if ( ( *this )( r, c ) != 0 && std::popcount( labels_[r] ^ labels_[c] ) != 1 )
          return false;
    return true;
  }

  long long trace() const noexcept
  {
    long long t = 0;
    for ( std::size_t i = 0; i < dim_; ++i )
      t += ( *this )( i, i );
    return t;
  }

  std::vector<double> to_dense_double() const { return { entries_.begin(), entries_.end() }; }

  friend bool operator==( SignedMatrix const&, SignedMatrix const& ) = default;

private:
  std::size_t dim_ = 0;
  std::vector<std::int8_t> entries_;
  std::vector<std::uint64_t> labels_;
};

inline constexpr int huang_cap = 12;

/// A_1 = [[0,1],[1,0]], A_n = [[A_{n-1}, I], [I, -A_{n-1}]]; the top bit of a vertex index selects the half.
inline SignedMatrix huang_matrix( int n )
{
  if ( n < 1 )
    throw InvalidInput( "huang_matrix: n must be >= 1" );
  check_cap( "huang_matrix", n, huang_cap );
  SignedMatrix a( 2 );
  a.set( 0, 1, 1 );
  a.set( 1, 0, 1 );
  for ( int k = 2; k <= n; ++k )
  {
    std::size_t const half = a.dim();
    SignedMatrix next( 2 * half );
    for ( std::size_t r = 0; r < half; ++r )
    {
      for ( std::size_t c = 0; c < half; ++c )
      {
        next.set( r, c, a( r, c ) );
        next.set( half + r, half + c, -a( r, c ) );
      }
      next.set( r, half + r, 1 );
      next.set( half + r, r, 1 );
    }
    a = std::move( next );
  }
  return a;
}

/// Entry (u, v) of A_n without building the matrix: for u, v differing in bit i the sign is
/// (-1)^(number of set bits of u above i); zero otherwise.
inline int huang_entry( std::uint64_t u, std::uint64_t v ) noexcept
{
  std::uint64_t const d = u ^ v;
  if ( std::popcount( d ) != 1 )
    return 0;
  int const i = std::countr_zero( d );
  return ( std::popcount( u >> ( i + 1 ) ) & 1 ) ? -1 : 1;
}

/// Unsigned adjacency matrix of Q_n.
inline SignedMatrix cube_adjacency( int n )
{
  check_cap( "cube_adjacency", n, huang_cap );
  SignedMatrix a( std::size_t{ 1 } << n );
  for ( std::size_t v = 0; v < a.dim(); ++v )
    for ( int i = 0; i < n; ++i )
      a.set( v, v ^ ( std::size_t{ 1 } << i ), 1 );
  return a;
}

/// Exact integer product A*A, row-major. Uses the sparsity of signed cube matrices.
inline std::vector<long long> square( SignedMatrix const& a )
{
  std::size_t const n = a.dim();
  std::vector<std::vector<std::pair<std::size_t, int>>> rows( n );
  for ( std::size_t r = 0; r < n; ++r )
    for ( std::size_t c = 0; c < n; ++c )
      if ( a( r, c ) != 0 )
        rows[r].emplace_back( c, a( r, c ) );
  std::vector<long long> out( n * n, 0 );
  for ( std::size_t r = 0; r < n; ++r )
    for ( auto [k, x] : rows[r] )
      for ( auto [c, y] : rows[k] )
        out[r * n + c] += static_cast<long long>( x ) * y;
  return out;
}

/// A^2 == n I, checked exactly.
inline bool square_check( SignedMatrix const& a, int n )
{
  auto const sq = square( a );
  for ( std::size_t r = 0; r < a.dim(); ++r )
    for ( std::size_t c = 0; c < a.dim(); ++c )
      if ( sq[r * a.dim() + c] != ( r == c ? n : 0 ) )
        return false;
  return true;
}

/// Negative-edge counts over the 4-cycles of Q_n, indexed 0..4.
inline std::array<std::size_t, 5> four_cycle_negative_counts( SignedMatrix const& a, int n )
{
  std::array<std::size_t, 5> counts{};
  for ( std::uint64_t v = 0; v < a.dim(); ++v )
    for ( int i = 0; i < n; ++i )
      for ( int j = i + 1; j < n; ++j )
      {
        std::uint64_t const bi = std::uint64_t{ 1 } << i, bj = std::uint64_t{ 1 } << j;
        if ( ( v & bi ) || ( v & bj ) )
          continue; // each 4-cycle once, from its corner with both bits clear
        int const neg = ( a( v, v ^ bi ) < 0 ) + ( a( v ^ bi, v ^ bi ^ bj ) < 0 ) + ( a( v ^ bi ^ bj, v ^ bj ) < 0 ) +
                        ( a( v ^ bj, v ) < 0 );
        ++counts[static_cast<std::size_t>( neg )];
      }
  return counts;
}

/// Number of 4-cycles whose edge signs multiply to +1, i.e. carry an even number of -1 edges.
inline std::size_t four_cycles_with_even_negative_edges( SignedMatrix const& a, int n )
{
  auto const c = four_cycle_negative_counts( a, n );
  return c[0] + c[2] + c[4];
}

/// Rows and columns restricted to the given row indices, labels carried over.
inline SignedMatrix principal_submatrix( SignedMatrix const& a, std::span<std::size_t const> rows )
{
  if ( rows.empty() )
    throw InvalidInput( "principal_submatrix: empty vertex set" );
  std::size_t const m = rows.size();
  std::vector<std::int8_t> e( m * m );
  std::vector<std::uint64_t> labels( m );
  for ( std::size_t r = 0; r < m; ++r )
  {
    if ( rows[r] >= a.dim() )
      throw InvalidInput( "principal_submatrix: index out of range" );
    if ( std::find( rows.begin(), rows.begin() + r, rows[r] ) != rows.begin() + r )
      throw InvalidInput( "principal_submatrix: repeated index" );
    labels[r] = a.labels()[rows[r]];
    for ( std::size_t c = 0; c < m; ++c )
      e[r * m + c] = static_cast<std::int8_t>( a( rows[r], rows[c] ) );
  }
  return SignedMatrix( m, std::move( e ), std::move( labels ) );
}

inline SignedMatrix principal_submatrix( SignedMatrix const& a, std::vector<std::size_t> const& rows )
{
  return principal_submatrix( a, std::span<std::size_t const>( rows ) );
}

/// Principal submatrix of A_n on the vertices of g, from the closed-form entries.
inline SignedMatrix huang_submatrix( InducedSubgraph const& g )
{
  auto const vs = g.vertices();
  if ( vs.empty() )
    throw InvalidInput( "huang_submatrix: empty vertex set" );
  std::size_t const m = vs.size();
  std::vector<std::int8_t> e( m * m );
  for ( std::size_t r = 0; r < m; ++r )
    for ( std::size_t c = 0; c < m; ++c )
      e[r * m + c] = static_cast<std::int8_t>( huang_entry( vs[r], vs[c] ) );
  return SignedMatrix( m, std::move( e ), vs );
}

inline constexpr std::size_t full_spectrum_cap = 64;

/// All eigenvalues of a symmetric matrix (row-major, dim x dim) by cyclic Jacobi rotations,
/// sorted non-increasing. Sweeps until the off-diagonal Frobenius norm is below 1e-12 (relative to
/// the matrix norm when that exceeds one).
inline std::vector<double> jacobi_eigenvalues( std::vector<double> a, std::size_t dim, int max_sweeps = 100 )
{
  auto at = [&]( std::size_t r, std::size_t c ) -> double& { return a[r * dim + c]; };
  double norm = 0.0;
  for ( double v : a )
    norm += v * v;
  double const target = 1e-12 * std::max( 1.0, std::sqrt( norm ) );
  for ( int sweep = 0;; ++sweep )
  {
    double off = 0.0;
    for ( std::size_t p = 0; p < dim; ++p )
      for ( std::size_t q = p + 1; q < dim; ++q )
        off += 2.0 * at( p, q ) * at( p, q );
    if ( std::sqrt( off ) < target )
      break;
    if ( sweep == max_sweeps )
      throw NoConvergence( "jacobi: sweep budget exhausted" );
    for ( std::size_t p = 0; p < dim; ++p )
      for ( std::size_t q = p + 1; q < dim; ++q )
      {
        double const apq = at( p, q );
        if ( apq == 0.0 )
          continue;
        double const theta = ( at( q, q ) - at( p, p ) ) / ( 2.0 * apq );
        double const t = ( theta >= 0 ? 1.0 : -1.0 ) / ( std::abs( theta ) + std::sqrt( theta * theta + 1.0 ) );
        double const c = 1.0 / std::sqrt( t * t + 1.0 );
        double const s = t * c;
        for ( std::size_t k = 0; k < dim; ++k )
        {
          double const akp = at( k, p ), akq = at( k, q );
          at( k, p ) = c * akp - s * akq;
          at( k, q ) = s * akp + c * akq;
        }
        for ( std::size_t k = 0; k < dim; ++k )
        {
          double const apk = at( p, k ), aqk = at( q, k );
          at( p, k ) = c * apk - s * aqk;
          at( q, k ) = s * apk + c * aqk;
        }
        at( p, q ) = at( q, p ) = 0.0;
      }
  }
  std::vector<double> eig( dim );
  for ( std::size_t i = 0; i < dim; ++i )
    eig[i] = at( i, i );
  std::sort( eig.begin(), eig.end(), std::greater<>() );
  return eig;
}

inline std::vector<double> full_spectrum( SignedMatrix const& b, std::size_t cap = full_spectrum_cap )
{
  if ( b.dim() > cap )
    throw CapExceeded( "full_spectrum", static_cast<int>( b.dim() ), static_cast<int>( cap ) );
  if ( !b.is_symmetric() )
    throw InvalidInput( "full_spectrum: matrix is not symmetric" );
  return jacobi_eigenvalues( b.to_dense_double(), b.dim() );
}

struct PowerIterationResult
{
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t restarts = 0;
};

/// Largest eigenvalue by power iteration on B + shift*I. The shift must be at least the spectral
/// radius so the target is dominant; it defaults to the largest absolute row sum plus one. Stops
/// when the Rayleigh quotient changes by less than tolerance between iterations. Start vectors come
/// from a fixed-seed generator, and a start vector that collapses to zero is replaced by the next.
inline PowerIterationResult lambda1_power( SignedMatrix const& b, std::optional<double> shift = std::nullopt,
                                           double tolerance = 1e-10, std::size_t max_iterations = 100000,
                                           std::uint64_t seed = 0x5eed )
{
  std::size_t const n = b.dim();
  if ( n == 0 )
    throw InvalidInput( "lambda1: empty matrix" );
  if ( !b.is_symmetric() )
    throw InvalidInput( "lambda1: matrix is not symmetric" );
  double c = 0.0;
  if ( shift )
    c = *shift;
  else
  {
    for ( std::size_t r = 0; r < n; ++r )
    {
      double row = 0.0;
      for ( std::size_t k = 0; k < n; ++k )
        row += std::abs( b( r, k ) );
      c = std::max( c, row );
    }
    c += 1.0;
  }

  std::mt19937_64 rng( seed );
  std::uniform_real_distribution<double> dist( -1.0, 1.0 );
  PowerIterationResult out;
  std::vector<double> v( n ), w( n );
  auto normalize = []( std::vector<double>& x ) {
    double s = 0.0;
    for ( double e : x )
      s += e * e;
    s = std::sqrt( s );
    if ( s > 1e-300 )
      for ( double& e : x )
        e /= s;
    return s;
  };
  auto restart = [&] {
    do
    {
      for ( double& e : v )
        e = dist( rng );
    } while ( normalize( v ) <= 1e-300 );
  };
  restart();
  double rayleigh = 0.0;
  bool have_previous = false;
  for ( std::size_t it = 0; it < max_iterations; ++it )
  {
    for ( std::size_t r = 0; r < n; ++r )
    {
      double s = c * v[r];
      for ( std::size_t k = 0; k < n; ++k )
        if ( b( r, k ) != 0 )
          s += b( r, k ) * v[k];
      w[r] = s;
    }
    double next = 0.0;
    for ( std::size_t r = 0; r < n; ++r )
      next += v[r] * w[r];
    next -= c;
    if ( normalize( w ) <= 1e-300 || !std::isfinite( next ) )
    {
      ++out.restarts;
      restart();
      have_previous = false;
      continue;
    }
    v.swap( w );
    out.iterations = it + 1;
    if ( have_previous && std::abs( next - rayleigh ) < tolerance )
    {
      out.value = next;
      return out;
    }
    rayleigh = next;
    have_previous = true;
  }
  throw NoConvergence( "lambda1: iteration budget exhausted" );
}

/// Largest eigenvalue; small matrices go through the full Jacobi spectrum, larger ones through
/// power iteration.
inline double lambda1( SignedMatrix const& b, std::optional<double> shift = std::nullopt )
{
  if ( b.dim() <= full_spectrum_cap )
    return full_spectrum( b ).front();
  return lambda1_power( b, shift ).value;
}

/// Spectrum of A_n implied by A^2 = nI (eigenvalues are +-sqrt(n)) and trace 0 (equal
/// multiplicities). Throws if either premise fails for the given matrix.
inline std::vector<double> implied_huang_spectrum( SignedMatrix const& a, int n )
{
  if ( !square_check( a, n ) || a.trace() != 0 )
    throw InvalidInput( "implied_huang_spectrum: matrix does not satisfy A^2 = nI with trace 0" );
  std::size_t const half = a.dim() / 2;
  std::vector<double> eig( a.dim(), -std::sqrt( static_cast<double>( n ) ) );
  std::fill( eig.begin(), eig.begin() + static_cast<std::ptrdiff_t>( half ), std::sqrt( static_cast<double>( n ) ) );
  return eig;
}

inline constexpr double interlacing_tolerance = 1e-9;

/// lambda_i >= mu_i >= lambda_{i+N-m} for i = 1..m; both spectra sorted non-increasing.
inline bool interlacing_check( std::span<double const> outer, std::span<double const> inner,
                               double tolerance = interlacing_tolerance )
{
  std::size_t const big = outer.size(), m = inner.size();
  if ( m > big )
    throw InvalidInput( "interlacing_check: submatrix larger than matrix" );
  for ( std::size_t i = 0; i < m; ++i )
  {
    if ( inner[i] > outer[i] + tolerance )
      return false;
    if ( inner[i] < outer[i + big - m] - tolerance )
      return false;
  }
  return true;
}

/// True iff b's labels select a principal submatrix of a with identical entries.
inline bool is_principal_submatrix_of( SignedMatrix const& b, SignedMatrix const& a )
{
  std::vector<std::size_t> rows;
  for ( auto label : b.labels() )
  {
    auto it = std::find( a.labels().begin(), a.labels().end(), label );
    if ( it == a.labels().end() )
      return false;
    rows.push_back( static_cast<std::size_t>( it - a.labels().begin() ) );
  }
  for ( std::size_t r = 0; r < rows.size(); ++r )
    for ( std::size_t c = 0; c < rows.size(); ++c )
      if ( b( r, c ) != a( rows[r], rows[c] ) )
        return false;
  return true;
}

inline bool interlacing_check( SignedMatrix const& a, SignedMatrix const& b, double tolerance = interlacing_tolerance )
{
  if ( !is_principal_submatrix_of( b, a ) )
    throw InvalidInput( "interlacing_check: second matrix is not a principal submatrix of the first" );
  auto const outer = full_spectrum( a );
  auto const inner = full_spectrum( b );
  return interlacing_check( outer, inner, tolerance );
}

struct HuangBoundCheck
{
  int max_degree = 0;
  double lambda1 = 0.0;
  bool degree_dominates = false; ///< max_degree >= lambda1 - 1e-9
  bool large = false;            ///< |V(H)| >= 2^{n-1} + 1
  bool sqrt_bound = true;        ///< lambda1 >= sqrt(n) - 1e-6 (only meaningful when large)
  bool passed() const noexcept { return degree_dominates && ( !large || sqrt_bound ); }
};

/// Max degree of H against lambda1 of the matching principal submatrix of A_n, and for large H
/// lambda1 against sqrt(n).
inline HuangBoundCheck huang_bound_check( InducedSubgraph const& h )
{
  int const n = h.dimension();
  check_cap( "huang_bound_check", n, huang_cap );
  HuangBoundCheck out;
  out.max_degree = h.max_degree();
  if ( h.empty() )
  {
    out.degree_dominates = true;
    return out;
  }
  double const root = std::sqrt( static_cast<double>( n ) );
  out.lambda1 = lambda1( huang_submatrix( h ), root + 1.0 );
  out.degree_dominates = out.max_degree >= out.lambda1 - 1e-9;
  out.large = h.size() >= ( std::size_t{ 1 } << ( n - 1 ) ) + 1;
  if ( out.large )
    out.sqrt_bound = out.lambda1 >= root - 1e-6;
  return out;
}

/// Plain-text dense format: dimension line, then rows of space-separated integers.
inline std::string write_matrix( SignedMatrix const& a )
{
  std::string out = std::to_string( a.dim() ) + "\n";
  for ( std::size_t r = 0; r < a.dim(); ++r )
  {
    for ( std::size_t c = 0; c < a.dim(); ++c )
    {
      if ( c )
        out += ' ';
      out += std::to_string( a( r, c ) );
    }
    out += '\n';
  }
  return out;
}

inline SignedMatrix read_matrix( std::istream& in )
{
  long long dim = -1;
  if ( !( in >> dim ) || dim < 0 )
    throw InvalidInput( "matrix: bad dimension line" );
  std::vector<std::int8_t> e( static_cast<std::size_t>( dim * dim ) );
  for ( auto& x : e )
  {
    int v;
    if ( !( in >> v ) || v < -1 || v > 1 )
      throw InvalidInput( "matrix: expected an entry in {-1, 0, 1}" );
    x = static_cast<std::int8_t>( v );
  }
  std::vector<std::uint64_t> labels( static_cast<std::size_t>( dim ) );
  for ( std::size_t i = 0; i < labels.size(); ++i )
    labels[i] = i;
  return SignedMatrix( static_cast<std::size_t>( dim ), std::move( e ), std::move( labels ) );
}

/// Spectrum summary: eigenvalues grouped by value (12 significant digits) with multiplicities.
inline Json spectrum_json( std::span<double const> eigenvalues )
{
  Json groups = Json::array();
  double sum = 0.0;
  for ( std::size_t i = 0; i < eigenvalues.size(); )
  {
    std::size_t j = i;
    while ( j < eigenvalues.size() && std::abs( eigenvalues[j] - eigenvalues[i] ) < 1e-9 )
      ++j;
    groups.push_back( { { "value", stable_double( eigenvalues[i] ) }, { "multiplicity", j - i } } );
    i = j;
  }
  for ( double e : eigenvalues )
    sum += e;
  return { { "dimension", eigenvalues.size() },
           { "lambda1", eigenvalues.empty() ? 0.0 : stable_double( eigenvalues.front() ) },
           { "trace", stable_double( std::abs( sum ) < 1e-9 ? 0.0 : sum ) },
           { "eigenvalues", groups } };
}

} // namespace boolsens
