#pragma once

#include "bit_table.hpp"
#include "boolean_function.hpp"
#include "measures/sensitivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace boolsens
{

/// Vertex subset of Q_n; u ~ v iff u xor v is a power of two.
class InducedSubgraph
{
public:
  InducedSubgraph( int n, BitTable vertices ) : n_( n ), vertices_( std::move( vertices ) )
  {
    check_cap( "InducedSubgraph", n, default_max_vars );
    if ( n < 0 || vertices_.size() != ( std::size_t{ 1 } << n ) )
      throw InvalidInput( "vertex bitset must have 2^n entries" );
  }

  static InducedSubgraph from_vertices( int n, std::vector<std::uint64_t> const& vertices )
  {
    check_cap( "InducedSubgraph", n, default_max_vars );
    if ( n < 0 )
      throw InvalidInput( "negative dimension" );
    BitTable t( std::size_t{ 1 } << n );
    for ( auto v : vertices )
    {
      if ( v >= t.size() )
        throw InvalidInput( "vertex " + std::to_string( v ) + " out of range for n = " + std::to_string( n ) );
      t.set( v );
    }
    return InducedSubgraph( n, std::move( t ) );
  }

  static InducedSubgraph whole_cube( int n ) { return InducedSubgraph( n, BitTable( std::size_t{ 1 } << n, true ) ); }

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.count(); }
  bool empty() const noexcept { return vertices_.none(); }
  bool contains( std::uint64_t v ) const noexcept { return vertices_.test( v ); }
  BitTable const& vertex_set() const noexcept { return vertices_; }

  std::vector<std::uint64_t> vertices() const
  {
    std::vector<std::uint64_t> out;
    for ( std::uint64_t v = 0; v < vertices_.size(); ++v )
      if ( vertices_.test( v ) )
        out.push_back( v );
    return out;
  }

  InducedSubgraph complement() const { return InducedSubgraph( n_, ~vertices_ ); }

  /// Neighbours of v inside the subgraph (v itself need not belong to it).
  int degree( std::uint64_t v ) const noexcept
  {
    int d = 0;
    for ( int i = 0; i < n_; ++i )
      d += vertices_.test( v ^ ( std::uint64_t{ 1 } << i ) );
    return d;
  }

  /// Max degree; the empty subgraph reports 0.
  int max_degree() const noexcept
  {
    int best = 0;
    for ( std::uint64_t v = 0; v < vertices_.size() && best < n_; ++v )
      if ( vertices_.test( v ) )
        best = std::max( best, degree( v ) );
    return best;
  }

  double average_degree() const noexcept
  {
    std::size_t total = 0, count = 0;
    for ( std::uint64_t v = 0; v < vertices_.size(); ++v )
      if ( vertices_.test( v ) )
      {
        total += static_cast<std::size_t>( degree( v ) );
        ++count;
      }
    return count ? static_cast<double>( total ) / static_cast<double>( count ) : 0.0;
  }

  friend bool operator==( InducedSubgraph const&, InducedSubgraph const& ) = default;

private:
  int n_;
  BitTable vertices_;
};

inline int max_degree( InducedSubgraph const& g ) noexcept { return g.max_degree(); }

/// Level set {x : f(x) = level}.
inline InducedSubgraph from_function( BooleanFunction const& f, bool level )
{
  return InducedSubgraph( f.num_vars(), level ? f.table() : ~f.table() );
}

/// Indicator of the vertex set, g(x) = 1 iff x in G.
inline BooleanFunction to_function( InducedSubgraph const& g ) { return BooleanFunction( g.dimension(), g.vertex_set() ); }

/// Gamma = max of the max degrees of both level sets of f.
inline int gamma( BooleanFunction const& f )
{
  return std::max( from_function( f, true ).max_degree(), from_function( f, false ).max_degree() );
}

/// (degree of x within the level set containing it, n - s(f, x)); the two always agree.
inline std::pair<int, int> degree_sensitivity_link( BooleanFunction const& f, std::uint64_t x )
{
  auto const side = from_function( f, f( x ) );
  return { side.degree( x ), f.num_vars() - sensitivity_at( f, x ) };
}

/// g = f * parity in the ±1 view: f's output flipped exactly at odd-weight inputs.
inline BooleanFunction gl_twist( BooleanFunction const& f )
{
  return BooleanFunction::from_predicate( f.num_vars(), [&f]( std::uint64_t x ) { return f( x ) != ( std::popcount( x ) & 1 ); } );
}

/// Collection of distinct nonempty subsets of [n].
class SetFamily
{
public:
  SetFamily( int n, std::vector<VarSet> members ) : n_( n ), members_( std::move( members ) )
  {
    if ( n < 0 || n > 32 )
      throw InvalidInput( "set family: n out of range" );
    for ( std::size_t i = 0; i < members_.size(); ++i )
    {
      if ( members_[i] == 0 )
        throw InvalidInput( "set family: empty member" );
      if ( ( members_[i] & ~full_set( n ) ) != 0 )
        throw InvalidInput( "set family: member not a subset of [n]" );
      for ( std::size_t j = 0; j < i; ++j )
        if ( members_[j] == members_[i] )
          throw InvalidInput( "set family: duplicate member" );
    }
  }

  int universe() const noexcept { return n_; }
  std::vector<VarSet> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

private:
  int n_;
  std::vector<VarSet> members_;
};

/// Partition of [n] into k contiguous parts with sizes floor/ceil of sqrt(n), larger parts first.
inline SetFamily chung_partition( int n )
{
  if ( n < 1 )
    throw InvalidInput( "chung_partition: n must be >= 1" );
  int lo = 0;
  while ( ( lo + 1 ) * ( lo + 1 ) <= n )
    ++lo;
  int const hi = lo * lo == n ? lo : lo + 1;
  std::vector<int> sizes;
  for ( int k : { hi, lo } )
  {
    int const large = n - k * lo; // number of parts of size hi
    if ( hi == lo )
    {
      if ( large == 0 )
      {
        sizes.assign( k, lo );
        break;
      }
      continue;
    }
    if ( large >= 0 && large <= k )
    {
      sizes.assign( large, hi );
      sizes.insert( sizes.end(), k - large, lo );
      break;
    }
  }
  if ( sizes.empty() )
    throw InvalidInput( "chung_partition: no admissible partition for n = " + std::to_string( n ) );
  std::vector<VarSet> parts;
  int start = 0;
  for ( int s : sizes )
  {
    parts.push_back( ( ( VarSet{ 1 } << s ) - 1 ) << start );
    start += s;
  }
  return SetFamily( n, std::move( parts ) );
}

/// X(F): even-weight points containing some member, plus odd-weight points containing none.
inline InducedSubgraph chung_subgraph( SetFamily const& family )
{
  int const n = family.universe();
  check_cap( "chung_subgraph", n, default_max_vars );
  BitTable t( std::size_t{ 1 } << n );
  for ( std::uint64_t x = 0; x < t.size(); ++x )
  {
    bool covers = false;
    for ( auto m : family.members() )
      if ( ( x & m ) == m )
      {
        covers = true;
        break;
      }
    bool const even = ( std::popcount( x ) & 1 ) == 0;
    if ( even == covers )
      t.set( x );
  }
  return InducedSubgraph( n, std::move( t ) );
}

/// r(F): size of the largest member.
inline int family_rank( SetFamily const& family ) noexcept
{
  int r = 0;
  for ( auto m : family.members() )
    r = std::max( r, std::popcount( m ) );
  return r;
}

inline constexpr std::size_t family_t_cap = 20;

/// t(F): largest subfamily in which every member has a private element (one lying in no other
/// chosen member). Exhaustive over subfamilies.
inline int family_t( SetFamily const& family )
{
  auto const& m = family.members();
  if ( m.size() > family_t_cap )
    throw CapExceeded( "family_t", static_cast<int>( m.size() ), static_cast<int>( family_t_cap ) );
  std::uint32_t const count = std::uint32_t{ 1 } << m.size();
  int best = 0;
  for ( std::uint32_t sub = 1; sub < count; ++sub )
  {
    int const size = std::popcount( sub );
    if ( size <= best )
      continue;
    bool ok = true;
    for ( std::size_t i = 0; i < m.size() && ok; ++i )
    {
      if ( !( ( sub >> i ) & 1 ) )
        continue;
      VarSet others = 0;
      for ( std::size_t j = 0; j < m.size(); ++j )
        if ( j != i && ( ( sub >> j ) & 1 ) )
          others |= m[j];
      ok = ( m[i] & ~others ) != 0;
    }
    if ( ok )
      best = size;
  }
  return best;
}

/// Subgraph text format: first line n, then one decimal vertex index per line.
inline std::string write_subgraph( InducedSubgraph const& g )
{
  std::string out = std::to_string( g.dimension() ) + "\n";
  for ( auto v : g.vertices() )
    out += std::to_string( v ) + "\n";
  return out;
}

inline InducedSubgraph read_subgraph( std::istream& in )
{
  std::string line;
  if ( !std::getline( in, line ) )
    throw InvalidInput( "subgraph: missing dimension line" );
  int n = -1;
  std::istringstream ns( line );
  if ( !( ns >> n ) || n < 0 || !( ns >> std::ws ).eof() )
    throw InvalidInput( "subgraph: first line must be a non-negative integer" );
  check_cap( "subgraph", n, default_max_vars );
  std::vector<std::uint64_t> vertices;
  while ( std::getline( in, line ) )
  {
    std::istringstream ls( line );
    std::uint64_t v;
    if ( !( ls >> v ) )
    {
      if ( ( ls.clear(), ls >> std::ws ).eof() )
        continue; // blank line
      throw InvalidInput( "subgraph: bad vertex line '" + line + "'" );
    }
    if ( !( ls >> std::ws ).eof() )
      throw InvalidInput( "subgraph: bad vertex line '" + line + "'" );
    vertices.push_back( v );
  }
  return InducedSubgraph::from_vertices( n, vertices );
}

inline InducedSubgraph read_subgraph_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw InvalidInput( "cannot open subgraph file '" + path + "'" );
  return read_subgraph( in );
}

} // namespace boolsens
