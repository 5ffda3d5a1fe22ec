// Runs every acceptance criterion at its stated tolerance and prints one line per criterion.
// Exit status is 0 only when all criteria pass.

#include <boolsens/boolsens.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace boolsens;

namespace
{

struct Outcome
{
  bool pass;
  std::string detail;
};

double seconds_since( std::chrono::steady_clock::time_point start )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
}

std::string fmt( double v ) { return format_double( v ); }

BooleanFunction from_code( int n, std::uint64_t code )
{
  return BooleanFunction::from_predicate( n, [code]( std::uint64_t x ) { return ( code >> x ) & 1; } );
}

Outcome check_matrix_algebra()
{
  auto const start = std::chrono::steady_clock::now();
  for ( int n = 1; n <= 10; ++n )
    if ( !square_check( huang_matrix( n ), n ) )
      return { false, "A^2 != nI at n = " + std::to_string( n ) };
  double const t = seconds_since( start );
  return { t < 10.0, "A^2 = nI for n = 1..10 in " + fmt( t ) + " s" };
}

Outcome check_spectrum()
{
  for ( int n = 1; n <= 6; ++n )
  {
    auto const a = huang_matrix( n );
    auto const eig = full_spectrum( a );
    auto const implied = implied_huang_spectrum( a, n );
    double const root = std::sqrt( static_cast<double>( n ) );
    double trace = 0.0;
    std::size_t plus = 0;
    for ( std::size_t i = 0; i < eig.size(); ++i )
    {
      trace += eig[i];
      if ( std::abs( eig[i] - implied[i] ) > 1e-9 || std::abs( std::abs( eig[i] ) - root ) > 1e-9 )
        return { false, "eigenvalue off +-sqrt(n) at n = " + std::to_string( n ) };
      plus += eig[i] > 0;
    }
    if ( std::abs( trace ) > 1e-9 || 2 * plus != eig.size() )
      return { false, "trace or multiplicity wrong at n = " + std::to_string( n ) };
  }
  return { true, "spectrum +-sqrt(n) with equal multiplicity, trace 0, n = 1..6" };
}

Outcome check_large_subgraph_degree()
{
  std::string detail;
  for ( int n = 2; n <= 4; ++n )
  {
    auto const r = verify_huang( n );
    if ( !r.passed() )
      return { false, "n = " + std::to_string( n ) + ": " + r.violations.front() };
    detail += "n=" + std::to_string( n ) + ": " + std::to_string( r.checked ) + " subsets; ";
  }
  CampaignOptions opt;
  opt.samples = 1000;
  opt.seed = 2019;
  for ( int n = 5; n <= 6; ++n )
  {
    auto const r = verify_huang( n, opt );
    if ( !r.passed() || r.checked != 1000 )
      return { false, "sampled n = " + std::to_string( n ) + " failed" };
    detail += "n=" + std::to_string( n ) + ": 1000 seeded; ";
  }
  return { true, detail + "0 violations" };
}

Outcome check_tightness()
{
  std::string detail;
  for ( int n : { 4, 9, 16 } )
  {
    auto const family = chung_partition( n );
    auto const x = chung_subgraph( family );
    auto const rest = x.complement();
    auto const& larger = x.size() > rest.size() ? x : rest;
    long long const k = static_cast<long long>( family.size() );
    long long const expected = ( 1ll << ( n - 1 ) ) + ( ( n + k + 1 ) % 2 == 0 ? 1 : -1 );
    int const root = static_cast<int>( std::lround( std::sqrt( n ) ) );
    if ( larger.size() != ( std::size_t{ 1 } << ( n - 1 ) ) + 1 || larger.max_degree() != root ||
         static_cast<long long>( x.size() ) != expected )
      return { false, "construction off at n = " + std::to_string( n ) };
    detail += "n=" + std::to_string( n ) + " |X|=" + std::to_string( x.size() ) + " D=" + std::to_string( root ) + "; ";
  }
  return { true, detail };
}

Outcome check_chain()
{
  std::string detail;
  for ( int n = 2; n <= 4; ++n )
  {
    auto const start = std::chrono::steady_clock::now();
    auto const r = verify_chain( n );
    double const t = seconds_since( start );
    if ( !r.passed() )
      return { false, "n = " + std::to_string( n ) + ": " + r.violations.front() };
    if ( n == 4 && t >= 600.0 )
      return { false, "n = 4 took " + fmt( t ) + " s" };
    detail += "n=" + std::to_string( n ) + ": " + std::to_string( r.checked ) + " functions";
    detail += n == 4 ? " in " + fmt( t ) + " s" : "; ";
  }
  return { true, detail };
}

Outcome check_rubinstein_case()
{
  auto const f = rubinstein( 4 );
  auto const start = std::chrono::steady_clock::now();
  int const s = sensitivity( f );
  double const t = seconds_since( start );
  int const bs0 = block_sensitivity_at( f, 0 );
  bool const pass = s == 4 && bs0 == 8 && 2 * bs0 == s * s && t < 5.0;
  return { pass, "s=" + std::to_string( s ) + " bs(0)=" + std::to_string( bs0 ) + " scan " + fmt( t ) + " s" };
}

Outcome check_fourier_identities()
{
  for ( int n = 0; n <= 4; ++n )
  {
    auto const r = verify_fourier( n ); // Parseval, influence identity and total influence <= deg
    if ( !r.passed() )
      return { false, r.violations.front() };
  }
  CampaignOptions opt;
  opt.samples = 100;
  opt.seed = 8;
  auto const r = verify_fourier( 8, opt );
  if ( !r.passed() )
    return { false, r.violations.front() };
  return { true, "exhaustive n <= 4, 100 random at n = 8" };
}

Outcome check_gl_identities()
{
  for ( int n = 1; n <= 4; ++n )
  {
    auto const r = verify_gl_equivalence( n );
    if ( !r.passed() )
      return { false, r.violations.front() };
  }
  return { true, "exhaustive n <= 4" };
}

Outcome check_approximate_degree()
{
  auto const orr = approx_degree_with_witness( or_f( 2 ) );
  bool ok = approx_degree( BooleanFunction::constant( 2, false ) ) == 0 && orr.degree == 1 &&
            std::abs( orr.error - 0.25 ) <= 1e-6 && approx_degree( parity_f( 2 ) ) == 2;
  if ( !ok )
    return { false, "named values wrong" };
  for ( int n = 0; n <= 3; ++n )
    for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++code )
    {
      auto const f = from_code( n, code );
      if ( approx_degree( f ) > degree( f ) )
        return { false, "approx degree above degree for n=" + std::to_string( n ) };
    }
  return { true, "const 0, OR_2 1 (eps " + fmt( orr.error ) + "), parity_2 2, <= deg for n <= 3" };
}

Outcome check_e3()
{
  auto const t1 = e3_tree( 1 ), t2 = e3_tree( 2 );
  bool ok = degree( t1 ) == 2 && degree( t2 ) == 4;
  for ( auto const& f : { t1, t2 } )
  {
    ok = ok && !f( 0 );
    for ( int i = 0; i < f.num_vars(); ++i )
      ok = ok && f( std::uint64_t{ 1 } << i );
  }
  return { ok, "deg 2 at depth 1, 4 at depth 2" };
}

Outcome check_interlacing()
{
  auto const all = verify_interlacing( 4 );
  CampaignOptions opt;
  opt.samples = 100;
  opt.seed = 11;
  auto const sampled = verify_interlacing( 8, opt );
  return { all.passed() && sampled.passed(),
           std::to_string( all.checked ) + " submatrices of A_4, " + std::to_string( sampled.checked ) + " of A_8" };
}

Outcome check_finite_restatements()
{
  for ( int n = 0; n <= 4; ++n )
    for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++code )
    {
      auto const f = from_code( n, code );
      int const d = degree( f );
      if ( std::popcount( relevant_variables( f ) ) > d * ( 1 << d ) )
        return { false, "relevant variables above deg*2^deg" };
    }
  for ( int n = 2; n <= 4; ++n )
    if ( !verify_cube_bounds( n ).passed() )
      return { false, "log-bound sanity check failed at n = " + std::to_string( n ) };
  return { true, "|relevant| <= deg*2^deg and log-bound sanity, n <= 4" };
}

} // namespace

int main()
{
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      { "matrix algebra", check_matrix_algebra },
      { "spectrum", check_spectrum },
      { "degree bound on large subgraphs", check_large_subgraph_degree },
      { "tightness of the partition construction", check_tightness },
      { "inequality chain", check_chain },
      { "rubinstein k=4", check_rubinstein_case },
      { "fourier identities", check_fourier_identities },
      { "parity-twist identities", check_gl_identities },
      { "approximate degree", check_approximate_degree },
      { "e3 tree", check_e3 },
      { "interlacing", check_interlacing },
      { "finite restatements", check_finite_restatements },
  };
  int failed = 0;
  for ( std::size_t i = 0; i < criteria.size(); ++i )
  {
    Outcome o;
    try
    {
      o = criteria[i].second();
    }
    catch ( std::exception const& e )
    {
      o = { false, std::string( "exception: " ) + e.what() };
    }
    failed += !o.pass;
    std::printf( "[%s] criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str() );
  }
  std::printf( "%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size() );
  return failed == 0 ? 0 : 1;
}
