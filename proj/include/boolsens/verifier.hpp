#pragma once

#include "constructions.hpp"
#include "hypercube.hpp"
#include "json_format.hpp"
#include "measures/block_sensitivity.hpp"
#include "measures/certificate.hpp"
#include "measures/decision_tree.hpp"
#include "measures/degree.hpp"
#include "measures/fourier.hpp"
#include "measures/sensitivity.hpp"
#include "spectral.hpp"
#include "truth_table_io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace boolsens
{

struct CampaignOptions
{
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000; ///< used where the space is too large to enumerate
};

struct CampaignReport
{
  std::string name;
  int n = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed; ///< set for sampled campaigns
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> violations;
  Json witnesses = Json::object();
  double duration_seconds = 0.0;

  bool passed() const noexcept { return violations.empty(); }
};

/// Machine-readable report. Timing is excluded unless asked for, so identical runs serialize identically.
inline Json to_json( CampaignReport const& r, bool include_timing = false )
{
  Json j = { { "campaign", r.name },
             { "n", r.n },
             { "exhaustive", r.exhaustive },
             { "seed", r.seed ? Json( *r.seed ) : Json( nullptr ) },
             { "checked", r.checked },
             { "counts", r.counts },
             { "violations", r.violations },
             { "witnesses", r.witnesses },
             { "passed", r.passed() } };
  if ( include_timing )
    j["duration_seconds"] = stable_double( r.duration_seconds );
  return j;
}

/// Plain-text table rendered from the JSON report.
inline std::string summary_table( Json const& report )
{
  std::string out;
  auto row = [&]( std::string const& k, std::string const& v ) {
    out += k;
    out.append( k.size() < 28 ? 28 - k.size() : 1, ' ' );
    out += v + "\n";
  };
  auto text = []( Json const& v ) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  row( "campaign", text( report.at( "campaign" ) ) );
  row( "n", text( report.at( "n" ) ) );
  row( "mode", report.at( "exhaustive" ).get<bool>() ? "exhaustive" : "sampled (seed " + text( report.at( "seed" ) ) + ")" );
  row( "checked", text( report.at( "checked" ) ) );
  for ( auto const& [k, v] : report.at( "counts" ).items() )
    row( k, text( v ) );
  for ( auto const& [k, v] : report.at( "witnesses" ).items() )
    row( k, text( v ) );
  row( "violations", std::to_string( report.at( "violations" ).size() ) );
  for ( auto const& v : report.at( "violations" ) )
    row( "", text( v ) );
  row( "result", report.at( "passed" ).get<bool>() ? "PASS" : "FAIL" );
  return out;
}

inline std::string summary_table( CampaignReport const& r ) { return summary_table( to_json( r ) ); }

namespace detail
{

/// Uniform integer in [0, bound) from raw generator output (rejection sampling), so sequences are
/// identical on every standard library.
inline std::uint64_t uniform_below( std::mt19937_64& rng, std::uint64_t bound )
{
  std::uint64_t const limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % bound );
  for ( ;; )
  {
    std::uint64_t const r = rng();
    if ( r < limit )
      return r % bound;
  }
}

inline BooleanFunction random_function( int n, std::mt19937_64& rng )
{
  BitTable t( std::size_t{ 1 } << n );
  auto words = t.mutable_words();
  for ( auto& w : words )
    w = rng();
  if ( t.size() % 64 )
    words.back() &= ( std::uint64_t{ 1 } << ( t.size() % 64 ) ) - 1;
  return BooleanFunction( n, std::move( t ) );
}

/// m distinct vertices of Q_n by a partial Fisher-Yates shuffle, sorted.
inline std::vector<std::uint64_t> random_vertex_subset( int n, std::size_t m, std::mt19937_64& rng )
{
  std::vector<std::uint64_t> all( std::size_t{ 1 } << n );
  for ( std::size_t i = 0; i < all.size(); ++i )
    all[i] = i;
  for ( std::size_t i = 0; i < m; ++i )
    std::swap( all[i], all[i + uniform_below( rng, all.size() - i )] );
  all.resize( m );
  std::sort( all.begin(), all.end() );
  return all;
}

/// Partial result of one chunk of a campaign.
struct Tally
{
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> violations;

  void merge( Tally&& o )
  {
    checked += o.checked;
    for ( auto const& [k, v] : o.counts )
      counts[k] += v;
    violations.insert( violations.end(), std::make_move_iterator( o.violations.begin() ),
                       std::make_move_iterator( o.violations.end() ) );
  }
};

/// Splits [0, total) into `jobs` contiguous chunks, runs work(begin, end) -> Partial on each in
/// its own thread, and folds the partials in chunk order, so output is independent of `jobs`
/// whenever the fold is associative.
template<typename Partial, typename Work, typename Fold>
Partial parallel_reduce( std::uint64_t total, int jobs, Work&& work, Fold&& fold )
{
  jobs = std::max( 1, std::min<int>( jobs, static_cast<int>( std::min<std::uint64_t>( total, 256 ) ) ) );
  if ( jobs <= 1 )
    return work( std::uint64_t{ 0 }, total );
  std::vector<Partial> parts( static_cast<std::size_t>( jobs ) );
  std::vector<std::thread> threads;
  for ( int j = 0; j < jobs; ++j )
  {
    std::uint64_t const begin = total * static_cast<std::uint64_t>( j ) / static_cast<std::uint64_t>( jobs );
    std::uint64_t const end = total * static_cast<std::uint64_t>( j + 1 ) / static_cast<std::uint64_t>( jobs );
    threads.emplace_back( [&, j, begin, end] { parts[static_cast<std::size_t>( j )] = work( begin, end ); } );
  }
  for ( auto& t : threads )
    t.join();
  Partial out = std::move( parts[0] );
  for ( std::size_t j = 1; j < parts.size(); ++j )
    fold( out, std::move( parts[j] ) );
  return out;
}

inline void fold_tally( Tally& a, Tally&& b ) { a.merge( std::move( b ) ); }

class Stopwatch
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>( std::chrono::steady_clock::now() - start_ ).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CampaignReport finish( std::string name, int n, bool exhaustive, CampaignOptions const& opt, Tally&& t,
                              Stopwatch const& clock )
{
  CampaignReport r;
  r.name = std::move( name );
  r.n = n;
  r.exhaustive = exhaustive;
  if ( !exhaustive )
    r.seed = opt.seed;
  r.checked = t.checked;
  r.counts = std::move( t.counts );
  r.violations = std::move( t.violations );
  r.duration_seconds = clock.seconds();
  return r;
}

inline constexpr int exhaustive_function_cap = 4;

/// Function number i of the campaign: the i-th table when exhaustive, else the i-th seeded draw.
class FunctionStream
{
public:
  FunctionStream( int n, CampaignOptions const& opt ) : n_( n ), opt_( opt ) {}

  bool exhaustive() const noexcept { return n_ <= exhaustive_function_cap; }
  std::uint64_t size() const noexcept { return exhaustive() ? std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n_ ) : opt_.samples; }

  /// Functions for indices [begin, end); sampled streams regenerate the shared prefix so any
  /// chunking yields the same sequence.
  template<typename Visit>
  void for_range( std::uint64_t begin, std::uint64_t end, Visit&& visit ) const
  {
    if ( exhaustive() )
    {
      std::size_t const points = std::size_t{ 1 } << n_;
      for ( std::uint64_t code = begin; code < end; ++code )
      {
        BitTable t( points );
        t.mutable_words()[0] = code;
        visit( BooleanFunction( n_, std::move( t ) ) );
      }
      return;
    }
    std::mt19937_64 rng( opt_.seed );
    for ( std::uint64_t i = 0; i < end; ++i )
    {
      auto f = random_function( n_, rng );
      if ( i >= begin )
        visit( f );
    }
  }

private:
  int n_;
  CampaignOptions opt_;
};

inline std::string describe( BooleanFunction const& f ) { return "f=" + to_hex( f ); }

} // namespace detail

/// Checks the polynomial relations among s, bs, C, D and deg on every function at n <= 4, or on
/// seeded random functions above that.
inline CampaignReport verify_chain( int n, CampaignOptions const& opt = {} )
{
  if ( n < 0 )
    throw InvalidInput( "verify_chain: negative n" );
  detail::Stopwatch clock;
  detail::FunctionStream stream( n, opt );
  MeasureCaps caps;
  check_cap( "verify_chain", n, std::min( caps.decision_tree, caps.block_sensitivity_full ) );

  auto work = [&]( std::uint64_t begin, std::uint64_t end ) {
    detail::Tally t;
    DecisionTreeSolver trees( caps );
    stream.for_range( begin, end, [&]( BooleanFunction const& f ) {
      ++t.checked;
      long long const s = sensitivity( f );
      long long const bs = block_sensitivity( f, caps );
      long long const c = certificate_complexity( f, caps );
      long long const d = trees.depth( f );
      long long const deg = degree( f );
      if ( f.is_constant() )
        ++t.counts["constant"];
      auto check = [&]( char const* name, bool ok, std::string const& values ) {
        if ( !ok )
          t.violations.push_back( detail::describe( f ) + " " + name + " " + values );
      };
      auto vals = [&] {
        return "(s=" + std::to_string( s ) + " bs=" + std::to_string( bs ) + " C=" + std::to_string( c ) +
               " D=" + std::to_string( d ) + " deg=" + std::to_string( deg ) + ")";
      };
      auto p4 = []( long long v ) { return v * v * v * v; };
      auto p8 = [&]( long long v ) { return p4( v ) * p4( v ); };
      check( "bs<=2deg^2", bs <= 2 * deg * deg, vals() );
      check( "deg<=s^2", deg <= s * s, vals() );
      check( "s>=sqrt(deg)", static_cast<double>( s ) >= std::sqrt( static_cast<double>( deg ) ), vals() );
      check( "bs<=D", bs <= d, vals() );
      check( "D<=bs^4", d <= p4( bs ), vals() );
      check( "deg<=D", deg <= d, vals() );
      check( "D<=16deg^8", d <= 16 * p8( deg ), vals() );
      check( "bs<=2s^4", bs <= 2 * p4( s ), vals() );
      check( "s<=bs", s <= bs, vals() );
      check( "bs<=C", bs <= c, vals() );
      check( "C<=D", c <= d, vals() );
      check( "D<=n", d <= n, vals() );
    } );
    return t;
  };
  auto t = detail::parallel_reduce<detail::Tally>( stream.size(), opt.jobs, work, detail::fold_tally );
  return detail::finish( "chain", n, stream.exhaustive(), opt, std::move( t ), clock );
}

/// Largest bs(f)/s(f)^2 over non-constant functions, with the first function attaining it.
inline CampaignReport extremal_ratio( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::FunctionStream stream( n, opt );
  MeasureCaps caps;
  check_cap( "extremal_ratio", n, caps.block_sensitivity_full );

  struct Best
  {
    detail::Tally tally;
    long long num = -1, den = 1; // ratio num/den
    std::optional<BooleanFunction> witness;
    int s = 0, bs = 0;
  };
  auto work = [&]( std::uint64_t begin, std::uint64_t end ) {
    Best b;
    stream.for_range( begin, end, [&]( BooleanFunction const& f ) {
      if ( f.is_constant() )
      {
        ++b.tally.counts["constant_skipped"];
        return;
      }
      ++b.tally.checked;
      int const s = sensitivity( f );
      int const bs = block_sensitivity( f, caps );
      if ( b.num < 0 || static_cast<long long>( bs ) * b.den > b.num * s * s )
      {
        b.num = bs;
        b.den = static_cast<long long>( s ) * s;
        b.witness = f;
        b.s = s;
        b.bs = bs;
      }
    } );
    return b;
  };
  auto fold = []( Best& a, Best&& o ) {
    a.tally.merge( std::move( o.tally ) );
    if ( o.num >= 0 && ( a.num < 0 || o.num * a.den > a.num * o.den ) )
    {
      a.num = o.num;
      a.den = o.den;
      a.witness = std::move( o.witness );
      a.s = o.s;
      a.bs = o.bs;
    }
  };
  auto best = detail::parallel_reduce<Best>( stream.size(), opt.jobs, work, fold );
  auto r = detail::finish( "ratio", n, stream.exhaustive(), opt, std::move( best.tally ), clock );
  if ( best.witness )
    r.witnesses["max_ratio"] = { { "ratio", stable_double( static_cast<double>( best.num ) / static_cast<double>( best.den ) ) },
                                 { "s", best.s },
                                 { "bs", best.bs },
                                 { "table", to_hex( *best.witness ) } };
  if ( n == 4 )
  {
    auto const rub = rubinstein( 2 );
    int const s = sensitivity( rub ), bs = block_sensitivity( rub, caps );
    r.witnesses["rubinstein_k2"] = { { "s", s }, { "bs", bs }, { "ratio", stable_double( double( bs ) / ( s * s ) ) } };
  }
  return r;
}

inline constexpr int g_cap = 4;

struct GResult
{
  std::optional<int> t;                ///< minimal t, or empty when no subgraph reaches degree k
  std::vector<int> min_degree_by_size; ///< index t: smallest max degree over t-vertex subgraphs
};

/// Sweeps every vertex subset of Q_n, recording the smallest max degree per subset size.
inline std::vector<int> min_max_degree_by_size( int n )
{
  check_cap( "compute_g", n, g_cap );
  std::size_t const points = std::size_t{ 1 } << n;
  std::vector<int> best( points + 1, n + 1 );
  for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << points ); ++s )
  {
    int delta = 0;
    for ( std::size_t v = 0; v < points; ++v )
    {
      if ( !( ( s >> v ) & 1 ) )
        continue;
      int d = 0;
      for ( int i = 0; i < n; ++i )
        d += ( s >> ( v ^ ( std::size_t{ 1 } << i ) ) ) & 1;
      delta = std::max( delta, d );
    }
    auto& slot = best[static_cast<std::size_t>( std::popcount( s ) )];
    slot = std::min( slot, delta );
  }
  return best;
}

/// g(n, k): least t such that every t-vertex induced subgraph of Q_n has max degree >= k.
inline GResult compute_g( int n, double k )
{
  GResult r;
  r.min_degree_by_size = min_max_degree_by_size( n );
  for ( std::size_t t = 0; t < r.min_degree_by_size.size(); ++t )
    if ( r.min_degree_by_size[t] >= k - 1e-12 )
    {
      // Max degree only grows with the vertex set, so the first qualifying size is g.
      r.t = static_cast<int>( t );
      break;
    }
  return r;
}

/// g(n, k) for k = 1..n plus the identity g(n, sqrt n) = 2^{n-1} + 1.
inline CampaignReport verify_g( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::Tally t;
  auto const by_size = min_max_degree_by_size( n );
  t.checked = std::uint64_t{ 1 } << ( std::size_t{ 1 } << n );
  Json values = Json::object();
  auto g_of = [&]( double k ) -> std::optional<int> {
    for ( std::size_t s = 0; s < by_size.size(); ++s )
      if ( by_size[s] >= k - 1e-12 )
        return static_cast<int>( s );
    return std::nullopt;
  };
  for ( int k = 1; k <= n; ++k )
  {
    auto g = g_of( k );
    values[std::to_string( k )] = g ? Json( *g ) : Json( nullptr );
  }
  auto const g_root = g_of( std::sqrt( static_cast<double>( n ) ) );
  int const expected = ( 1 << ( n - 1 ) ) + 1;
  if ( n >= 1 && ( !g_root || *g_root != expected ) )
    t.violations.push_back( "g(n, sqrt n) = " + ( g_root ? std::to_string( *g_root ) : std::string( "none" ) ) +
                            ", expected " + std::to_string( expected ) );
  auto r = detail::finish( "g", n, true, opt, std::move( t ), clock );
  r.witnesses["g_by_k"] = values;
  r.witnesses["g_sqrt_n"] = g_root ? Json( *g_root ) : Json( nullptr );
  r.witnesses["min_max_degree_by_size"] = by_size;
  return r;
}

/// The parity-twist identities relating f and g = f * parity, and for unbalanced g the existence
/// of a point whose sensitivity is at most n - sqrt(n) (the Huang instance of h(n)) and at most
/// n minus the logarithmic bound.
inline CampaignReport verify_gl_equivalence( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::FunctionStream stream( n, opt );
  double const root = std::sqrt( static_cast<double>( n ) );
  double const log_bound =
      n >= 2 ? 0.5 * std::log2( double( n ) ) - 0.5 * std::log2( std::log2( double( n ) ) ) + 0.5 : 0.0;
  std::uint64_t const all = ( std::uint64_t{ 1 } << n ) - 1;

  auto work = [&]( std::uint64_t begin, std::uint64_t end ) {
    detail::Tally t;
    stream.for_range( begin, end, [&]( BooleanFunction const& f ) {
      ++t.checked;
      auto const g = gl_twist( f );
      for ( std::uint64_t x = 0; x < f.num_points(); ++x )
        if ( sensitivity_at( g, x ) != n - sensitivity_at( f, x ) )
        {
          t.violations.push_back( detail::describe( f ) + " s(g,x)=n-s(f,x) fails at x=" + std::to_string( x ) );
          break;
        }
      auto const ff = fourier( f );
      auto const gf = fourier( g );
      for ( std::uint64_t s = 0; s <= all; ++s )
        if ( std::abs( gf[static_cast<VarSet>( s )] - ff[static_cast<VarSet>( all & ~s )] ) > 1e-12 )
        {
          t.violations.push_back( detail::describe( f ) + " ghat(S)=fhat([n]-S) fails at S=" + var_list( s ).dump() );
          break;
        }
      double mean = 0.0;
      for ( std::uint64_t x = 0; x < g.num_points(); ++x )
        mean += g( x ) ? -1.0 : 1.0;
      mean /= static_cast<double>( g.num_points() );
      if ( std::abs( mean - ff[static_cast<VarSet>( all )] ) > 1e-12 )
        t.violations.push_back( detail::describe( f ) + " E(g)=fhat([n]) fails" );

      if ( 2 * g.weight() == g.num_points() )
        return;
      ++t.counts["unbalanced"];
      // The larger level set of g carries a vertex of degree >= sqrt(n); degree there is n - s(g, x).
      bool const larger = 2 * g.weight() > g.num_points();
      int best = -1;
      for ( std::uint64_t x = 0; x < g.num_points(); ++x )
      {
        if ( g( x ) != larger )
          continue;
        auto const [deg, slack] = degree_sensitivity_link( g, x );
        if ( deg != slack )
        {
          t.violations.push_back( detail::describe( f ) + " degree/sensitivity link fails at x=" + std::to_string( x ) );
          return;
        }
        best = std::max( best, deg );
      }
      if ( n >= 1 && static_cast<double>( best ) < root - 1e-12 )
        t.violations.push_back( detail::describe( f ) + " no x with s(g,x) <= n - sqrt(n)" );
      if ( n >= 2 && !( static_cast<double>( best ) > log_bound ) )
        t.violations.push_back( detail::describe( f ) + " no x with s(g,x) < n - log bound" );
    } );
    return t;
  };
  auto t = detail::parallel_reduce<detail::Tally>( stream.size(), opt.jobs, work, detail::fold_tally );
  return detail::finish( "gl", n, stream.exhaustive(), opt, std::move( t ), clock );
}

inline constexpr int huang_exhaustive_cap = 4;

/// Every (2^{n-1}+1)-vertex induced subgraph (n <= 4) or seeded random ones: max degree at least
/// ceil(sqrt n), max degree >= lambda1 of the signed submatrix, lambda1 >= sqrt(n). Also checks
/// A_n^2 = nI, trace 0 and an odd number of negative edges on every 4-cycle.
inline CampaignReport verify_huang( int n, CampaignOptions const& opt = {} )
{
  if ( n < 1 )
    throw InvalidInput( "verify_huang: n must be >= 1" );
  check_cap( "verify_huang", n, huang_cap );
  detail::Stopwatch clock;
  detail::Tally head;
  auto const a = huang_matrix( n );
  if ( !square_check( a, n ) )
    head.violations.push_back( "A^2 != nI" );
  if ( a.trace() != 0 )
    head.violations.push_back( "trace(A) != 0" );
  auto const cycles = four_cycle_negative_counts( a, n );
  if ( auto bad = cycles[0] + cycles[2] + cycles[4]; bad != 0 )
    head.violations.push_back( std::to_string( bad ) + " 4-cycles with an even number of negative edges" );
  head.counts["four_cycles_one_negative"] = cycles[1];
  head.counts["four_cycles_three_negative"] = cycles[3];

  std::size_t const points = std::size_t{ 1 } << n;
  std::size_t const m = points / 2 + 1;
  int const ceil_root = [n] {
    int r = 0;
    while ( r * r < n )
      ++r;
    return r;
  }();
  bool const exhaustive = n <= huang_exhaustive_cap;

  auto check_subset = [&]( std::vector<std::uint64_t> const& vs, detail::Tally& t ) {
    ++t.checked;
    auto const h = InducedSubgraph::from_vertices( n, vs );
    auto const res = huang_bound_check( h );
    if ( res.max_degree < ceil_root )
      t.violations.push_back( "subset " + Json( vs ).dump() + " has max degree " + std::to_string( res.max_degree ) );
    if ( !res.passed() )
      t.violations.push_back( "subset " + Json( vs ).dump() + " fails spectral bound (lambda1=" +
                              format_double( res.lambda1 ) + ")" );
    if ( res.max_degree == ceil_root )
      ++t.counts["tight_subsets"];
  };

  detail::Tally body;
  if ( exhaustive )
  {
    // Subsets are enumerated as m-bit masks of the 2^n <= 16 vertices (Gosper's hack); chunk by rank.
    std::vector<std::uint64_t> masks;
    std::uint64_t s = ( std::uint64_t{ 1 } << m ) - 1;
    std::uint64_t const limit = std::uint64_t{ 1 } << points;
    while ( s < limit )
    {
      masks.push_back( s );
      std::uint64_t const c = s & -s;
      std::uint64_t const r = s + c;
      s = ( ( ( r ^ s ) >> 2 ) / c ) | r;
    }
    body = detail::parallel_reduce<detail::Tally>(
        masks.size(), opt.jobs,
        [&]( std::uint64_t begin, std::uint64_t end ) {
          detail::Tally t;
          for ( auto i = begin; i < end; ++i )
          {
            std::vector<std::uint64_t> vs;
            for ( std::size_t v = 0; v < points; ++v )
              if ( ( masks[i] >> v ) & 1 )
                vs.push_back( v );
            check_subset( vs, t );
          }
          return t;
        },
        detail::fold_tally );
  }
  else
  {
    std::mt19937_64 rng( opt.seed );
    std::vector<std::vector<std::uint64_t>> subsets;
    for ( std::uint64_t i = 0; i < opt.samples; ++i )
      subsets.push_back( detail::random_vertex_subset( n, m, rng ) );
    body = detail::parallel_reduce<detail::Tally>(
        subsets.size(), opt.jobs,
        [&]( std::uint64_t begin, std::uint64_t end ) {
          detail::Tally t;
          for ( auto i = begin; i < end; ++i )
            check_subset( subsets[i], t );
          return t;
        },
        detail::fold_tally );
  }
  head.merge( std::move( body ) );
  auto r = detail::finish( "huang", n, exhaustive, opt, std::move( head ), clock );
  r.witnesses["subset_size"] = m;
  r.witnesses["required_max_degree"] = ceil_root;
  return r;
}

/// Chung's partition construction: sizes of X(F) and its complement, max degrees against
/// sqrt(n) + 1, exact sqrt(n) on the larger side at perfect squares, r(F), t(F) and the bound
/// max degree <= max(r, t) on both sides.
inline CampaignReport verify_chung( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::Tally t;
  auto const family = chung_partition( n );
  auto const x = chung_subgraph( family );
  auto const rest = x.complement();
  int const k = static_cast<int>( family.size() );
  long long const half = 1ll << ( n - 1 );
  long long const expected = half + ( ( n + k + 1 ) % 2 == 0 ? 1 : -1 );
  auto const& larger = x.size() > rest.size() ? x : rest;
  int const dx = x.max_degree(), drest = rest.max_degree(), dlarge = larger.max_degree();
  int const r = family_rank( family );
  int const tf = family_t( family );
  double const root = std::sqrt( static_cast<double>( n ) );
  int const iroot = static_cast<int>( std::lround( root ) );
  bool const square = iroot * iroot == n;

  t.checked = 1;
  if ( static_cast<long long>( x.size() ) != expected )
    t.violations.push_back( "|X(F)| = " + std::to_string( x.size() ) + ", expected " + std::to_string( expected ) );
  if ( static_cast<long long>( larger.size() ) != half + 1 )
    t.violations.push_back( "larger side has " + std::to_string( larger.size() ) + " vertices" );
  if ( !( dx < root + 1 ) || !( drest < root + 1 ) )
    t.violations.push_back( "max degree not below sqrt(n) + 1" );
  if ( square && dlarge != iroot )
    t.violations.push_back( "larger side max degree " + std::to_string( dlarge ) + " != sqrt(n)" );
  if ( tf != k )
    t.violations.push_back( "t(F) = " + std::to_string( tf ) + " != k" );
  if ( dx > std::max( r, tf ) || drest > std::max( r, tf ) )
    t.violations.push_back( "max degree exceeds max(r(F), t(F))" );

  auto rep = detail::finish( "chung", n, true, opt, std::move( t ), clock );
  Json parts = Json::array();
  for ( auto m : family.members() )
    parts.push_back( var_list( m ) );
  rep.witnesses = { { "parts", parts },
                    { "k", k },
                    { "x_size", x.size() },
                    { "complement_size", rest.size() },
                    { "x_max_degree", dx },
                    { "complement_max_degree", drest },
                    { "larger_side_max_degree", dlarge },
                    { "rank", r },
                    { "t", tf } };
  return rep;
}

/// Cauchy interlacing for principal submatrices of A_n: all of them when 2^n <= 16, else
/// seeded random ones of size up to 64. Above 64 rows the outer spectrum is the implied +-sqrt(n).
inline CampaignReport verify_interlacing( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  auto const a = huang_matrix( n );
  std::size_t const dim = a.dim();
  std::vector<double> const outer = dim <= full_spectrum_cap ? full_spectrum( a ) : implied_huang_spectrum( a, n );
  bool const exhaustive = dim <= 16;
  auto check = [&]( std::vector<std::size_t> const& rows, detail::Tally& t ) {
    ++t.checked;
    auto const inner = full_spectrum( principal_submatrix( a, rows ) );
    if ( !interlacing_check( outer, inner ) )
      t.violations.push_back( "rows " + Json( rows ).dump() + " violate interlacing" );
  };
  detail::Tally t;
  if ( exhaustive )
  {
    t = detail::parallel_reduce<detail::Tally>(
        ( std::uint64_t{ 1 } << dim ) - 1, opt.jobs,
        [&]( std::uint64_t begin, std::uint64_t end ) {
          detail::Tally part;
          for ( std::uint64_t s = begin + 1; s <= end; ++s )
          {
            std::vector<std::size_t> rows;
            for ( std::size_t v = 0; v < dim; ++v )
              if ( ( s >> v ) & 1 )
                rows.push_back( v );
            check( rows, part );
          }
          return part;
        },
        detail::fold_tally );
  }
  else
  {
    std::mt19937_64 rng( opt.seed );
    std::vector<std::vector<std::size_t>> picks;
    std::size_t const max_size = std::min<std::size_t>( full_spectrum_cap, dim );
    for ( std::uint64_t i = 0; i < opt.samples; ++i )
    {
      std::size_t const size = 1 + detail::uniform_below( rng, max_size );
      auto vs = detail::random_vertex_subset( n, size, rng );
      picks.emplace_back( vs.begin(), vs.end() );
    }
    t = detail::parallel_reduce<detail::Tally>(
        picks.size(), opt.jobs,
        [&]( std::uint64_t begin, std::uint64_t end ) {
          detail::Tally part;
          for ( auto i = begin; i < end; ++i )
            check( picks[i], part );
          return part;
        },
        detail::fold_tally );
  }
  return detail::finish( "interlacing", n, exhaustive, opt, std::move( t ), clock );
}

/// Parseval, the influence/Fourier-weight identity and total influence <= deg.
inline CampaignReport verify_fourier( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::FunctionStream stream( n, opt );
  auto work = [&]( std::uint64_t begin, std::uint64_t end ) {
    detail::Tally t;
    stream.for_range( begin, end, [&]( BooleanFunction const& f ) {
      ++t.checked;
      auto const ft = fourier( f );
      if ( std::abs( ft.total_weight() - 1.0 ) > 1e-12 )
        t.violations.push_back( detail::describe( f ) + " Parseval" );
      double weighted = 0.0;
      for ( std::size_t s = 0; s < ft.coefficients().size(); ++s )
        weighted += std::popcount( s ) * ft.coefficients()[s] * ft.coefficients()[s];
      double const inf = total_influence( f );
      if ( std::abs( inf - weighted ) > 1e-12 )
        t.violations.push_back( detail::describe( f ) + " sum Inf_i != sum |S| fhat(S)^2" );
      if ( inf > degree( f ) + 1e-12 )
        t.violations.push_back( detail::describe( f ) + " sum Inf_i > deg" );
    } );
    return t;
  };
  auto t = detail::parallel_reduce<detail::Tally>( stream.size(), opt.jobs, work, detail::fold_tally );
  return detail::finish( "fourier", n, stream.exhaustive(), opt, std::move( t ), clock );
}

/// Finite checks behind the cube lower bounds: every (2^{n-1}+1)-vertex subgraph has max degree
/// above (1/2)log n - (1/2)log log n + 1/2 (logs base 2; n <= 4 exhaustive), and every nonempty
/// subgraph has at least 2^(average degree) vertices (all subsets for n <= 3, sampled above).
inline CampaignReport verify_cube_bounds( int n, CampaignOptions const& opt = {} )
{
  detail::Stopwatch clock;
  detail::Tally t;
  std::size_t const points = std::size_t{ 1 } << n;
  bool const exhaustive = n <= 3;
  auto check_size = [&]( InducedSubgraph const& g ) {
    ++t.checked;
    if ( g.empty() )
      return;
    if ( static_cast<double>( g.size() ) < std::exp2( g.average_degree() ) - 1e-9 )
      t.violations.push_back( "|V| < 2^avgdeg for " + Json( g.vertices() ).dump() );
  };
  if ( exhaustive )
  {
    for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << points ); ++s )
    {
      BitTable bt( points );
      bt.mutable_words()[0] = s;
      check_size( InducedSubgraph( n, std::move( bt ) ) );
    }
  }
  else
  {
    std::mt19937_64 rng( opt.seed );
    for ( std::uint64_t i = 0; i < opt.samples; ++i )
    {
      BitTable bt( points );
      for ( auto& w : bt.mutable_words() )
        w = rng();
      if ( points % 64 )
        bt.mutable_words().back() &= ( std::uint64_t{ 1 } << ( points % 64 ) ) - 1;
      check_size( InducedSubgraph( n, std::move( bt ) ) );
    }
  }
  if ( n >= 2 && n <= huang_exhaustive_cap )
  {
    double const bound = 0.5 * std::log2( double( n ) ) - 0.5 * std::log2( std::log2( double( n ) ) ) + 0.5;
    auto const sizes = min_max_degree_by_size( n );
    int const worst = sizes[points / 2 + 1];
    t.counts["log_bound_subsets_min_degree"] = static_cast<std::uint64_t>( worst );
    if ( !( worst > bound ) )
      t.violations.push_back( "log lower bound fails: min max degree " + std::to_string( worst ) );
  }
  return detail::finish( "cube", n, exhaustive, opt, std::move( t ), clock );
}

inline std::vector<std::string> campaign_names()
{
  return { "chain", "ratio", "g", "gl", "huang", "chung", "interlacing", "fourier", "cube" };
}

inline CampaignReport run_campaign( std::string const& name, int n, CampaignOptions const& opt = {} )
{
  if ( name == "chain" )
    return verify_chain( n, opt );
  if ( name == "ratio" )
    return extremal_ratio( n, opt );
  if ( name == "g" )
    return verify_g( n, opt );
  if ( name == "gl" )
    return verify_gl_equivalence( n, opt );
  if ( name == "huang" )
    return verify_huang( n, opt );
  if ( name == "chung" )
    return verify_chung( n, opt );
  if ( name == "interlacing" )
    return verify_interlacing( n, opt );
  if ( name == "fourier" )
    return verify_fourier( n, opt );
  if ( name == "cube" )
    return verify_cube_bounds( n, opt );
  throw InvalidInput( "unknown campaign '" + name + "'" );
}

} // namespace boolsens
