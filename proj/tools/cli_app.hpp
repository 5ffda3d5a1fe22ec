#pragma once

#include <boolsens/boolsens.hpp>

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace boolsens::cli
{

/// Exit codes.
enum ExitCode : int
{
  ok = 0,
  violations = 1, ///< a verification campaign reported violations
  input_error = 2,
  cap_exceeded = 3,
  numerical_failure = 4,
};

namespace detail
{

inline std::vector<std::uint64_t> parse_index_csv( std::string const& csv )
{
  std::vector<std::uint64_t> out;
  std::stringstream ss( csv );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    std::size_t used = 0;
    unsigned long long v = 0;
    try
    {
      v = std::stoull( item, &used );
    }
    catch ( std::exception const& )
    {
      used = 0;
    }
    if ( used == 0 || used != item.size() || item.front() == '-' )
      throw InvalidInput( "bad vertex index '" + item + "' in list" );
    out.push_back( v );
  }
  if ( out.empty() )
    throw InvalidInput( "empty vertex list" );
  return out;
}

inline void emit( std::string const& text, std::string const& path, std::ostream& out )
{
  if ( path.empty() )
  {
    out << text;
    return;
  }
  std::ofstream file( path, std::ios::binary );
  if ( !file || !( file << text ) )
    throw InvalidInput( "cannot write '" + path + "'" );
}

struct FunctionSource
{
  std::string expression;
  std::string table_file;
  std::string family;
  std::optional<int> n, k, depth;

  BooleanFunction load() const
  {
    int const sources = !expression.empty() + !table_file.empty() + !family.empty();
    if ( sources != 1 )
      throw InvalidInput( "give exactly one of -e, --tt, --family" );
    if ( !expression.empty() )
    {
      if ( !n )
        throw InvalidInput( "-e needs -n" );
      return parse_expression( expression, *n );
    }
    if ( !table_file.empty() )
    {
      auto f = read_truth_table_file( table_file );
      if ( n && *n != f.num_vars() )
        throw InvalidInput( "-n disagrees with the truth-table file" );
      return f;
    }
    if ( family == "e3" || family == "e3_tree" )
    {
      if ( !depth )
        throw InvalidInput( "family e3 needs --depth" );
      return make_family( family, *depth );
    }
    if ( family == "rubinstein" || family == "and_of_ors" || family == "and-of-ors" )
    {
      if ( !k )
        throw InvalidInput( "family " + family + " needs --k" );
      return make_family( family, *k );
    }
    if ( family == "dictator" )
    {
      if ( !n || !k )
        throw InvalidInput( "family dictator needs -n and --k (the variable)" );
      return dictator_f( *n, *k );
    }
    auto const size = n ? n : k;
    if ( !size )
      throw InvalidInput( "family " + family + " needs -n" );
    return make_family( family, *size );
  }
};

} // namespace detail

/// Runs body() and maps library exceptions to exit codes, writing the message to `err`.
template<typename Body>
int guarded( Body&& body, std::ostream& err )
{
  try
  {
    return body();
  }
  catch ( CapExceeded const& e )
  {
    err << "error: " << e.what() << "\n";
    return cap_exceeded;
  }
  catch ( std::invalid_argument const& e )
  {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  catch ( NoConvergence const& e )
  {
    err << "error: " << e.what() << "\n";
    return numerical_failure;
  }
}

inline int campaign_exit_code( CampaignReport const& r ) { return r.passed() ? ok : violations; }

/// Runs the command line; argv[0] is the program name. Output goes to `out`, diagnostics to `err`.
inline int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Boolean function complexity measures, hypercube constructions and verification campaigns",
                args.empty() ? "boolsens" : args.front() };
  app.require_subcommand( 1 );

  detail::FunctionSource source;
  std::string only, out_path;
  auto* measure = app.add_subcommand( "measure", "Compute complexity measures of one function (JSON)" );
  measure->add_option( "-e,--expr", source.expression, "Expression over x1..xn with ! & | ^, 0, 1 and parentheses" );
  measure->add_option( "-n", source.n, "Number of variables" );
  measure->add_option( "--tt", source.table_file, "Truth-table file (line 1: n, line 2: hex table)" );
  measure->add_option( "--family", source.family, "and | or | parity | dictator | and_of_ors | rubinstein | e3" );
  measure->add_option( "--k", source.k, "Family parameter k" );
  measure->add_option( "--depth", source.depth, "Tree depth for e3" );
  measure->add_option( "--only", only, "Comma-separated subset of s,bs,c,d,deg,approx_deg" );
  measure->add_option( "--out", out_path, "Write the report here instead of standard output" );

  int huang_n = 0;
  bool check_square = false;
  std::string submatrix, subgraph_file, matrix_out;
  auto* huang = app.add_subcommand( "huang", "Signed hypercube matrix A_n: square check, spectrum, submatrix lambda1" );
  huang->add_option( "-n", huang_n, "Dimension" )->required();
  huang->add_flag( "--check-square", check_square, "Check A^2 = nI in integer arithmetic" );
  huang->add_option( "--submatrix", submatrix, "Comma-separated vertex indices of an induced subgraph" );
  huang->add_option( "--subgraph", subgraph_file, "Subgraph file (line 1: n, then one vertex per line)" );
  huang->add_option( "--matrix-out", matrix_out, "Write A_n in the dense text format" );
  huang->add_option( "--out", out_path, "Write the report here instead of standard output" );

  std::string campaign;
  int verify_n = 0;
  CampaignOptions options;
  std::optional<double> g_k;
  bool table = false;
  auto* verify = app.add_subcommand( "verify", "Run a verification campaign (JSON report)" );
  verify->add_option( "campaign", campaign, "chain | ratio | g | gl | huang | chung | interlacing | fourier | cube" )
      ->required();
  verify->add_option( "-n", verify_n, "Dimension" )->required();
  verify->add_option( "--seed", options.seed, "Seed for sampled campaigns" );
  verify->add_option( "--samples", options.samples, "Sample count for sampled campaigns" );
  verify->add_option( "--jobs", options.jobs, "Worker threads" )->check( CLI::PositiveNumber );
  verify->add_option( "--k", g_k, "Degree threshold for the g campaign" );
  verify->add_flag( "--table", table, "Print the plain-text summary instead of JSON" );
  verify->add_option( "--out", out_path, "Write the report here instead of standard output" );

  std::vector<char const*> argv;
  argv.push_back( args.empty() ? "boolsens" : args.front().c_str() );
  for ( std::size_t i = 1; i < args.size(); ++i )
    argv.push_back( args[i].c_str() );

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e, out, err );
    return code == 0 ? ok : input_error;
  }

  return guarded(
      [&]() -> int {
        if ( *measure )
        {
          auto const f = source.load();
          std::optional<std::vector<Measure>> wanted;
          if ( !only.empty() )
            wanted = parse_measure_list( only );
          detail::emit( dump( to_json( measure_report( f, wanted ) ) ), out_path, out );
          return ok;
        }

        if ( *huang )
        {
          auto const a = huang_matrix( huang_n );
          if ( !matrix_out.empty() )
            detail::emit( write_matrix( a ), matrix_out, out );
          if ( check_square )
          {
            bool const pass = square_check( a, huang_n );
            detail::emit( "A\xC2\xB2=" + std::to_string( huang_n ) + "I: " + ( pass ? "PASS" : "FAIL" ) + "\n", out_path, out );
            return pass ? ok : violations;
          }
          double const root = std::sqrt( static_cast<double>( huang_n ) );
          if ( !submatrix.empty() || !subgraph_file.empty() )
          {
            if ( !submatrix.empty() && !subgraph_file.empty() )
              throw InvalidInput( "give only one of --submatrix, --subgraph" );
            auto const h = submatrix.empty() ? read_subgraph_file( subgraph_file )
                                             : InducedSubgraph::from_vertices( huang_n, detail::parse_index_csv( submatrix ) );
            if ( h.dimension() != huang_n )
              throw InvalidInput( "subgraph dimension differs from -n" );
            auto const check = huang_bound_check( h );
            Json j = { { "n", huang_n },
                       { "vertices", h.vertices() },
                       { "lambda1", stable_double( check.lambda1 ) },
                       { "max_degree", check.max_degree },
                       { "sqrt_n", stable_double( root ) },
                       { "degree_dominates", check.degree_dominates },
                       { "large", check.large },
                       { "sqrt_bound", check.large ? Json( check.sqrt_bound ) : Json( nullptr ) } };
            detail::emit( dump( j ), out_path, out );
            return ok;
          }
          bool const implied = a.dim() > full_spectrum_cap;
          auto const eig = implied ? implied_huang_spectrum( a, huang_n ) : full_spectrum( a );
          Json j = { { "n", huang_n },
                     { "dimension", a.dim() },
                     { "square_check", square_check( a, huang_n ) },
                     { "trace", a.trace() },
                     { "spectrum_source", implied ? "implied" : "computed" },
                     { "spectrum", spectrum_json( eig ) } };
          detail::emit( dump( j ), out_path, out );
          return ok;
        }

        if ( *verify )
        {
          auto const names = campaign_names();
          if ( std::find( names.begin(), names.end(), campaign ) == names.end() )
            throw InvalidInput( "unknown campaign '" + campaign + "'" );
          auto report = run_campaign( campaign, verify_n, options );
          if ( g_k && campaign == "g" )
          {
            auto const g = compute_g( verify_n, *g_k );
            report.witnesses["g_at_k"] = { { "k", stable_double( *g_k ) }, { "g", g.t ? Json( *g.t ) : Json( nullptr ) } };
          }
          auto const json = to_json( report );
          detail::emit( table ? summary_table( json ) : dump( json ), out_path, out );
          return campaign_exit_code( report );
        }
        return input_error;
      },
      err );
}

} // namespace boolsens::cli
