#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace boolsens;

namespace
{

struct Run
{
  int code;
  std::string out, err;
};

Run run( std::vector<std::string> args )
{
  args.insert( args.begin(), "boolsens" );
  std::ostringstream out, err;
  int const code = cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::filesystem::path temp_file( std::string const& name )
{
  return std::filesystem::temp_directory_path() / ( "boolsens_test_" + name );
}

} // namespace

TEST( Cli, MeasureExpression )
{
  auto const r = run( { "measure", "-e", "x1 & x2", "-n", "2" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const j = Json::parse( r.out );
  EXPECT_EQ( j["s"], 2 );
  EXPECT_EQ( j["bs"], 2 );
  EXPECT_EQ( j["c"], 2 );
  EXPECT_EQ( j["d"], 2 );
  EXPECT_EQ( j["deg"], 2 );
}

TEST( Cli, MeasureFamilyWithOnly )
{
  auto const r = run( { "measure", "--family", "rubinstein", "--k", "4", "--only", "s" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const j = Json::parse( r.out );
  EXPECT_EQ( j["s"], 4 );
  EXPECT_EQ( j["bs"], nullptr );
  EXPECT_EQ( run( { "measure", "--family", "e3", "--depth", "2", "--only", "deg" } ).out.find( "\"deg\": 4" ) != std::string::npos,
             true );
  EXPECT_EQ( Json::parse( run( { "measure", "--family", "parity", "-n", "3", "--only", "s" } ).out )["s"], 3 );
}

TEST( Cli, MeasureSyntaxErrorIsInputError )
{
  auto const r = run( { "measure", "-e", "x1 &", "-n", "2" } );
  EXPECT_EQ( r.code, 2 );
  EXPECT_NE( r.err.find( "position 4" ), std::string::npos );
  EXPECT_TRUE( r.out.empty() );
}

TEST( Cli, MeasureInputErrors )
{
  EXPECT_EQ( run( { "measure", "-e", "x1" } ).code, 2 );                                      // no -n
  EXPECT_EQ( run( { "measure", "-n", "2" } ).code, 2 );                                       // no source
  EXPECT_EQ( run( { "measure", "-e", "x1", "-n", "1", "--family", "and" } ).code, 2 );        // two sources
  EXPECT_EQ( run( { "measure", "--family", "rubinstein" } ).code, 2 );                        // missing --k
  EXPECT_EQ( run( { "measure", "--family", "rubinstein", "--k", "3" } ).code, 2 );            // odd k
  EXPECT_EQ( run( { "measure", "--tt", "/nonexistent/file" } ).code, 2 );
  EXPECT_EQ( run( { "measure", "-e", "x1", "-n", "1", "--only", "zz" } ).code, 2 );
  EXPECT_EQ( run( { "measure", "--bogus" } ).code, 2 );
  EXPECT_EQ( run( {} ).code, 2 );
}

TEST( Cli, MeasureCapViolation )
{
  auto const r = run( { "measure", "--family", "rubinstein", "--k", "4", "--only", "bs" } );
  EXPECT_EQ( r.code, 3 );
  EXPECT_NE( r.err.find( "exceeds cap" ), std::string::npos );
}

TEST( Cli, MeasureTruthTableFileAndOutFile )
{
  auto const tt = temp_file( "and.tt" );
  std::ofstream( tt ) << "2\n8\n";
  auto const out = temp_file( "report.json" );
  auto const r = run( { "measure", "--tt", tt.string(), "--out", out.string() } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_TRUE( r.out.empty() );
  std::ifstream in( out );
  auto const j = Json::parse( in );
  EXPECT_EQ( j["s"], 2 );
  EXPECT_EQ( run( { "measure", "--tt", tt.string(), "-n", "3" } ).code, 2 );
  std::filesystem::remove( tt );
  std::filesystem::remove( out );
}

TEST( Cli, HuangCheckSquare )
{
  auto const r = run( { "huang", "-n", "3", "--check-square" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "A\xC2\xB2=3I: PASS\n" );
}

TEST( Cli, HuangSubmatrix )
{
  auto const r = run( { "huang", "-n", "2", "--submatrix", "0,1,2" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const j = Json::parse( r.out );
  EXPECT_NEAR( j["lambda1"].get<double>(), std::sqrt( 2.0 ), 1e-9 );
  EXPECT_EQ( j["max_degree"], 2 );
  EXPECT_EQ( run( { "huang", "-n", "2", "--submatrix", "0,9" } ).code, 2 );
  EXPECT_EQ( run( { "huang", "-n", "2", "--submatrix", "0,x" } ).code, 2 );
}

TEST( Cli, HuangSubgraphFileAndMatrixExport )
{
  auto const sub = temp_file( "sub.txt" );
  std::ofstream( sub ) << "2\n0\n1\n2\n";
  auto const r = run( { "huang", "-n", "2", "--subgraph", sub.string() } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_NEAR( Json::parse( r.out )["lambda1"].get<double>(), std::sqrt( 2.0 ), 1e-9 );
  EXPECT_EQ( run( { "huang", "-n", "3", "--subgraph", sub.string() } ).code, 2 );
  auto const mat = temp_file( "a2.txt" );
  auto const m = run( { "huang", "-n", "2", "--matrix-out", mat.string() } );
  ASSERT_EQ( m.code, 0 );
  std::ifstream in( mat );
  std::string text( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  EXPECT_EQ( text, "4\n0 1 1 0\n1 0 0 1\n1 0 0 -1\n0 1 -1 0\n" );
  std::filesystem::remove( sub );
  std::filesystem::remove( mat );
}

TEST( Cli, HuangSpectrumReport )
{
  auto const r = run( { "huang", "-n", "8" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const j = Json::parse( r.out );
  EXPECT_EQ( j["spectrum_source"], "implied" );
  EXPECT_EQ( j["spectrum"]["eigenvalues"][0]["multiplicity"], 128 );
  auto const small = Json::parse( run( { "huang", "-n", "3" } ).out );
  EXPECT_EQ( small["spectrum_source"], "computed" );
  EXPECT_EQ( small["spectrum"]["trace"], 0.0 );
}

TEST( Cli, HuangCap )
{
  EXPECT_EQ( run( { "huang", "-n", "13" } ).code, 3 );
  EXPECT_EQ( run( { "huang", "-n", "0" } ).code, 2 );
}

TEST( Cli, VerifyCampaigns )
{
  auto const chain = run( { "verify", "chain", "-n", "3" } );
  ASSERT_EQ( chain.code, 0 ) << chain.err;
  auto const j = Json::parse( chain.out );
  EXPECT_EQ( j["checked"], 256 );
  EXPECT_TRUE( j["violations"].empty() );
  auto const huang = Json::parse( run( { "verify", "huang", "-n", "4", "--jobs", "2" } ).out );
  EXPECT_EQ( huang["checked"], 11440 );
  EXPECT_TRUE( huang["violations"].empty() );
  auto const chung = Json::parse( run( { "verify", "chung", "-n", "9" } ).out );
  EXPECT_EQ( chung["witnesses"]["x_size"], 255 );
  EXPECT_EQ( chung["passed"], true );
  auto const g = Json::parse( run( { "verify", "g", "-n", "3", "--k", "2" } ).out );
  EXPECT_EQ( g["witnesses"]["g_at_k"]["g"], 5 );
  auto const table = run( { "verify", "chung", "-n", "4", "--table" } );
  EXPECT_NE( table.out.find( "result" ), std::string::npos );
}

TEST( Cli, VerifyIsByteIdenticalAcrossRunsAndJobs )
{
  auto const a = run( { "verify", "huang", "-n", "5", "--seed", "3", "--samples", "40" } );
  auto const b = run( { "verify", "huang", "-n", "5", "--seed", "3", "--samples", "40", "--jobs", "3" } );
  EXPECT_EQ( a.code, 0 );
  EXPECT_EQ( a.out, b.out );
}

TEST( Cli, VerifyErrors )
{
  EXPECT_EQ( run( { "verify", "nope", "-n", "3" } ).code, 2 );
  EXPECT_EQ( run( { "verify", "chain" } ).code, 2 );
  EXPECT_EQ( run( { "verify", "g", "-n", "5" } ).code, 3 );
  EXPECT_EQ( run( { "verify", "chain", "-n", "3", "--jobs", "0" } ).code, 2 );
}

TEST( Cli, HelpExitsZero )
{
  auto const r = run( { "--help" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_NE( r.out.find( "measure" ), std::string::npos );
}

TEST( Cli, ExitCodeMapping )
{
  std::ostringstream err;
  EXPECT_EQ( cli::guarded( [] { return 0; }, err ), cli::ok );
  EXPECT_EQ( cli::guarded( []() -> int { throw InvalidInput( "bad" ); }, err ), cli::input_error );
  EXPECT_EQ( cli::guarded( []() -> int { throw CapExceeded( "op", 30, 24 ); }, err ), cli::cap_exceeded );
  EXPECT_EQ( cli::guarded( []() -> int { throw NoConvergence( "stuck" ); }, err ), cli::numerical_failure );
  EXPECT_NE( err.str().find( "stuck" ), std::string::npos );
  CampaignReport failing;
  failing.violations.push_back( "x" );
  EXPECT_EQ( cli::campaign_exit_code( failing ), cli::violations );
  EXPECT_EQ( cli::campaign_exit_code( CampaignReport{} ), cli::ok );
}
