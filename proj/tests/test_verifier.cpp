#include <boolsens/constructions.hpp>
#include <boolsens/truth_table_io.hpp>
#include <boolsens/verifier.hpp>

#include <gtest/gtest.h>

using namespace boolsens;

TEST( Chain, ExhaustiveSmallCases )
{
  std::uint64_t const expected[] = { 2, 4, 16, 256 };
  for ( int n = 0; n <= 3; ++n )
  {
    auto const r = verify_chain( n );
    EXPECT_TRUE( r.passed() );
    EXPECT_EQ( r.checked, expected[n] );
    EXPECT_EQ( r.counts.at( "constant" ), 2u );
    EXPECT_TRUE( r.exhaustive );
    EXPECT_FALSE( r.seed );
  }
}

TEST( Chain, SampledAboveFourIsSeeded )
{
  CampaignOptions opt;
  opt.samples = 20;
  opt.seed = 42;
  auto const r = verify_chain( 5, opt );
  EXPECT_TRUE( r.passed() );
  EXPECT_FALSE( r.exhaustive );
  EXPECT_EQ( r.seed, 42u );
  EXPECT_EQ( r.checked, 20u );
  EXPECT_EQ( dump( to_json( r ) ), dump( to_json( verify_chain( 5, opt ) ) ) );
}

TEST( Determinism, ParallelRunsMatchSerial )
{
  CampaignOptions serial, parallel;
  parallel.jobs = 4;
  for ( auto name : { "chain", "ratio", "gl", "huang", "fourier" } )
    EXPECT_EQ( dump( to_json( run_campaign( name, 3, serial ) ) ), dump( to_json( run_campaign( name, 3, parallel ) ) ) ) << name;
  serial.samples = parallel.samples = 50;
  serial.seed = parallel.seed = 9;
  for ( auto name : { "huang", "interlacing" } )
    EXPECT_EQ( dump( to_json( run_campaign( name, 5, serial ) ) ), dump( to_json( run_campaign( name, 5, parallel ) ) ) ) << name;
  EXPECT_EQ( dump( to_json( run_campaign( "chain", 5, serial ) ) ), dump( to_json( run_campaign( "chain", 5, parallel ) ) ) );
}

TEST( Determinism, DifferentSeedsDrawDifferentSamples )
{
  CampaignOptions a, b;
  a.samples = b.samples = 5;
  a.seed = 1;
  b.seed = 2;
  auto const ra = to_json( verify_huang( 5, a ) );
  auto const rb = to_json( verify_huang( 5, b ) );
  EXPECT_NE( ra["seed"], rb["seed"] );
}

TEST( Ratio, WitnessIsReproducible )
{
  auto const r = extremal_ratio( 2 );
  EXPECT_EQ( r.checked, 14u );
  EXPECT_EQ( r.counts.at( "constant_skipped" ), 2u );
  auto const& w = r.witnesses.at( "max_ratio" );
  auto const f = from_hex( 2, w.at( "table" ).get<std::string>() );
  EXPECT_EQ( sensitivity( f ), w.at( "s" ).get<int>() );
  EXPECT_EQ( block_sensitivity( f ), w.at( "bs" ).get<int>() );
  EXPECT_DOUBLE_EQ( w.at( "ratio" ).get<double>(), 1.0 );
}

TEST( Ratio, FourVariablesIncludesRubinstein )
{
  auto const r = extremal_ratio( 4 );
  EXPECT_EQ( r.checked, 65534u );
  EXPECT_DOUBLE_EQ( r.witnesses.at( "rubinstein_k2" ).at( "ratio" ).get<double>(), 0.5 );
  EXPECT_GE( r.witnesses.at( "max_ratio" ).at( "ratio" ).get<double>(), 0.5 );
}

TEST( GFunction, Examples )
{
  EXPECT_EQ( compute_g( 2, 1 ).t, 3 );
  EXPECT_EQ( compute_g( 2, std::sqrt( 2.0 ) ).t, 3 );
  EXPECT_EQ( compute_g( 3, 2 ).t, 5 );
  EXPECT_EQ( compute_g( 3, std::sqrt( 3.0 ) ).t, 5 );
  EXPECT_EQ( compute_g( 3, 3 ).t, 7 );
  EXPECT_EQ( compute_g( 4, 2 ).t, 9 );
  EXPECT_FALSE( compute_g( 2, 3 ).t );
  EXPECT_EQ( compute_g( 2, 0 ).t, 0 );
  EXPECT_THROW( compute_g( 5, 2 ), CapExceeded );
  for ( int n = 1; n <= 4; ++n )
  {
    auto const r = verify_g( n );
    EXPECT_TRUE( r.passed() );
    EXPECT_EQ( r.witnesses.at( "g_sqrt_n" ), ( 1 << ( n - 1 ) ) + 1 );
  }
}

TEST( Campaigns, UnknownNameIsInputError )
{
  EXPECT_THROW( run_campaign( "nope", 3 ), InvalidInput );
  EXPECT_EQ( campaign_names().size(), 9u );
}

TEST( Campaigns, ReportJsonShape )
{
  auto const j = to_json( verify_chung( 9 ) );
  EXPECT_EQ( j["campaign"], "chung" );
  EXPECT_EQ( j["witnesses"]["x_size"], 255 );
  EXPECT_EQ( j["passed"], true );
  EXPECT_FALSE( j.contains( "duration_seconds" ) );
  EXPECT_TRUE( to_json( verify_chung( 9 ), true ).contains( "duration_seconds" ) );
  auto const text = summary_table( j );
  EXPECT_NE( text.find( "x_size" ), std::string::npos );
  EXPECT_NE( text.find( "PASS" ), std::string::npos );
}

TEST( Campaigns, ViolationsAreCollectedNotThrown )
{
  detail::Tally a, b;
  a.violations = { "first" };
  b.violations = { "second", "third" };
  b.counts["x"] = 2;
  a.merge( std::move( b ) );
  EXPECT_EQ( a.violations, ( std::vector<std::string>{ "first", "second", "third" } ) );
  EXPECT_EQ( a.counts.at( "x" ), 2u );
}
