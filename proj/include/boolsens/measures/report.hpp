#pragma once

#include "../json_format.hpp"
#include "approx_degree.hpp"
#include "block_sensitivity.hpp"
#include "caps.hpp"
#include "certificate.hpp"
#include "decision_tree.hpp"
#include "degree.hpp"
#include "sensitivity.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace boolsens
{

enum class Measure
{
  s,
  bs,
  c,
  d,
  deg,
  approx_deg
};

inline constexpr Measure all_measures[] = { Measure::s, Measure::bs, Measure::c, Measure::d, Measure::deg, Measure::approx_deg };

inline char const* measure_name( Measure m )
{
  switch ( m )
  {
  case Measure::s: return "s";
  case Measure::bs: return "bs";
  case Measure::c: return "c";
  case Measure::d: return "d";
  case Measure::deg: return "deg";
  case Measure::approx_deg: return "approx_deg";
  }
  return "?";
}

inline Measure parse_measure( std::string const& name )
{
  for ( auto m : all_measures )
    if ( name == measure_name( m ) )
      return m;
  throw InvalidInput( "unknown measure '" + name + "' (expected s, bs, c, d, deg, approx_deg)" );
}

inline std::vector<Measure> parse_measure_list( std::string const& csv )
{
  std::vector<Measure> out;
  std::stringstream ss( csv );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
    if ( !item.empty() )
      out.push_back( parse_measure( item ) );
  if ( out.empty() )
    throw InvalidInput( "empty measure list" );
  return out;
}

/// Cap governing the full (max over all points) computation of a measure; -1 when uncapped.
inline int measure_cap( Measure m, MeasureCaps const& caps )
{
  switch ( m )
  {
  case Measure::bs: return caps.block_sensitivity_full;
  case Measure::c: return caps.certificate_full;
  case Measure::d: return caps.decision_tree;
  case Measure::approx_deg: return caps.approx_degree;
  default: return -1;
  }
}

struct MeasureReport
{
  int n = 0;
  std::optional<int> s, bs, c, d, deg, approx_deg;
  std::optional<PointMeasure> s_witness;
  std::optional<BlockSensitivityResult> bs_witness;
  std::optional<CertificateResult> c_witness;
  std::optional<double> approx_error;
  MeasureCaps caps;
  std::vector<std::string> skipped; ///< measures left out because n exceeded their cap
};

/// Computes the requested measures. With no explicit request every measure within its cap is
/// computed and the rest are listed in `skipped`; an explicit request above a cap throws.
inline MeasureReport measure_report( BooleanFunction const& f, std::optional<std::vector<Measure>> only = std::nullopt,
                                     MeasureCaps const& caps = {} )
{
  MeasureReport r;
  r.n = f.num_vars();
  r.caps = caps;
  std::vector<Measure> wanted;
  if ( only )
    wanted = *only;
  else
    for ( auto m : all_measures )
    {
      int const cap = measure_cap( m, caps );
      if ( cap >= 0 && f.num_vars() > cap )
        r.skipped.push_back( measure_name( m ) );
      else
        wanted.push_back( m );
    }

  auto has = [&]( Measure m ) { return std::find( wanted.begin(), wanted.end(), m ) != wanted.end(); };
  for ( auto m : wanted )
  {
    int const cap = measure_cap( m, caps );
    if ( cap >= 0 )
      check_cap( measure_name( m ), f.num_vars(), cap );
  }

  if ( has( Measure::s ) )
  {
    r.s_witness = sensitivity_with_witness( f );
    r.s = r.s_witness->value;
  }
  if ( has( Measure::bs ) )
  {
    r.bs_witness = block_sensitivity_with_witness( f, caps );
    r.bs = r.bs_witness->value;
  }
  if ( has( Measure::c ) )
  {
    r.c_witness = certificate_complexity_with_witness( f, caps );
    r.c = r.c_witness->value;
  }
  if ( has( Measure::d ) )
    r.d = decision_tree_depth( f, caps );
  if ( has( Measure::deg ) )
    r.deg = degree( f );
  if ( has( Measure::approx_deg ) )
  {
    auto const a = approx_degree_with_witness( f, caps );
    r.approx_deg = a.degree;
    r.approx_error = a.error;
  }
  return r;
}

inline Json to_json( MeasureReport const& r )
{
  auto opt = []( std::optional<int> const& v ) -> Json { return v ? Json( *v ) : Json( nullptr ); };
  Json w = Json::object();
  if ( r.s_witness )
    w["s"] = { { "point", r.s_witness->witness } };
  if ( r.bs_witness )
  {
    Json blocks = Json::array();
    for ( auto b : r.bs_witness->blocks )
      blocks.push_back( var_list( b ) );
    w["bs"] = { { "point", r.bs_witness->witness }, { "blocks", blocks } };
  }
  if ( r.c_witness )
    w["c"] = { { "point", r.c_witness->witness }, { "certificate", var_list( r.c_witness->certificate ) } };
  if ( r.approx_error )
    w["approx_deg"] = { { "error", stable_double( *r.approx_error ) } };

  Json caps = { { "block_sensitivity_point", r.caps.block_sensitivity_point },
                { "block_sensitivity_full", r.caps.block_sensitivity_full },
                { "certificate_point", r.caps.certificate_point },
                { "certificate_full", r.caps.certificate_full },
                { "decision_tree", r.caps.decision_tree },
                { "approx_degree", r.caps.approx_degree },
                { "skipped", r.skipped } };

  return { { "n", r.n },       { "s", opt( r.s ) },     { "bs", opt( r.bs ) },
           { "c", opt( r.c ) }, { "d", opt( r.d ) },     { "deg", opt( r.deg ) },
           { "approx_deg", opt( r.approx_deg ) },       { "witnesses", w },
           { "caps", caps } };
}

} // namespace boolsens
