#pragma once

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace boolsens
{

using Json = nlohmann::json; // std::map-backed, so keys serialize in sorted order

/// Rounds to 12 significant digits so serialized floats are stable across platforms.
inline double stable_double( double v )
{
  char buf[40];
  std::snprintf( buf, sizeof buf, "%.12g", v );
  double const r = std::strtod( buf, nullptr );
  return r == 0.0 ? 0.0 : r;
}

inline std::string format_double( double v )
{
  char buf[40];
  std::snprintf( buf, sizeof buf, "%.12g", stable_double( v ) );
  return buf;
}

/// Variable mask as a sorted list of 1-based indices.
inline Json var_list( std::uint64_t mask )
{
  Json out = Json::array();
  for ( int j = 0; mask >> j; ++j )
    if ( ( mask >> j ) & 1 )
      out.push_back( j + 1 );
  return out;
}

inline std::string dump( Json const& j ) { return j.dump( 2 ) + "\n"; }

} // namespace boolsens
