#pragma once

#include "../multilinear.hpp"

namespace boolsens
{

/// Degree of the unique multilinear representation; constants (including 0) have degree 0.
inline int degree( BooleanFunction const& f ) { return multilinear_coeffs( f ).degree(); }

} // namespace boolsens
