#pragma once

#include "../boolean_function.hpp"
#include "caps.hpp"

#include <algorithm>
#include <unordered_map>

namespace boolsens
{

/// Minimum decision-tree depth, D(f) = 1 + min_i max_b D(f|x_i=b), memoized on the truth table of
/// each subfunction so different restriction orders that reach the same table are solved once.
/// The memo can be kept across calls on different functions.
class DecisionTreeSolver
{
public:
  explicit DecisionTreeSolver( MeasureCaps caps = {} ) : caps_( caps ) {}

  int depth( BooleanFunction const& f )
  {
    check_cap( "decision_tree_depth", f.num_vars(), caps_.decision_tree );
    return solve( f );
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

private:
  int solve( BooleanFunction const& f )
  {
    if ( f.is_constant() )
      return 0;
    if ( auto it = memo_.find( f ); it != memo_.end() )
      return it->second;
    int best = f.num_vars();
    for ( int var = 1; var <= f.num_vars() && best > 1; ++var )
    {
      auto const lo = restrict( f, var, false );
      auto const hi = restrict( f, var, true );
      if ( lo == hi )
        continue; // irrelevant variable; querying it never helps
      int const d0 = solve( lo );
      if ( 1 + d0 >= best )
        continue;
      int const d1 = solve( hi );
      best = std::min( best, 1 + std::max( d0, d1 ) );
    }
    memo_.emplace( f, best );
    return best;
  }

  MeasureCaps caps_;
  std::unordered_map<BooleanFunction, int> memo_;
};

inline int decision_tree_depth( BooleanFunction const& f, MeasureCaps const& caps = {} )
{
  return DecisionTreeSolver( caps ).depth( f );
}

} // namespace boolsens
