#pragma once

namespace boolsens
{

/// Largest variable counts each exact measure algorithm accepts.
struct MeasureCaps
{
  int block_sensitivity_point = 16;
  int block_sensitivity_full = 12;
  int certificate_point = 16;
  int certificate_full = 12;
  int decision_tree = 10;
  int approx_degree = 6;
};

} // namespace boolsens
