#pragma once

#include <vector>

#include "lnr/geometry.hpp"

namespace lnr {

/// Result of the dense sphere search for min F(v) = sum_i |e_i . v|.
struct OracleResult {
  double L_est = 0.0;
  UnitVec3 argmin;
  double resolution = 0.0;  // final local grid step, radians
  bool refined = false;
  std::vector<double> stage_best;  // best value after the coarse pass and each round
};

struct VertexCheckReport {
  double vertex_min = 0.0;
  double global_min = 0.0;
  bool agrees = false;
};

/// Minimize F over a latitude-longitude grid (longitude step scaled by
/// 1/sin(theta), poles sampled explicitly), then refine with two rounds of
/// 10x finer local grids around the best cells. coarse_step in [1e-3, 0.1].
OracleResult sphere_min_bruteforce(const UnitVec3& e1, const UnitVec3& e2,
                                   const UnitVec3& e3, double coarse_step = 0.02);

/// Compare min F over the six normalized pairwise cross products against the
/// dense-search minimum; they agree when the gap is within 5e-3. Throws for
/// linearly dependent inputs.
VertexCheckReport vertex_minimum_check(const UnitVec3& e1, const UnitVec3& e2,
                                       const UnitVec3& e3);

}  // namespace lnr
