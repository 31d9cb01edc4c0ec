#include "lnr/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lnr/bounds.hpp"

namespace lnr {

namespace {

struct Candidate {
  double value;
  Vec3 point;
  bool used = false;
};

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline double eval_sum_abs(const Vec3& e1, const Vec3& e2, const Vec3& e3, const Vec3& v) {
  return std::abs(dot(e1, v)) + std::abs(dot(e2, v)) + std::abs(dot(e3, v));
}

// Octant signature of v with respect to the three great circles e_i . v = 0.
// The sphere minimum sits at a region vertex, so tracking the best sample per
// region keeps every vertex basin among the refinement candidates.
inline unsigned region_of(const Vec3& e1, const Vec3& e2, const Vec3& e3, const Vec3& v) {
  return (dot(e1, v) > 0 ? 1u : 0u) | (dot(e2, v) > 0 ? 2u : 0u) | (dot(e3, v) > 0 ? 4u : 0u);
}

// 21x21 tangent-plane grid of the given step around the center; returns the
// best sampled value/point including the center itself.
Candidate refine_local(const Vec3& e1, const Vec3& e2, const Vec3& e3, const Vec3& center,
                       double step) {
  const Vec3 c = normalized(center);
  const Vec3 helper = std::abs(c.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const Vec3 t1 = normalized(cross(c, helper));
  const Vec3 t2 = cross(c, t1);
  Candidate best{eval_sum_abs(e1, e2, e3, c), c};
  for (int i = -10; i <= 10; ++i) {
    for (int j = -10; j <= 10; ++j) {
      if (i == 0 && j == 0) continue;
      const Vec3 p = normalized(c + step * (static_cast<double>(i) * t1) +
                                step * (static_cast<double>(j) * t2));
      const double f = eval_sum_abs(e1, e2, e3, p);
      if (f < best.value) {
        best = {f, p};
      }
    }
  }
  return best;
}

}  // namespace

OracleResult sphere_min_bruteforce(const UnitVec3& ue1, const UnitVec3& ue2,
                                   const UnitVec3& ue3, double coarse_step) {
  if (!(coarse_step >= 1e-3 && coarse_step <= 0.1)) {
    throw std::out_of_range("sphere_min_bruteforce: coarse_step must lie in [1e-3, 0.1]");
  }
  const Vec3 e1 = ue1.vec(), e2 = ue2.vec(), e3 = ue3.vec();

  std::array<Candidate, 8> region_best;
  region_best.fill({std::numeric_limits<double>::infinity(), {0, 0, 1}, false});
  auto consider = [&](const Vec3& v, double f) {
    Candidate& c = region_best[region_of(e1, e2, e3, v)];
    if (!c.used || f < c.value) {
      c = {f, v, true};
    }
  };

  for (double zsign : {1.0, -1.0}) {
    const Vec3 pole{0.0, 0.0, zsign};
    consider(pole, eval_sum_abs(e1, e2, e3, pole));
  }
  const int n_theta = static_cast<int>(std::ceil(std::numbers::pi / coarse_step));
  for (int i = 1; i < n_theta; ++i) {
    const double theta = static_cast<double>(i) * std::numbers::pi / n_theta;
    const double st = std::sin(theta), ct = std::cos(theta);
    const int n_phi =
        std::max(1, static_cast<int>(std::ceil(2.0 * std::numbers::pi * st / coarse_step)));
    for (int j = 0; j < n_phi; ++j) {
      const double phi =
          -std::numbers::pi + (j + 0.5) * 2.0 * std::numbers::pi / n_phi;
      const Vec3 v{st * std::cos(phi), st * std::sin(phi), ct};
      consider(v, eval_sum_abs(e1, e2, e3, v));
    }
  }

  auto best_of = [](const std::array<Candidate, 8>& cs) {
    const Candidate* best = nullptr;
    for (const Candidate& c : cs) {
      if (c.used && (best == nullptr || c.value < best->value)) best = &c;
    }
    return *best;
  };

  OracleResult result;
  Candidate overall = best_of(region_best);
  result.stage_best.push_back(overall.value);

  double step = coarse_step;
  for (int round = 0; round < 2; ++round) {
    step /= 10.0;
    for (Candidate& c : region_best) {
      if (!c.used) continue;
      const Candidate refined = refine_local(e1, e2, e3, c.point, step);
      c.value = refined.value;
      c.point = refined.point;
      if (refined.value < overall.value) overall = refined;
    }
    result.stage_best.push_back(overall.value);
  }

  result.L_est = overall.value;
  result.argmin = UnitVec3(overall.point);
  result.resolution = step;
  result.refined = true;
  return result;
}

VertexCheckReport vertex_minimum_check(const UnitVec3& e1, const UnitVec3& e2,
                                       const UnitVec3& e3) {
  if (std::abs(triple_product(e1, e2, e3)) < linear_dependence_tol) {
    throw std::domain_error("vertex_minimum_check: inputs are linearly dependent");
  }
  const std::array<Vec3, 3> crosses{cross(e2, e3), cross(e3, e1), cross(e1, e2)};
  double vertex_min = std::numeric_limits<double>::infinity();
  for (const Vec3& c : crosses) {
    for (double sign : {1.0, -1.0}) {
      const Vec3 v = normalized(sign * c);
      vertex_min = std::min(vertex_min, eval_sum_abs(e1.vec(), e2.vec(), e3.vec(), v));
    }
  }
  VertexCheckReport report;
  report.vertex_min = vertex_min;
  report.global_min = sphere_min_bruteforce(e1, e2, e3).L_est;
  report.agrees = std::abs(report.vertex_min - report.global_min) <= 5e-3;
  return report;
}

}  // namespace lnr
