#include "lnr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lnr {

double min_abs_projection_closed_form(const UnitVec3& e1, const UnitVec3& e2,
                                      const UnitVec3& e3) {
  const double trip = std::abs(triple_product(e1, e2, e3));
  if (trip < linear_dependence_tol) {
    return 0.0;
  }
  const double c12 = norm(cross(e1, e2));
  const double c23 = norm(cross(e2, e3));
  const double c31 = norm(cross(e3, e1));
  return trip / std::max({c12, c23, c31});
}

double min_abs_projection_angle_form(double alpha12, double alpha23, double alpha31) {
  for (double a : {alpha12, alpha23, alpha31}) {
    if (!(a >= 0.0 && a <= std::numbers::pi)) {
      throw std::out_of_range("min_abs_projection_angle_form: angles must lie in [0,pi]");
    }
  }
  const double c12 = std::cos(alpha12);
  const double c23 = std::cos(alpha23);
  const double c31 = std::cos(alpha31);
  double radicand = 1.0 - c12 * c12 - c23 * c23 - c31 * c31 + 2.0 * c12 * c23 * c31;
  if (radicand < -1e-12) {
    throw unrealizable_angles_error(
        "min_abs_projection_angle_form: no vector triple realizes these angles");
  }
  radicand = std::max(radicand, 0.0);
  const double denom = std::max({std::sin(alpha12), std::sin(alpha23), std::sin(alpha31)});
  if (denom < linear_dependence_tol) {
    return 0.0;  // fully collinear limit
  }
  return std::sqrt(radicand) / denom;
}

namespace {

BoundReport assemble(const std::array<UnitVec3, 3>& dirs,
                     const std::array<double, 3>& pair_angles, double extremal_angle,
                     double trig_factor) {
  BoundReport r;
  r.per_pair_angles = pair_angles;
  r.extremal_angle = extremal_angle;
  r.degenerate = std::abs(triple_product(dirs[0], dirs[1], dirs[2])) < linear_dependence_tol;
  r.L = r.degenerate ? 0.0 : min_abs_projection_closed_form(dirs[0], dirs[1], dirs[2]);
  r.bound = 2.0 - (2.0 / 3.0) * trig_factor * r.L;
  return r;
}

}  // namespace

BoundReport bound_category_I(const SettingsCategoryI& s) {
  std::array<UnitVec3, 3> n{};
  std::array<double, 3> beta{};
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      const DirectionAngle d = difference_direction(s.b[i], s.b2[i]);
      n[i] = d.direction;
      beta[i] = d.angle;
    } catch (const degenerate_pair_error&) {
      throw degenerate_settings_error("bound_category_I: coincident pair (b[" +
                                      std::to_string(i) + "], b2[" + std::to_string(i) + "])");
    }
  }
  const double beta_star = *std::min_element(beta.begin(), beta.end());
  return assemble(n, beta, beta_star, std::sin(beta_star / 2.0));
}

BoundReport bound_category_II(const SettingsCategoryII& s) {
  std::array<UnitVec3, 3> m{};
  std::array<double, 3> delta{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    try {
      const DirectionAngle d = sum_direction(s.b[i], s.b[j]);
      m[i] = d.direction;
      delta[i] = d.angle;
    } catch (const degenerate_pair_error&) {
      throw degenerate_settings_error("bound_category_II: antipodal pair (b[" +
                                      std::to_string(i) + "], b[" + std::to_string(j) + "])");
    }
  }
  const double delta_star = *std::max_element(delta.begin(), delta.end());
  return assemble(m, delta, delta_star, std::cos(delta_star / 2.0));
}

}  // namespace lnr
