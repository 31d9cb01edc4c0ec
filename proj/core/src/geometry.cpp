#include "lnr/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lnr {

UnitVec3::UnitVec3(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 1e-12)) {
    throw std::invalid_argument("UnitVec3: vector is not normalizable");
  }
  v_ = {v.x / n, v.y / n, v.z / n};
}

UnitVec3 UnitVec3::from_spherical(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::out_of_range("from_spherical: theta must lie in [0,pi]");
  }
  if (!(phi > -std::numbers::pi && phi <= std::numbers::pi)) {
    throw std::out_of_range("from_spherical: phi must lie in (-pi,pi]");
  }
  const double st = std::sin(theta);
  return UnitVec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

double angle_between(const UnitVec3& u, const UnitVec3& v) {
  const double d = std::clamp(dot(u, v), -1.0, 1.0);
  return std::acos(d);
}

double triple_product(const UnitVec3& e1, const UnitVec3& e2, const UnitVec3& e3) {
  return dot(e1.vec(), cross(e2, e3));
}

DirectionAngle difference_direction(const UnitVec3& b, const UnitVec3& b2) {
  const double beta = angle_between(b, b2);
  if (beta < degeneracy_angle_tol) {
    throw degenerate_pair_error("difference_direction: settings coincide", 0.0);
  }
  return {UnitVec3(b - b2), beta};
}

DirectionAngle sum_direction(const UnitVec3& b, const UnitVec3& b2) {
  const double delta = angle_between(b, b2);
  if (delta > std::numbers::pi - degeneracy_angle_tol) {
    throw degenerate_pair_error("sum_direction: settings are antipodal", std::numbers::pi);
  }
  return {UnitVec3(b + b2), delta};
}

std::array<UnitVec3, 3> symmetric_cone_triple(double delta) {
  constexpr double max_delta = 2.0 * std::numbers::pi / 3.0;
  if (!(delta > 0.0 && delta <= max_delta + 1e-12)) {
    throw std::out_of_range(
        "symmetric_cone_triple: equal pairwise angles require delta in (0, 2pi/3]");
  }
  // cos(delta) = (3 cos^2(theta) - 1) / 2 for the common polar angle theta.
  const double ct2 = std::max((2.0 * std::cos(delta) + 1.0) / 3.0, 0.0);
  const double ct = std::sqrt(ct2);
  const double st = std::sqrt(std::max(1.0 - ct2, 0.0));
  std::array<UnitVec3, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / 3.0;
    out[static_cast<std::size_t>(i)] =
        UnitVec3(st * std::cos(phi), st * std::sin(phi), ct);
  }
  return out;
}

UnitVec3 tilted(const UnitVec3& v, double alpha, double psi) {
  if (alpha == 0.0) return v;
  const Vec3 helper = std::abs(v.x()) <= 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const UnitVec3 t1{cross(helper, v.vec())};
  const UnitVec3 t2{cross(v.vec(), t1.vec())};
  const Vec3 dir = std::cos(psi) * t1.vec() + std::sin(psi) * t2.vec();
  return UnitVec3(std::cos(alpha) * v.vec() + std::sin(alpha) * dir);
}

}  // namespace lnr
