#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lnr {

/// Plain 3-vector for intermediate results (differences, sums, cross products).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// A direction on the Poincare sphere. Construction normalizes the input;
/// vectors too small to normalize are rejected.
class UnitVec3 {
 public:
  UnitVec3() : v_{0.0, 0.0, 1.0} {}
  UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}
  explicit UnitVec3(const Vec3& v);

  /// (sin t cos p, sin t sin p, cos t) for t in [0,pi], p in (-pi,pi].
  static UnitVec3 from_spherical(double theta, double phi);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

inline double dot(const UnitVec3& a, const UnitVec3& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const UnitVec3& a, const UnitVec3& b) { return cross(a.vec(), b.vec()); }
inline Vec3 operator+(const UnitVec3& a, const UnitVec3& b) { return a.vec() + b.vec(); }
inline Vec3 operator-(const UnitVec3& a, const UnitVec3& b) { return a.vec() - b.vec(); }
inline UnitVec3 operator-(const UnitVec3& v) { return {-v.x(), -v.y(), -v.z()}; }

/// Angle in [0,pi]; the dot product is clamped to [-1,1] before acos.
double angle_between(const UnitVec3& u, const UnitVec3& v);

/// Signed scalar triple product e1 . (e2 x e3).
double triple_product(const UnitVec3& e1, const UnitVec3& e2, const UnitVec3& e3);

/// Pairs closer than this to coincident (difference) or antipodal (sum) are
/// degenerate: below double-precision chord resolution.
inline constexpr double degeneracy_angle_tol = 1e-9;

/// A setting pair too close to coincident or antipodal to define a
/// difference/sum direction. Carries the pair angle.
class degenerate_pair_error : public std::domain_error {
 public:
  degenerate_pair_error(const std::string& what, double angle)
      : std::domain_error(what), angle_(angle) {}
  double angle() const noexcept { return angle_; }

 private:
  double angle_;
};

struct DirectionAngle {
  UnitVec3 direction;
  double angle;  // radians, in [0,pi]
};

/// Decompose b - b2 = 2 sin(angle/2) * direction.
/// Throws degenerate_pair_error (angle 0) for coincident inputs.
DirectionAngle difference_direction(const UnitVec3& b, const UnitVec3& b2);

/// Decompose b + b2 = 2 cos(angle/2) * direction.
/// Throws degenerate_pair_error (angle pi) for antipodal inputs.
DirectionAngle sum_direction(const UnitVec3& b, const UnitVec3& b2);

/// Three unit vectors on a cone about +z with every pairwise angle equal to
/// delta. Realizable for delta in (0, 2pi/3]; at 2pi/3 the triple degenerates
/// to a coplanar equatorial arrangement.
std::array<UnitVec3, 3> symmetric_cone_triple(double delta);

/// Rotate v by alpha radians about an axis orthogonal to v, the axis chosen
/// so the motion heads along the tangent direction at azimuth psi in v's
/// tangent plane. alpha = 0 returns v unchanged.
UnitVec3 tilted(const UnitVec3& v, double alpha, double psi);

constexpr double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace lnr
