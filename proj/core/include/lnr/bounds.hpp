#pragma once

#include <array>
#include <stdexcept>

#include "lnr/geometry.hpp"

namespace lnr {

/// Category I measurement settings: one Alice direction and an
/// unprimed/primed Bob pair per index. The bound is built from the
/// difference directions of the (b, b2) pairs.
struct SettingsCategoryI {
  std::array<UnitVec3, 3> a;
  std::array<UnitVec3, 3> b;
  std::array<UnitVec3, 3> b2;
};

/// Category II measurement settings: one Alice and one Bob direction per
/// index; Bob pairs are consecutive (b[i], b[i+1 mod 3]) and the bound is
/// built from their sum directions.
struct SettingsCategoryII {
  std::array<UnitVec3, 3> a;
  std::array<UnitVec3, 3> b;
};

/// Evaluated right-hand side of an LNR inequality.
struct BoundReport {
  double L = 0.0;              // minimum-projection value, in [0,1]
  double extremal_angle = 0.0; // beta* (category I) or delta* (category II), radians
  double bound = 2.0;          // in [2 - 2/3, 2]
  bool degenerate = false;     // direction vectors linearly dependent
  std::array<double, 3> per_pair_angles{};
};

/// Settings whose pair structure is degenerate (coincident difference pair or
/// antipodal sum pair), so no bound direction exists.
class degenerate_settings_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Angle triple that no vector triple on the sphere can realize.
class unrealizable_angles_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |triple product| below this counts as linearly dependent; the bound then
/// degenerates to the trivial value 2.
inline constexpr double linear_dependence_tol = 1e-9;

/// Global minimum over the sphere of F(v) = sum_i |e_i . v|, via the vertex
/// formula |e1.(e2 x e3)| / max pairwise cross norm. Returns 0 for (near-)
/// dependent inputs.
double min_abs_projection_closed_form(const UnitVec3& e1, const UnitVec3& e2,
                                      const UnitVec3& e3);

/// Same minimum expressed through the three pairwise angles. Angles must lie
/// in [0,pi]; a radicand below -1e-12 means the triple is unrealizable.
double min_abs_projection_angle_form(double alpha12, double alpha23, double alpha31);

/// Right-hand side 2 - (2/3) sin(beta*/2) L of the category I inequality,
/// beta* = min pair angle. Alice's settings do not enter.
BoundReport bound_category_I(const SettingsCategoryI& s);

/// Right-hand side 2 - (2/3) cos(delta*/2) L of the category II inequality,
/// delta* = max consecutive-pair angle.
BoundReport bound_category_II(const SettingsCategoryII& s);

}  // namespace lnr
