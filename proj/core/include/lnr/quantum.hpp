#pragma once

#include <optional>
#include <stdexcept>

#include "lnr/bounds.hpp"
#include "lnr/geometry.hpp"

namespace lnr {

/// Singlet-state correlations at finite visibility: <AB> = -V a.b.
struct CorrelationModel {
  double visibility = 1.0;

  explicit CorrelationModel(double v) : visibility(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::out_of_range("CorrelationModel: visibility must lie in [0,1]");
    }
  }
};

/// An evaluated inequality: measured side, bound, and their difference.
/// S > 0 falsifies the nonlocal realist model for these settings.
struct ViolationReport {
  double lhs = 0.0;
  double bound = 2.0;
  double S = -2.0;                // lhs - bound
  std::optional<double> ratio;    // bound / lhs; absent when lhs ~ 0
};

double correlation(const CorrelationModel& model, const UnitVec3& a, const UnitVec3& b);

/// (1/3) sum_i |<A_i B_i> + <A_i B2_i>|.
double lhs_category_I(const CorrelationModel& model, const SettingsCategoryI& s);

/// (1/3) sum_i |<A_i B_i> - <A_i B_{i+1 mod 3}>|.
double lhs_category_II(const CorrelationModel& model, const SettingsCategoryII& s);

ViolationReport evaluate_violation(const CorrelationModel& model, const SettingsCategoryI& s);
ViolationReport evaluate_violation(const CorrelationModel& model, const SettingsCategoryII& s);

}  // namespace lnr
