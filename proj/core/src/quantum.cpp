#include "lnr/quantum.hpp"

#include <cmath>

namespace lnr {

double correlation(const CorrelationModel& model, const UnitVec3& a, const UnitVec3& b) {
  return -model.visibility * dot(a, b);
}

double lhs_category_I(const CorrelationModel& model, const SettingsCategoryI& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    sum += std::abs(correlation(model, s.a[i], s.b[i]) + correlation(model, s.a[i], s.b2[i]));
  }
  return sum / 3.0;
}

double lhs_category_II(const CorrelationModel& model, const SettingsCategoryII& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    sum += std::abs(correlation(model, s.a[i], s.b[i]) -
                    correlation(model, s.a[i], s.b[(i + 1) % 3]));
  }
  return sum / 3.0;
}

namespace {

ViolationReport make_report(double lhs, double bound) {
  ViolationReport r;
  r.lhs = lhs;
  r.bound = bound;
  r.S = lhs - bound;
  if (lhs > 1e-12) {
    r.ratio = bound / lhs;
  }
  return r;
}

}  // namespace

ViolationReport evaluate_violation(const CorrelationModel& model, const SettingsCategoryI& s) {
  return make_report(lhs_category_I(model, s), bound_category_I(s).bound);
}

ViolationReport evaluate_violation(const CorrelationModel& model, const SettingsCategoryII& s) {
  return make_report(lhs_category_II(model, s), bound_category_II(s).bound);
}

}  // namespace lnr
