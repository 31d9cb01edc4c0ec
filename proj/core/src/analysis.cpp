#include "lnr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lnr/rng.hpp"

namespace lnr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

template <typename F>
double golden_max(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

/// f changes sign between a and b; shrink the bracket to width tol.
template <typename F>
double bisect_zero(F&& f, double a, double b, double tol) {
  double fa = f(a);
  for (int i = 0; i < 200 && (b - a) > tol; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

UnitVec3 random_tilt(SplitMix64& g, const UnitVec3& v, double max_angle) {
  const double alpha = g.next_double() * max_angle;
  const double psi = g.next_double(0.0, two_pi);
  return tilted(v, alpha, psi);
}

SettingsCategoryI perturbed(SplitMix64& g, const SettingsCategoryI& s, double eps) {
  SettingsCategoryI out = s;
  for (auto& v : out.a) v = random_tilt(g, v, eps);
  for (auto& v : out.b) v = random_tilt(g, v, eps);
  for (auto& v : out.b2) v = random_tilt(g, v, eps);
  return out;
}

SettingsCategoryII perturbed(SplitMix64& g, const SettingsCategoryII& s, double eps) {
  SettingsCategoryII out = s;
  for (auto& v : out.a) v = random_tilt(g, v, eps);
  for (auto& v : out.b) v = random_tilt(g, v, eps);
  return out;
}

template <typename Settings>
RobustnessReport sweep(const Settings& s, const CorrelationModel& model,
                       double epsilon, std::size_t n_samples,
                       std::uint64_t seed) {
  if (!(epsilon >= 0.0 && epsilon <= 0.2)) {
    throw std::out_of_range("robustness_sweep: epsilon must lie in [0, 0.2] rad");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("robustness_sweep: need at least one sample");
  }
  const ViolationReport nominal = evaluate_violation(model, s);
  RobustnessReport rep;
  rep.nominal_S = nominal.S;
  rep.sup_bound = nominal.bound;
  rep.inf_lhs = nominal.lhs;
  rep.epsilon = epsilon;
  rep.n_samples = n_samples;
  rep.seed = seed;
  for (std::size_t k = 0; k < n_samples; ++k) {
    SplitMix64 g = substream(seed, k);
    const ViolationReport r = evaluate_violation(model, perturbed(g, s, epsilon));
    rep.sup_bound = std::max(rep.sup_bound, r.bound);
    rep.inf_lhs = std::min(rep.inf_lhs, r.lhs);
  }
  rep.conclusive_margin = rep.inf_lhs - rep.sup_bound;
  return rep;
}

double threshold_from(double bound, double lhs_at_full_visibility) {
  if (!(lhs_at_full_visibility > 1e-12)) {
    throw undefined_threshold_error("threshold_visibility: lhs vanishes at V=1");
  }
  return std::min(1.0, bound / lhs_at_full_visibility);
}

}  // namespace

SettingsCategoryI make_orthogonal_settings_I(double beta) {
  if (!(beta > 0.0 && beta < std::numbers::pi)) {
    throw std::out_of_range("make_orthogonal_settings_I: beta must lie in (0, pi)");
  }
  const std::array<Vec3, 3> n{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::array<Vec3, 3> m{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  const double ch = std::cos(beta / 2.0);
  const double sh = std::sin(beta / 2.0);
  SettingsCategoryI s;
  for (std::size_t i = 0; i < 3; ++i) {
    s.a[i] = UnitVec3(m[i]);
    s.b[i] = UnitVec3(ch * m[i] + sh * n[i]);
    s.b2[i] = UnitVec3(ch * m[i] - sh * n[i]);
  }
  return s;
}

SettingsCategoryII make_symmetric_settings_II(double delta) {
  SettingsCategoryII s;
  s.b = symmetric_cone_triple(delta);
  for (std::size_t i = 0; i < 3; ++i) {
    s.a[i] = difference_direction(s.b[i], s.b[(i + 1) % 3]).direction;
  }
  return s;
}

OptimumCategoryI optimize_category_I(const CorrelationModel& model) {
  if (!(model.visibility > 2.0 / 3.0)) {
    throw no_violation_error(
        "optimize_category_I: every bound is >= 4/3 while lhs <= 2V, so "
        "visibility <= 2/3 cannot violate");
  }
  const auto S_of = [&](double beta) {
    return evaluate_violation(model, make_orthogonal_settings_I(beta)).S;
  };
  const double beta = golden_max(S_of, 1e-6, std::numbers::pi - 1e-6, 1e-12);

  OptimumCategoryI opt;
  opt.beta = beta;
  opt.settings = make_orthogonal_settings_I(beta);
  opt.report = evaluate_violation(model, opt.settings);
  for (std::uint64_t k = 0; k < 64; ++k) {
    SplitMix64 g = substream(0x5eedULL, k);
    const double s = evaluate_violation(model, perturbed(g, opt.settings, 0.01)).S;
    if (s > opt.report.S + 1e-6) {
      throw std::logic_error(
          "optimize_category_I: a nearby perturbation improves S; the "
          "structured-family optimum is not locally maximal");
    }
  }
  return opt;
}

ScanResult scan_symmetric_II(const CorrelationModel& model, double delta_lo,
                             double delta_hi, double step) {
  constexpr double max_delta = 2.0 * std::numbers::pi / 3.0;
  if (!(delta_lo > 0.0 && delta_lo < delta_hi && delta_hi <= max_delta + 1e-12)) {
    throw std::out_of_range("scan_symmetric_II: need 0 < delta_lo < delta_hi <= 2pi/3");
  }
  if (!(step > 0.0)) {
    throw std::out_of_range("scan_symmetric_II: step must be positive");
  }
  const auto eval = [&](double delta) {
    return evaluate_violation(model, make_symmetric_settings_II(delta));
  };
  const auto S_of = [&](double delta) { return eval(delta).S; };

  ScanResult res;
  const auto n = static_cast<std::size_t>((delta_hi - delta_lo) / step + 1e-9);
  res.rows.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double delta =
        std::min(delta_lo + static_cast<double>(k) * step, delta_hi);
    const ViolationReport r = eval(delta);
    res.rows.push_back({delta, r.lhs, r.bound, r.S});
  }

  std::size_t first = res.rows.size();
  std::size_t last = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    if (res.rows[i].S > 0.0) {
      first = std::min(first, i);
      last = i;
    }
    if (res.rows[i].S > res.rows[best].S) best = i;
  }

  constexpr double refine_tol = 1e-10;
  if (first < res.rows.size()) {
    ViolationWindow w{};
    w.lo = (first == 0) ? res.rows.front().delta
                        : bisect_zero(S_of, res.rows[first - 1].delta,
                                      res.rows[first].delta, refine_tol);
    w.hi = (last + 1 == res.rows.size())
               ? res.rows.back().delta
               : bisect_zero(S_of, res.rows[last].delta,
                             res.rows[last + 1].delta, refine_tol);
    res.window = w;
  }

  const double lo_bracket = res.rows[best == 0 ? 0 : best - 1].delta;
  const double hi_bracket = res.rows[std::min(best + 1, res.rows.size() - 1)].delta;
  double cand = res.rows[best].delta;
  if (lo_bracket < hi_bracket) cand = golden_max(S_of, lo_bracket, hi_bracket, refine_tol);
  const double cand_S = S_of(cand);
  if (cand_S >= res.rows[best].S) {
    res.argmax_delta = cand;
    res.max_S = cand_S;
  } else {
    res.argmax_delta = res.rows[best].delta;
    res.max_S = res.rows[best].S;
  }
  return res;
}

double threshold_visibility(const SettingsCategoryI& s) {
  return threshold_from(bound_category_I(s).bound,
                        lhs_category_I(CorrelationModel{1.0}, s));
}

double threshold_visibility(const SettingsCategoryII& s) {
  return threshold_from(bound_category_II(s).bound,
                        lhs_category_II(CorrelationModel{1.0}, s));
}

RobustnessReport robustness_sweep(const SettingsCategoryI& s,
                                  const CorrelationModel& model, double epsilon,
                                  std::size_t n_samples, std::uint64_t seed) {
  return sweep(s, model, epsilon, n_samples, seed);
}

RobustnessReport robustness_sweep(const SettingsCategoryII& s,
                                  const CorrelationModel& model, double epsilon,
                                  std::size_t n_samples, std::uint64_t seed) {
  return sweep(s, model, epsilon, n_samples, seed);
}

}  // namespace lnr
