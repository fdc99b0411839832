#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zipfrac/errors.hpp"
#include "zipfrac/ifs.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// Controls for the fixed-point iteration.
struct EvalSettings {
  std::size_t grid_size = 1025;  // uniform points over [t_0, t_{n-1}], endpoints included
  double tol = 1e-12;            // sup-norm stopping tolerance
  std::size_t max_iters = 200;
};

inline Expected<EvalSettings> validate_settings(EvalSettings s) {
  if (s.grid_size < 33) {
    return Error{Errc::parse_error,
                 "grid_size must be >= 33, got " + std::to_string(s.grid_size)};
  }
  if (!(s.tol > 0.0) || !std::isfinite(s.tol)) {
    return Error{Errc::parse_error, "tol must be a positive finite number"};
  }
  if (s.max_iters < 1) {
    return Error{Errc::parse_error, "max_iters must be >= 1"};
  }
  return s;
}

/// Outcome of the fixed-point iteration. The sampled result is always
/// present; `converged` is false when max_iters was exhausted first.
struct EvalReport {
  std::size_t iterations = 0;
  double final_change = 0.0;
  double contraction_observed = 0.0;  // max ratio of successive sup-changes
  bool converged = false;
  SampledFunction result;
};

namespace detail {

inline constexpr double kPreImageSlack = 1e-12;

/// Per-grid-point quantities that do not change across iterations: the
/// subinterval owning the point, the pre-image under that subinterval's
/// map, and the rational segment value there.
struct OperatorPlan {
  std::vector<std::size_t> interval;
  std::vector<double> pre_image;
  std::vector<double> segment_value;
};

inline Expected<OperatorPlan> build_plan(const ZipperIfs& ifs, std::size_t grid_size) {
  const Dataset& ds = ifs.dataset();
  const double t0 = ds.t_first();
  const double t1 = ds.t_last();
  OperatorPlan plan;
  plan.interval.resize(grid_size);
  plan.pre_image.resize(grid_size);
  plan.segment_value.resize(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double s =
        t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(grid_size - 1);
    const std::size_t j = ds.interval_of(s);
    double t = ifs.map(j).inverse(s);
    if (t < t0 - kPreImageSlack || t > t1 + kPreImageSlack) {
      return Error{Errc::grid_mismatch,
                   "pre-image " + std::to_string(t) + " of grid point " + std::to_string(s) +
                       " falls outside the data domain",
                   static_cast<int>(j + 1)};
    }
    t = std::clamp(t, t0, t1);
    plan.interval[k] = j;
    plan.pre_image[k] = t;
    plan.segment_value[k] = eval_M(ifs.coeff(j), ds, t);
  }
  return plan;
}

/// One operator application along a precomputed plan. Reads g through
/// piecewise-linear interpolation, exactly as the public operator does.
inline void apply_plan(const ZipperIfs& ifs, const OperatorPlan& plan,
                       const SampledFunction& g, std::vector<double>& out) {
  const std::size_t n = plan.interval.size();
  out.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = ifs.lambda(plan.interval[k]);
    out[k] = lam * g.interpolate(plan.pre_image[k]) + plan.segment_value[k];
  }
}

inline SampledFunction data_polyline(const Dataset& ds, std::size_t grid_size) {
  SampledFunction g;
  g.t0 = ds.t_first();
  g.t1 = ds.t_last();
  g.values.resize(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double s = g.abscissa(k);
    const std::size_t j = ds.interval_of(s);
    const double u = (s - ds.knot(j)) / ds.h(j);
    g.values[k] = ds.value(j) + u * (ds.value(j + 1) - ds.value(j));
  }
  return g;
}

inline double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace detail

/// One application of the interpolation operator to a grid function g on
/// the canonical uniform grid over [t_0, t_{n-1}]: at each grid point s
/// with s in subinterval j (half-open, last closed), the output is
/// lambda_j * g~(L_j^{-1}(s)) + M_j(L_j^{-1}(s)), with g~ the
/// piecewise-linear read of g and the pre-image clamped to the domain
/// within 1e-12 slack.
inline Expected<SampledFunction> apply_operator(const ZipperIfs& ifs, const SampledFunction& g) {
  const Dataset& ds = ifs.dataset();
  if (g.size() < 2 || g.t0 != ds.t_first() || g.t1 != ds.t_last()) {
    return Error{Errc::grid_mismatch,
                 "grid must span the data domain [" + std::to_string(ds.t_first()) + ", " +
                     std::to_string(ds.t_last()) + "] with at least 2 points"};
  }
  auto plan = detail::build_plan(ifs, g.size());
  if (!plan.ok()) return plan.error();
  SampledFunction out;
  out.t0 = g.t0;
  out.t1 = g.t1;
  detail::apply_plan(ifs, plan.value(), g, out.values);
  return out;
}

/// Iterates the operator from the polyline through the data points until
/// the sup-norm change drops to settings.tol. A report is returned even
/// when max_iters is exhausted; callers that need a hard failure check
/// report.converged.
inline Expected<EvalReport> fixed_point(const ZipperIfs& ifs, EvalSettings settings = {}) {
  auto checked = validate_settings(settings);
  if (!checked.ok()) return checked.error();
  auto plan = detail::build_plan(ifs, settings.grid_size);
  if (!plan.ok()) return plan.error();

  EvalReport report;
  report.result = detail::data_polyline(ifs.dataset(), settings.grid_size);
  std::vector<double> next;
  double prev_change = -1.0;
  for (std::size_t it = 0; it < settings.max_iters; ++it) {
    detail::apply_plan(ifs, plan.value(), report.result, next);
    const double change = detail::sup_diff(next, report.result.values);
    report.result.values.swap(next);
    report.iterations = it + 1;
    report.final_change = change;
    if (change <= settings.tol) {
      report.converged = true;
      break;
    }
    // The terminal sub-tolerance step is skipped: at that scale the
    // change is dominated by rounding noise and its ratio says nothing
    // about the operator.
    if (prev_change > 0.0) {
      report.contraction_observed = std::max(report.contraction_observed, change / prev_change);
    }
    prev_change = change;
  }
  return report;
}

/// Point query against a converged sample: one functional-equation
/// refinement. The interval j owning t is located, and the returned value
/// is lambda_j * result~(L_j^{-1}(t)) + M_j(L_j^{-1}(t)). At knots and
/// other map-images of grid points this is exact; elsewhere it inherits
/// the piecewise-linear read of the grid, contracted by lambda_j.
inline Expected<double> eval_at(const ZipperIfs& ifs, const SampledFunction& result, double t) {
  const Dataset& ds = ifs.dataset();
  const double t0 = ds.t_first();
  const double t1 = ds.t_last();
  if (t < t0 - detail::kPreImageSlack || t > t1 + detail::kPreImageSlack) {
    return Error{Errc::out_of_domain, "t = " + std::to_string(t) + " outside [" +
                                          std::to_string(t0) + ", " + std::to_string(t1) + "]"};
  }
  t = std::clamp(t, t0, t1);
  const std::size_t j = ds.interval_of(t);
  const double pre = std::clamp(ifs.map(j).inverse(t), t0, t1);
  return ifs.lambda(j) * result.interpolate(pre) + eval_M(ifs.coeff(j), ds, pre);
}

/// Direct closed-form evaluation M_j(L_j^{-1}(t)) — valid only when every
/// scaling factor is zero, in which case the interpolant is the classical
/// rational spline and no iteration is needed. Serves as an independent
/// oracle for the fixed-point engine.
inline Expected<double> classical_eval(const ZipperIfs& ifs, double t) {
  if (!ifs.is_classical()) {
    return Error{Errc::not_classical,
                 "direct evaluation requires all scaling factors to be zero"};
  }
  const Dataset& ds = ifs.dataset();
  const double t0 = ds.t_first();
  const double t1 = ds.t_last();
  if (t < t0 - detail::kPreImageSlack || t > t1 + detail::kPreImageSlack) {
    return Error{Errc::out_of_domain, "t = " + std::to_string(t) + " outside [" +
                                          std::to_string(t0) + ", " + std::to_string(t1) + "]"};
  }
  t = std::clamp(t, t0, t1);
  const std::size_t j = ds.interval_of(t);
  const double pre = std::clamp(ifs.map(j).inverse(t), t0, t1);
  return eval_M(ifs.coeff(j), ds, pre);
}

}  // namespace zipfrac
