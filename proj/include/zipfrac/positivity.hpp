#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "zipfrac/errors.hpp"
#include "zipfrac/evaluator.hpp"
#include "zipfrac/ifs.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// Parameter ranges that guarantee a positive interpolant for strictly
/// positive data: strict upper bounds on the scaling factors and strict
/// lower bounds on beta/gamma given alpha, delta, and lambda.
struct PositivityBounds {
  std::vector<double> lambda_max;
  std::vector<double> beta_min;
  std::vector<double> gamma_min;
};

/// Lower bounds for beta and gamma only (the lambda-dependent half of
/// PositivityBounds).
struct ShapeBounds {
  std::vector<double> beta_min;
  std::vector<double> gamma_min;
};

/// Positivity verdict. The certificate half (certified/detail/warnings) is
/// always filled; the empirical half only after empirical_check.
struct PositivityReport {
  bool certified = false;
  std::string detail;
  std::vector<std::string> warnings;  // parameters within 1e-9 of a bound

  bool empirical_done = false;
  std::size_t probe_size = 0;
  double empirical_min = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::size_t> violating_intervals;  // 1-based, by knot partition
};

inline constexpr double kBoundWarnMargin = 1e-9;

/// Strict upper bound for each scaling factor:
///   bound_j = min(h_j/l, f_left/f_0, f_right/f_{n-1})
/// where f_left/f_right are the data values the j-th map sends the domain
/// endpoints to. Requires strictly positive data.
inline Expected<std::vector<double>> lambda_bounds(const Dataset& ds, const Signature& sig) {
  const std::size_t n = ds.n();
  if (sig.size() != n - 1) {
    return Error{Errc::length_mismatch, "signature has " + std::to_string(sig.size()) +
                                            " entries, expected " + std::to_string(n - 1)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ds.value(i) > 0.0)) {
      return Error{Errc::non_positive_data,
                   "value " + std::to_string(ds.value(i)) + " at position " +
                       std::to_string(i + 1) + " is not strictly positive",
                   static_cast<int>(i + 1)};
    }
  }
  std::vector<double> bounds(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t il = j + static_cast<std::size_t>(sig.bit(j));
    const std::size_t ir = j + 1 - static_cast<std::size_t>(sig.bit(j));
    bounds[j] = std::min({ds.a_mag(j), ds.value(il) / ds.value(0),
                          ds.value(ir) / ds.value(n - 1)});
  }
  return bounds;
}

/// Strict lower bounds for the beta/gamma shape parameters at a given
/// lambda choice:
///   beta_min_j  = max(0, -(2 l alpha_j / pi) d*_left  / f*_left)
///   gamma_min_j = max(0,  (2 l delta_j / pi) d*_right / f*_right)
/// Every lambda_j must satisfy 0 <= lambda_j < lambda_bound_j, which keeps
/// the starred values f* strictly positive.
inline Expected<ShapeBounds> shape_bounds(const Dataset& ds, const DerivativeSet& dv,
                                          const Signature& sig,
                                          const std::vector<double>& lambdas,
                                          const std::vector<double>& alphas,
                                          const std::vector<double>& deltas) {
  const std::size_t m = ds.n() - 1;
  if (dv.size() != ds.n()) {
    return Error{Errc::length_mismatch, "derivative set does not match dataset size"};
  }
  if (lambdas.size() != m || alphas.size() != m || deltas.size() != m) {
    return Error{Errc::length_mismatch,
                 "lambdas, alphas, and deltas must each have " + std::to_string(m) + " entries"};
  }
  auto lb = lambda_bounds(ds, sig);
  if (!lb.ok()) return lb.error();

  ShapeBounds out;
  out.beta_min.resize(m);
  out.gamma_min.resize(m);
  const double scale = 2.0 * ds.length() / std::numbers::pi;
  for (std::size_t j = 0; j < m; ++j) {
    if (!(lambdas[j] >= 0.0) || !(lambdas[j] < lb.value()[j])) {
      return Error{Errc::lambda_out_of_bounds,
                   "lambda = " + std::to_string(lambdas[j]) + " in interval " +
                       std::to_string(j + 1) + " outside [0, " + std::to_string(lb.value()[j]) +
                       ")",
                   static_cast<int>(j + 1)};
    }
    const detail::StarredData st = detail::starred(ds, dv, lambdas[j], sig.bit(j), j);
    out.beta_min[j] = std::max(0.0, -scale * alphas[j] * st.d_left / st.f_left);
    out.gamma_min[j] = std::max(0.0, scale * deltas[j] * st.d_right / st.f_right);
  }
  return out;
}

/// Sign certificate: the interpolant is strictly positive if for every
/// interval 0 <= lambda_j < lambda_bound_j and the computed numerator
/// coefficients u, v, w, x are all strictly positive (the denominator is
/// positive by config validation). Under these conditions the operator
/// maps positive functions to positive functions, so every iterate — and
/// the limit — stays positive. Returns a verdict, never an error:
/// non-positive data simply fails the certificate.
inline PositivityReport certify(const ZipperIfs& ifs) {
  PositivityReport report;
  const Dataset& ds = ifs.dataset();
  std::ostringstream detail;

  auto lb = lambda_bounds(ds, ifs.config().signature());
  if (!lb.ok()) {
    report.certified = false;
    report.detail = lb.error().describe();
    return report;
  }
  const std::vector<double>& bounds = lb.value();

  bool ok = true;
  for (std::size_t j = 0; j < ifs.intervals(); ++j) {
    const double lam = ifs.lambda(j);
    if (!(lam >= 0.0) || !(lam < bounds[j])) {
      if (!ok) detail << "; ";
      detail << "interval " << (j + 1) << ": lambda " << lam << " outside [0, " << bounds[j]
             << ")";
      ok = false;
      continue;
    }
    if (bounds[j] - lam < kBoundWarnMargin) {
      report.warnings.push_back("interval " + std::to_string(j + 1) +
                                ": lambda within 1e-9 of its upper bound");
    }
    const RationalCoeffs& rc = ifs.coeff(j);
    const struct {
      const char* name;
      double val;
    } coeffs[] = {{"u", rc.u}, {"v", rc.v}, {"w", rc.w}, {"x", rc.x}};
    for (const auto& c : coeffs) {
      if (!(c.val > 0.0)) {
        if (!ok) detail << "; ";
        detail << "interval " << (j + 1) << ": coefficient " << c.name << " = " << c.val
               << " not positive";
        ok = false;
      } else if (c.val < kBoundWarnMargin) {
        report.warnings.push_back("interval " + std::to_string(j + 1) + ": coefficient " +
                                  c.name + " within 1e-9 of zero");
      }
    }
  }
  report.certified = ok;
  report.detail = ok ? "all intervals satisfy the positivity certificate" : detail.str();
  return report;
}

/// Certificate plus a dense-probe measurement: converges the interpolant,
/// samples probe_size uniform points, and records the minimum and the
/// 1-based knot intervals containing negative samples. Fails hard if the
/// fixed-point iteration does not converge.
inline Expected<PositivityReport> empirical_check(const ZipperIfs& ifs,
                                                  EvalSettings settings = {},
                                                  std::size_t probe_size = 10001) {
  PositivityReport report = certify(ifs);
  if (probe_size < 2) {
    return Error{Errc::parse_error, "probe_size must be >= 2"};
  }
  auto fp = fixed_point(ifs, settings);
  if (!fp.ok()) return fp.error();
  if (!fp.value().converged) {
    return Error{Errc::not_converged,
                 "fixed-point iteration did not reach tol = " + std::to_string(settings.tol) +
                     " within " + std::to_string(settings.max_iters) +
                     " iterations (final change " + std::to_string(fp.value().final_change) +
                     ")"};
  }
  const SampledFunction& phi = fp.value().result;
  const Dataset& ds = ifs.dataset();
  const double t0 = ds.t_first();
  const double t1 = ds.t_last();

  report.empirical_done = true;
  report.probe_size = probe_size;
  report.empirical_min = std::numeric_limits<double>::infinity();
  std::vector<bool> interval_hit(ds.n() - 1, false);
  for (std::size_t k = 0; k < probe_size; ++k) {
    const double t =
        t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(probe_size - 1);
    const double v = eval_at(ifs, phi, t).value();
    report.empirical_min = std::min(report.empirical_min, v);
    if (v < 0.0) interval_hit[ds.interval_of(t)] = true;
  }
  for (std::size_t j = 0; j < interval_hit.size(); ++j) {
    if (interval_hit[j]) report.violating_intervals.push_back(j + 1);
  }
  return report;
}

}  // namespace zipfrac
