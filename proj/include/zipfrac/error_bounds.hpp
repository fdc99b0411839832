#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "zipfrac/errors.hpp"
#include "zipfrac/ifs.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// User-supplied analytical facts about the sampled function psi. The
/// interpolated data alone cannot recover them, so they are inputs:
///   psi_sup  — sup |psi| over the data span; when absent, max |f_i| is
///              used as a stand-in and the report is flagged.
///   psi3_sup — sup |psi'''|; without it the h^3 spline term cannot be
///              formed and is reported unavailable.
///   c        — constant carried over from the classical rational-spline
///              error estimate; an external quantity, never computed here.
///              The default 1 is illustrative only.
///   ratio_c  — numerator-ratio constant in (0, 1]; 1 is the conservative
///              supremum, so the bound stays a bound.
struct ErrorBoundInputs {
  std::optional<double> psi_sup;
  std::optional<double> psi3_sup;
  double c = 1.0;
  double ratio_c = 1.0;
};

/// Three-term a-priori bound on the gap between the fractal interpolant
/// and the sampled function, plus every displayed intermediate.
struct ErrorBoundReport {
  double zipper_term = 0.0;   // eps_sup/(1-lam_inf) * (ratio_c*phi_max + 4 h eta_max / pi)
  double spline_term = 0.0;   // (1/2) psi3_sup h^3 c, zero when unavailable
  double fractal_term = 0.0;  // lam_inf/(1-lam_inf) * (e_of_h + e_star_of_h)
  double total = 0.0;

  bool spline_available = false;  // psi3_sup was provided
  bool psi_sup_estimated = false; // psi_sup defaulted to max |f_i|

  // Intermediates, named as reported by the CLI.
  double phi_max = 0.0;   // max |f_j| over j = 1..n-1 (last value excluded)
  double eta_max = 0.0;   // max |d_j| over the same range
  double e1 = 0.0;        // max d_j over the same range (signed)
  double e2 = 0.0;        // max(|d_first|, |d_last|)
  double f_cap = 0.0;     // max(|f_first|, |f_last|)
  double e_of_h = 0.0;    // psi_sup_used + (4h/pi) e1
  double e_star_of_h = 0.0;  // f_cap + (4h/pi) e2
  double h_max = 0.0;
  double l = 0.0;
  double xi = 0.0;        // max over intervals and theta of the denominator q
  double lambda_inf = 0.0;
  double eps_sup = 0.0;
  double c_used = 1.0;
  double ratio_c_used = 1.0;
  double psi_sup_used = 0.0;
};

namespace detail {

inline constexpr std::size_t kXiGridPoints = 10000;

/// Dense-grid maximum of the (positive) denominator q over all intervals.
inline double max_denominator(const ZipperConfig& cfg, std::size_t intervals) {
  const double half_pi = std::numbers::pi / 2.0;
  double xi = 0.0;
  for (std::size_t j = 0; j < intervals; ++j) {
    for (std::size_t k = 0; k < kXiGridPoints; ++k) {
      const double theta =
          half_pi * static_cast<double>(k) / static_cast<double>(kXiGridPoints - 1);
      const TrigBasis b = basis_at(theta);
      const double q = b.b0 * cfg.alpha(j) + b.b1 * cfg.beta(j) + b.b2 * cfg.gamma(j) +
                       b.b3 * cfg.delta(j);
      xi = std::max(xi, q);
    }
  }
  return xi;
}

}  // namespace detail

/// Assembles the a-priori bound
///   |interpolant - psi| <= zipper_term + spline_term + fractal_term
/// together with all intermediates. Never fails beyond input validation;
/// missing psi statistics degrade the report (flags) instead of erroring.
inline Expected<ErrorBoundReport> bound_report(const Dataset& ds, const DerivativeSet& dv,
                                               const ZipperConfig& cfg,
                                               const ErrorBoundInputs& inputs = {}) {
  if (dv.size() != ds.n()) {
    return Error{Errc::length_mismatch, "derivative set does not match dataset size"};
  }
  if (inputs.psi_sup && !(*inputs.psi_sup >= 0.0 && std::isfinite(*inputs.psi_sup))) {
    return Error{Errc::parse_error, "psi_sup must be a finite non-negative number"};
  }
  if (inputs.psi3_sup && !(*inputs.psi3_sup >= 0.0 && std::isfinite(*inputs.psi3_sup))) {
    return Error{Errc::parse_error, "psi3_sup must be a finite non-negative number"};
  }
  if (!(inputs.c > 0.0) || !std::isfinite(inputs.c)) {
    return Error{Errc::parse_error, "c must be a positive finite number"};
  }
  if (!(inputs.ratio_c > 0.0) || !(inputs.ratio_c <= 1.0)) {
    return Error{Errc::parse_error, "ratio_c must lie in (0, 1]"};
  }

  const std::size_t n = ds.n();
  ErrorBoundReport r;
  r.h_max = ds.h_max();
  r.l = ds.length();
  r.lambda_inf = cfg.lambda_inf();
  r.eps_sup = static_cast<double>(cfg.signature().sup_norm());
  r.c_used = inputs.c;
  r.ratio_c_used = inputs.ratio_c;
  r.xi = detail::max_denominator(cfg, n - 1);

  // Data/derivative statistics. The first group ranges over all indices
  // except the last (the bound's interior maxima); the second group uses
  // only the two endpoints.
  r.phi_max = 0.0;
  r.eta_max = 0.0;
  r.e1 = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r.phi_max = std::max(r.phi_max, std::abs(ds.value(i)));
    r.eta_max = std::max(r.eta_max, std::abs(dv.at(i)));
    r.e1 = std::max(r.e1, dv.at(i));
  }
  r.e2 = std::max(std::abs(dv.at(0)), std::abs(dv.at(n - 1)));
  r.f_cap = std::max(std::abs(ds.value(0)), std::abs(ds.value(n - 1)));

  if (inputs.psi_sup) {
    r.psi_sup_used = *inputs.psi_sup;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      r.psi_sup_used = std::max(r.psi_sup_used, std::abs(ds.value(i)));
    }
    r.psi_sup_estimated = true;
  }

  const double four_h_over_pi = 4.0 * r.h_max / std::numbers::pi;
  r.e_of_h = r.psi_sup_used + four_h_over_pi * r.e1;
  r.e_star_of_h = r.f_cap + four_h_over_pi * r.e2;

  const double contraction = 1.0 - r.lambda_inf;
  r.zipper_term =
      r.eps_sup / contraction * (r.ratio_c_used * r.phi_max + four_h_over_pi * r.eta_max);
  r.fractal_term = r.lambda_inf / contraction * (r.e_of_h + r.e_star_of_h);
  if (inputs.psi3_sup) {
    r.spline_available = true;
    r.spline_term = 0.5 * (*inputs.psi3_sup) * r.h_max * r.h_max * r.h_max * inputs.c;
  }
  r.total = r.zipper_term + r.spline_term + r.fractal_term;
  return r;
}

/// Sup-norm difference of two grid functions on the same grid.
inline Expected<double> measured_gap(const SampledFunction& fa, const SampledFunction& fb) {
  if (!fa.same_grid(fb)) {
    return Error{Errc::grid_mismatch, "grids differ in span or point count"};
  }
  double gap = 0.0;
  for (std::size_t k = 0; k < fa.size(); ++k) {
    gap = std::max(gap, std::abs(fa.values[k] - fb.values[k]));
  }
  return gap;
}

}  // namespace zipfrac
