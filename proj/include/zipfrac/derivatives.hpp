#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "zipfrac/errors.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// Knot derivatives by the arithmetic mean method: each interior derivative
/// is the mesh-weighted mean of the adjacent chord slopes,
///
///   d_i = (h_i * s_{i-1} + h_{i-1} * s_i) / (h_{i-1} + h_i),
///
/// with s_i = (f_{i+1} - f_i) / h_i, and three-point extrapolation at the
/// ends:
///
///   d_0     = s_0 + (s_0 - s_1) * h_0 / (h_0 + h_1)
///   d_{n-1} = s_{n-2} + (s_{n-2} - s_{n-3}) * h_{n-2} / (h_{n-3} + h_{n-2}).
///
/// Exact on affine data for arbitrary non-uniform knots; each interior d_i
/// is a convex combination of its two neighboring slopes.
inline DerivativeSet amm_derivatives(const Dataset& ds) {
  const std::size_t n = ds.n();
  std::vector<double> slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    slope[i] = (ds.value(i + 1) - ds.value(i)) / ds.h(i);
  }
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (ds.h(i) * slope[i - 1] + ds.h(i - 1) * slope[i]) / (ds.h(i - 1) + ds.h(i));
  }
  d[0] = slope[0] + (slope[0] - slope[1]) * ds.h(0) / (ds.h(0) + ds.h(1));
  d[n - 1] = slope[n - 2] +
             (slope[n - 2] - slope[n - 3]) * ds.h(n - 2) / (ds.h(n - 3) + ds.h(n - 2));
  return DerivativeSet::unchecked(std::move(d));
}

/// Wraps user-supplied knot derivatives verbatim (e.g. exact derivatives of
/// a known generating function).
inline Expected<DerivativeSet> set_derivatives(const Dataset& ds, std::vector<double> d) {
  if (d.size() != ds.n()) {
    return Error{Errc::length_mismatch, "derivatives has " + std::to_string(d.size()) +
                                            " entries, expected " + std::to_string(ds.n())};
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i])) {
      return Error{Errc::parse_error, "non-finite derivative at position " + std::to_string(i + 1),
                   static_cast<int>(i + 1)};
    }
  }
  return DerivativeSet::unchecked(std::move(d));
}

}  // namespace zipfrac
