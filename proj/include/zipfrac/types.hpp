#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "zipfrac/errors.hpp"

namespace zipfrac {

/// Strictly increasing knots t_0..t_{n-1} with values f_0..f_{n-1}, n >= 3.
/// Immutable after construction; all indices in the C++ API are 0-based
/// (error messages and reports use 1-based interval numbers).
class Dataset {
 public:
  std::size_t n() const { return knots_.size(); }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  double knot(std::size_t i) const { return knots_[i]; }
  double value(std::size_t i) const { return values_[i]; }

  double t_first() const { return knots_.front(); }
  double t_last() const { return knots_.back(); }

  /// Domain length l = t_{n-1} - t_0.
  double length() const { return knots_.back() - knots_.front(); }

  /// Local mesh h_j = t_{j+1} - t_j.
  double h(std::size_t j) const { return knots_[j + 1] - knots_[j]; }

  /// Largest local mesh.
  double h_max() const {
    double m = 0.0;
    for (std::size_t j = 0; j + 1 < n(); ++j) m = std::max(m, h(j));
    return m;
  }

  /// Interval-length ratio h_j / l. This is the contraction magnitude of
  /// the j-th affine map regardless of orientation.
  double a_mag(std::size_t j) const { return h(j) / length(); }

  /// Index j of the subinterval containing s. Intervals are half-open
  /// [t_j, t_{j+1}) with the last one closed; a point equal to an interior
  /// knot belongs to the interval starting there.
  std::size_t interval_of(double s) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    if (it == knots_.begin()) return 0;
    std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
    return std::min(j, n() - 2);
  }

  friend Expected<Dataset> validate_dataset(std::vector<double> knots,
                                            std::vector<double> values);

 private:
  Dataset(std::vector<double> knots, std::vector<double> values)
      : knots_(std::move(knots)), values_(std::move(values)) {}

  std::vector<double> knots_;
  std::vector<double> values_;
};

/// Checks the dataset invariants and returns a Dataset or a structured
/// error. Input order is preserved; nothing is silently sorted.
inline Expected<Dataset> validate_dataset(std::vector<double> knots,
                                          std::vector<double> values) {
  if (knots.size() != values.size()) {
    return Error{Errc::length_mismatch,
                 "knots has " + std::to_string(knots.size()) + " entries, values has " +
                     std::to_string(values.size())};
  }
  if (knots.size() < 3) {
    return Error{Errc::too_few_points,
                 "need at least 3 data points, got " + std::to_string(knots.size())};
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i]) || !std::isfinite(values[i])) {
      return Error{Errc::parse_error, "non-finite entry at position " + std::to_string(i + 1),
                   static_cast<int>(i + 1)};
    }
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) {
      return Error{Errc::non_increasing_knots,
                   "knots must be strictly increasing; violated between positions " +
                       std::to_string(i + 1) + " and " + std::to_string(i + 2),
                   static_cast<int>(i + 1)};
    }
  }
  return Dataset(std::move(knots), std::move(values));
}

/// Orientation bits, one per subinterval: bit j = 1 reverses the j-th map.
class Signature {
 public:
  const std::vector<int>& bits() const { return bits_; }
  int bit(std::size_t j) const { return bits_[j]; }
  std::size_t size() const { return bits_.size(); }

  /// Sup norm: 1 if any bit is set, else 0.
  int sup_norm() const {
    for (int b : bits_)
      if (b != 0) return 1;
    return 0;
  }

  static Signature zeros(std::size_t m) { return Signature(std::vector<int>(m, 0)); }
  static Signature ones(std::size_t m) { return Signature(std::vector<int>(m, 1)); }

  friend Expected<Signature> validate_signature(std::vector<int> bits, const Dataset& ds);

 private:
  explicit Signature(std::vector<int> bits) : bits_(std::move(bits)) {}
  std::vector<int> bits_;
};

inline Expected<Signature> validate_signature(std::vector<int> bits, const Dataset& ds) {
  if (bits.size() != ds.n() - 1) {
    return Error{Errc::length_mismatch,
                 "signature has " + std::to_string(bits.size()) + " entries, expected " +
                     std::to_string(ds.n() - 1)};
  }
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != 0 && bits[j] != 1) {
      return Error{Errc::parse_error, "signature entries must be 0 or 1",
                   static_cast<int>(j + 1)};
    }
  }
  return Signature(std::move(bits));
}

/// Per-interval scaling factors and shape parameters, validated against a
/// dataset: |lambda_j| < h_j/l (contractivity) and alpha_j > 0, delta_j > 0,
/// beta_j >= 0, gamma_j >= 0 (keeps every denominator strictly positive).
class ZipperConfig {
 public:
  const Signature& signature() const { return sig_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }
  const std::vector<double>& gammas() const { return gammas_; }
  const std::vector<double>& deltas() const { return deltas_; }

  double lambda(std::size_t j) const { return lambdas_[j]; }
  double alpha(std::size_t j) const { return alphas_[j]; }
  double beta(std::size_t j) const { return betas_[j]; }
  double gamma(std::size_t j) const { return gammas_[j]; }
  double delta(std::size_t j) const { return deltas_[j]; }
  int eps(std::size_t j) const { return sig_.bit(j); }

  double lambda_inf() const {
    double m = 0.0;
    for (double v : lambdas_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_classical() const {
    for (double v : lambdas_)
      if (v != 0.0) return false;
    return true;
  }

  friend Expected<ZipperConfig> validate_config(const Dataset& ds, Signature sig,
                                                std::vector<double> lambdas,
                                                std::vector<double> alphas,
                                                std::vector<double> betas,
                                                std::vector<double> gammas,
                                                std::vector<double> deltas);

 private:
  ZipperConfig(Signature sig, std::vector<double> lambdas, std::vector<double> alphas,
               std::vector<double> betas, std::vector<double> gammas, std::vector<double> deltas)
      : sig_(std::move(sig)),
        lambdas_(std::move(lambdas)),
        alphas_(std::move(alphas)),
        betas_(std::move(betas)),
        gammas_(std::move(gammas)),
        deltas_(std::move(deltas)) {}

  Signature sig_;
  std::vector<double> lambdas_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
  std::vector<double> gammas_;
  std::vector<double> deltas_;
};

inline Expected<ZipperConfig> validate_config(const Dataset& ds, Signature sig,
                                              std::vector<double> lambdas,
                                              std::vector<double> alphas,
                                              std::vector<double> betas,
                                              std::vector<double> gammas,
                                              std::vector<double> deltas) {
  const std::size_t m = ds.n() - 1;
  const std::pair<const std::vector<double>*, const char*> lists[] = {
      {&lambdas, "lambdas"}, {&alphas, "alphas"}, {&betas, "betas"},
      {&gammas, "gammas"},   {&deltas, "deltas"},
  };
  if (sig.size() != m) {
    return Error{Errc::length_mismatch, "signature has " + std::to_string(sig.size()) +
                                            " entries, expected " + std::to_string(m)};
  }
  for (const auto& [vec, name] : lists) {
    if (vec->size() != m) {
      return Error{Errc::length_mismatch, std::string(name) + " has " +
                                              std::to_string(vec->size()) +
                                              " entries, expected " + std::to_string(m)};
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    if (!std::isfinite(lambdas[j]) || !std::isfinite(alphas[j]) || !std::isfinite(betas[j]) ||
        !std::isfinite(gammas[j]) || !std::isfinite(deltas[j])) {
      return Error{Errc::parse_error, "non-finite parameter in interval " + std::to_string(j + 1),
                   static_cast<int>(j + 1)};
    }
    if (!(std::abs(lambdas[j]) < ds.a_mag(j))) {
      return Error{Errc::non_contractive_scaling,
                   "|lambda| = " + std::to_string(std::abs(lambdas[j])) +
                       " must be < h_j/l = " + std::to_string(ds.a_mag(j)) + " in interval " +
                       std::to_string(j + 1),
                   static_cast<int>(j + 1)};
    }
    if (!(alphas[j] > 0.0) || !(deltas[j] > 0.0) || betas[j] < 0.0 || gammas[j] < 0.0) {
      return Error{Errc::non_positive_denominator_param,
                   "need alpha > 0, delta > 0, beta >= 0, gamma >= 0 in interval " +
                       std::to_string(j + 1),
                   static_cast<int>(j + 1)};
    }
  }
  return ZipperConfig(std::move(sig), std::move(lambdas), std::move(alphas), std::move(betas),
                      std::move(gammas), std::move(deltas));
}

/// Affine map L(t) = a*t + b taking [t_0, t_{n-1}] onto one subinterval.
/// The slope is signed: a < 0 exactly when the interval is reversed.
struct AffineMap {
  double a = 0.0;
  double b = 0.0;

  double operator()(double t) const { return a * t + b; }
  double inverse(double s) const { return (s - b) / a; }
};

/// First derivatives at the knots, one per data point.
class DerivativeSet {
 public:
  const std::vector<double>& d() const { return d_; }
  double at(std::size_t i) const { return d_[i]; }
  std::size_t size() const { return d_.size(); }

  static DerivativeSet unchecked(std::vector<double> d) { return DerivativeSet(std::move(d)); }

 private:
  explicit DerivativeSet(std::vector<double> d) : d_(std::move(d)) {}
  std::vector<double> d_;
};

/// Values on a uniform grid over [t0, t1], endpoints included.
struct SampledFunction {
  double t0 = 0.0;
  double t1 = 1.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double step() const { return (t1 - t0) / static_cast<double>(values.size() - 1); }
  double abscissa(std::size_t k) const {
    return t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(values.size() - 1);
  }

  /// Piecewise-linear read at t; t is clamped to the grid span.
  double interpolate(double t) const {
    const std::size_t n = values.size();
    const double u = (t - t0) / (t1 - t0) * static_cast<double>(n - 1);
    if (u <= 0.0) return values.front();
    if (u >= static_cast<double>(n - 1)) return values.back();
    const std::size_t i = std::min(static_cast<std::size_t>(u), n - 2);
    const double w = u - static_cast<double>(i);
    return values[i] * (1.0 - w) + values[i + 1] * w;
  }

  bool same_grid(const SampledFunction& other) const {
    return values.size() == other.values.size() && t0 == other.t0 && t1 == other.t1;
  }
};

}  // namespace zipfrac
