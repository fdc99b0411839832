#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zipfrac/errors.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// Cubic trigonometric blending values at one angle in [0, pi/2]:
///   b0 = (1-sin)^3, b1 = sin(1-sin)^2, b2 = cos(1-cos)^2, b3 = (1-cos)^3.
/// All four are non-negative on [0, pi/2]; b0(0) = 1 and b3(pi/2) = 1.
struct TrigBasis {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

inline constexpr double kThetaSlack = 1e-12;

namespace detail {

inline TrigBasis basis_at(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double os = 1.0 - s;
  const double oc = 1.0 - c;
  return {os * os * os, s * os * os, c * oc * oc, oc * oc * oc};
}

/// d/dtheta of the four blending functions.
inline TrigBasis basis_dtheta(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double os = 1.0 - s;
  const double oc = 1.0 - c;
  return {
      -3.0 * c * os * os,
      c * os * (1.0 - 3.0 * s),
      s * oc * (3.0 * c - 1.0),
      3.0 * s * oc * oc,
  };
}

}  // namespace detail

/// Basis values at theta; theta may overshoot [0, pi/2] by at most 1e-12
/// (absorbed rounding), anything further is an error.
inline Expected<TrigBasis> trig_basis(double theta) {
  const double half_pi = std::numbers::pi / 2.0;
  if (theta < -kThetaSlack || theta > half_pi + kThetaSlack) {
    return Error{Errc::theta_out_of_range,
                 "theta = " + std::to_string(theta) + " outside [0, pi/2]"};
  }
  theta = std::clamp(theta, 0.0, half_pi);
  return detail::basis_at(theta);
}

/// Affine map for subinterval j (0-based): sends t_0 to t_{j+eps_j} and
/// t_{n-1} to t_{j+1-eps_j}. The slope is negative exactly when eps_j = 1.
inline Expected<AffineMap> affine_map(const Dataset& ds, std::size_t j, int eps_j) {
  if (j + 1 >= ds.n()) {
    return Error{Errc::index_out_of_range,
                 "interval " + std::to_string(j + 1) + " of " + std::to_string(ds.n() - 1),
                 static_cast<int>(j + 1)};
  }
  const double l = ds.length();
  const double left = ds.knot(j + static_cast<std::size_t>(eps_j));
  const double right = ds.knot(j + 1 - static_cast<std::size_t>(eps_j));
  const double a = (right - left) / l;
  const double b = (ds.t_last() * left - ds.t_first() * right) / l;
  return AffineMap{a, b};
}

/// Numerator coefficients and denominator parameters of one rational
/// segment M_j = p/q in the blending basis.
struct RationalCoeffs {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double x = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 1.0;
};

namespace detail {

/// Endpoint data for interval j after one level of self-reference has been
/// peeled off: starred values f*, and starred slopes d* built with the
/// interval-length ratio h_j/l.
///
/// Every scalar slope factor in the coefficient and bound formulas is the
/// ratio h_j/l, never the signed affine slope; the sign of the map lives
/// only in AffineMap. Reversal enters through the index swap (eps picks
/// which knot plays which endpoint role).
struct StarredData {
  double f_left;   // f_{j+eps_j}   - lambda_j * f_0
  double f_right;  // f_{j+1-eps_j} - lambda_j * f_{n-1}
  double d_left;   // (h_j/l) d_{j+eps_j}   - lambda_j * d_0
  double d_right;  // (h_j/l) d_{j+1-eps_j} - lambda_j * d_{n-1}
};

inline StarredData starred(const Dataset& ds, const DerivativeSet& dv, double lambda, int eps,
                           std::size_t j) {
  const std::size_t n = ds.n();
  const std::size_t il = j + static_cast<std::size_t>(eps);
  const std::size_t ir = j + 1 - static_cast<std::size_t>(eps);
  const double ratio = ds.a_mag(j);
  return {
      ds.value(il) - lambda * ds.value(0),
      ds.value(ir) - lambda * ds.value(n - 1),
      ratio * dv.at(il) - lambda * dv.at(0),
      ratio * dv.at(ir) - lambda * dv.at(n - 1),
  };
}

inline RationalCoeffs coeffs_for(const Dataset& ds, const DerivativeSet& dv,
                                 const ZipperConfig& cfg, std::size_t j) {
  const StarredData st = starred(ds, dv, cfg.lambda(j), cfg.eps(j), j);
  const double scale = 2.0 * ds.length() / std::numbers::pi;
  RationalCoeffs rc;
  rc.alpha = cfg.alpha(j);
  rc.beta = cfg.beta(j);
  rc.gamma = cfg.gamma(j);
  rc.delta = cfg.delta(j);
  rc.u = rc.alpha * st.f_left;
  rc.v = rc.beta * st.f_left + scale * rc.alpha * st.d_left;
  // w pairs gamma with the value part and delta with the slope part; that
  // is the pairing under which w > 0 is equivalent to the gamma lower
  // bound used in positivity.hpp.
  rc.w = rc.gamma * st.f_right - scale * rc.delta * st.d_right;
  rc.x = rc.delta * st.f_right;
  return rc;
}

inline double theta_of(const Dataset& ds, double t) {
  return std::numbers::pi / 2.0 * (t - ds.t_first()) / ds.length();
}

inline double eval_m(const RationalCoeffs& rc, const Dataset& ds, double t) {
  const double half_pi = std::numbers::pi / 2.0;
  const double theta = std::clamp(theta_of(ds, t), 0.0, half_pi);
  const TrigBasis b = basis_at(theta);
  const double p = b.b0 * rc.u + b.b1 * rc.v + b.b2 * rc.w + b.b3 * rc.x;
  const double q = b.b0 * rc.alpha + b.b1 * rc.beta + b.b2 * rc.gamma + b.b3 * rc.delta;
  return p / q;
}

inline double eval_m_deriv(const RationalCoeffs& rc, const Dataset& ds, double t) {
  const double half_pi = std::numbers::pi / 2.0;
  const double theta = std::clamp(theta_of(ds, t), 0.0, half_pi);
  const TrigBasis b = basis_at(theta);
  const TrigBasis db = basis_dtheta(theta);
  const double p = b.b0 * rc.u + b.b1 * rc.v + b.b2 * rc.w + b.b3 * rc.x;
  const double q = b.b0 * rc.alpha + b.b1 * rc.beta + b.b2 * rc.gamma + b.b3 * rc.delta;
  const double dp = db.b0 * rc.u + db.b1 * rc.v + db.b2 * rc.w + db.b3 * rc.x;
  const double dq = db.b0 * rc.alpha + db.b1 * rc.beta + db.b2 * rc.gamma + db.b3 * rc.delta;
  const double dtheta_dt = std::numbers::pi / (2.0 * ds.length());
  return (dp * q - p * dq) / (q * q) * dtheta_dt;
}

}  // namespace detail

/// Segment coefficients for interval j:
///   u = alpha * f*_left                 x = delta * f*_right
///   v = beta  * f*_left  + (2l/pi) * alpha * d*_left
///   w = gamma * f*_right - (2l/pi) * delta * d*_right
/// where the starred endpoint data has one level of scaling peeled off
/// (see detail::starred).
inline Expected<RationalCoeffs> rational_coeffs(const Dataset& ds, const DerivativeSet& dv,
                                                const ZipperConfig& cfg, std::size_t j) {
  if (j + 1 >= ds.n()) {
    return Error{Errc::index_out_of_range,
                 "interval " + std::to_string(j + 1) + " of " + std::to_string(ds.n() - 1),
                 static_cast<int>(j + 1)};
  }
  if (dv.size() != ds.n()) {
    return Error{Errc::length_mismatch, "derivative set does not match dataset size"};
  }
  return detail::coeffs_for(ds, dv, cfg, j);
}

/// Rational segment value M_j(t) = p(theta)/q(theta) with
/// theta = (pi/2)(t - t_0)/l; t must lie in the dataset domain.
inline double eval_M(const RationalCoeffs& rc, const Dataset& ds, double t) {
  return detail::eval_m(rc, ds, t);
}

/// Analytic derivative dM_j/dt via the quotient rule and the basis
/// theta-derivatives (finite differences are used only as a test oracle).
inline double eval_M_deriv(const RationalCoeffs& rc, const Dataset& ds, double t) {
  return detail::eval_m_deriv(rc, ds, t);
}

/// The assembled zipper system: per subinterval an affine map, a rational
/// segment, and a scaling factor. Immutable; evaluation lives in
/// evaluator.hpp.
class ZipperIfs {
 public:
  const Dataset& dataset() const { return ds_; }
  const DerivativeSet& derivatives() const { return dv_; }
  const ZipperConfig& config() const { return cfg_; }
  const std::vector<AffineMap>& maps() const { return maps_; }
  const std::vector<RationalCoeffs>& coeffs() const { return coeffs_; }

  std::size_t intervals() const { return maps_.size(); }
  const AffineMap& map(std::size_t j) const { return maps_[j]; }
  const RationalCoeffs& coeff(std::size_t j) const { return coeffs_[j]; }
  double lambda(std::size_t j) const { return cfg_.lambda(j); }
  double lambda_inf() const { return cfg_.lambda_inf(); }
  bool is_classical() const { return cfg_.is_classical(); }

  /// F_j(t, f) = lambda_j * f + M_j(t).
  double apply_F(std::size_t j, double t, double f) const {
    return cfg_.lambda(j) * f + detail::eval_m(coeffs_[j], ds_, t);
  }

  friend Expected<ZipperIfs> build_ifs(Dataset ds, DerivativeSet dv, ZipperConfig cfg);

 private:
  ZipperIfs(Dataset ds, DerivativeSet dv, ZipperConfig cfg, std::vector<AffineMap> maps,
            std::vector<RationalCoeffs> coeffs)
      : ds_(std::move(ds)),
        dv_(std::move(dv)),
        cfg_(std::move(cfg)),
        maps_(std::move(maps)),
        coeffs_(std::move(coeffs)) {}

  Dataset ds_;
  DerivativeSet dv_;
  ZipperConfig cfg_;
  std::vector<AffineMap> maps_;
  std::vector<RationalCoeffs> coeffs_;
};

/// Assembles the full system. By construction every map satisfies the
/// endpoint identities F_j(t_0, f_0) = f_{j+eps_j} and
/// F_j(t_{n-1}, f_{n-1}) = f_{j+1-eps_j}, and the slope-level identities
/// (lambda_j dv + M_j'(t)) / (h_j/l) = d at the matching knots.
inline Expected<ZipperIfs> build_ifs(Dataset ds, DerivativeSet dv, ZipperConfig cfg) {
  if (dv.size() != ds.n()) {
    return Error{Errc::length_mismatch, "derivative set has " + std::to_string(dv.size()) +
                                            " entries, expected " + std::to_string(ds.n())};
  }
  if (cfg.lambdas().size() != ds.n() - 1) {
    return Error{Errc::length_mismatch, "config sized for " +
                                            std::to_string(cfg.lambdas().size() + 1) +
                                            " points, dataset has " + std::to_string(ds.n())};
  }
  const std::size_t m = ds.n() - 1;
  std::vector<AffineMap> maps(m);
  std::vector<RationalCoeffs> coeffs(m);
  for (std::size_t j = 0; j < m; ++j) {
    maps[j] = affine_map(ds, j, cfg.eps(j)).value();
    coeffs[j] = detail::coeffs_for(ds, dv, cfg, j);
  }
  return ZipperIfs(std::move(ds), std::move(dv), std::move(cfg), std::move(maps),
                   std::move(coeffs));
}

}  // namespace zipfrac
