#pragma once

#include <string>
#include <vector>

#include "zipfrac/types.hpp"

namespace zipfrac {

/// The built-in showcase dataset: seven strictly positive points with a
/// steep drop followed by a gentle tail — a shape on which positivity is
/// easy to lose and parameter effects are easy to see.
inline Dataset demo_dataset() {
  return validate_dataset({1.0, 3.0, 8.0, 10.0, 11.0, 12.0, 16.0},
                          {14.0, 2.0, 0.8, 0.65, 0.75, 0.7, 0.69})
      .value();
}

/// One ready-made parameter set for the showcase dataset. Alpha and delta
/// are fixed at 0.5 and 1.0 across all subintervals in every row.
struct DemoRow {
  std::string name;  // output file stem, e.g. "fig1b"
  std::string note;
  std::vector<double> lambdas;
  std::vector<double> betas;
  std::vector<double> gammas;
  std::vector<int> eps;
};

inline constexpr double kDemoAlpha = 0.5;
inline constexpr double kDemoDelta = 1.0;

/// Six parameter rows: (a) unconstrained scaling that loses positivity,
/// (b) a certified positive configuration, (c) a lambda-only perturbation
/// of (b), (d) a lambda+beta+gamma perturbation, and (e)/(f) the classical
/// lambda = 0 interpolants with plain and fully reversed signatures.
inline const std::vector<DemoRow>& demo_rows() {
  static const std::vector<DemoRow> rows = {
      {"fig1a",
       "scaling factors exceed the positivity bounds; the curve dips below zero",
       {0.1323, 0.2419, 0.0561, 0.0454, 0.0526, 0.149},
       {0.5028, 1.1853, 0.5, 0.5, 0.5, 3.9649},
       {0.5, 0.5, 0.5868, 0.5221, 0.5, 0.5},
       {1, 1, 1, 1, 1, 1}},
      {"fig1b",
       "certified positive configuration",
       {0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049},
       {0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5},
       {0.5, 5.5, 0.53, 0.5221, 0.5, 0.5},
       {1, 1, 1, 1, 1, 1}},
      {"fig1c",
       "lambda perturbation of the certified row; effects stay local",
       {0.1323, 0.0201, 0.04, 0.0454, 0.0001, 0.033},
       {0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5},
       {0.5, 5.5, 0.53, 0.5221, 0.5, 0.5},
       {1, 1, 1, 1, 1, 1}},
      {"fig1d",
       "lambda, beta, and gamma perturbed together",
       {0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049},
       {0.5028, 3.56, 6.5, 12.5, 22.5, 0.5},
       {0.5, 5.5, 53.0, 0.5221, 0.5, 0.5},
       {1, 1, 1, 1, 1, 1}},
      {"fig1e",
       "classical interpolant: zero scaling, plain orientation",
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
       {0.5028, 3.56, 6.5, 12.5, 22.5, 0.5},
       {0.5, 5.5, 53.0, 0.5221, 0.5, 0.5},
       {0, 0, 0, 0, 0, 0}},
      {"fig1f",
       "classical interpolant: zero scaling, every interval reversed",
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
       {0.5028, 3.56, 6.5, 12.5, 22.5, 0.5},
       {0.5, 5.5, 53.0, 0.5221, 0.5, 0.5},
       {1, 1, 1, 1, 1, 1}},
  };
  return rows;
}

/// Builds the validated config for one demo row against the showcase data.
inline ZipperConfig demo_config(const Dataset& ds, const DemoRow& row) {
  const std::size_t m = ds.n() - 1;
  Signature sig = validate_signature(row.eps, ds).value();
  return validate_config(ds, std::move(sig), row.lambdas,
                         std::vector<double>(m, kDemoAlpha), row.betas, row.gammas,
                         std::vector<double>(m, kDemoDelta))
      .value();
}

}  // namespace zipfrac
