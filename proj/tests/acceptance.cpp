// Acceptance suite: one self-contained check per release criterion, each
// printing a single PASS/FAIL line. Exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zipfrac/cli_commands.hpp"
#include "zipfrac/config.hpp"
#include "zipfrac/demo.hpp"
#include "zipfrac/derivatives.hpp"
#include "zipfrac/emit.hpp"
#include "zipfrac/error_bounds.hpp"
#include "zipfrac/evaluator.hpp"
#include "zipfrac/ifs.hpp"
#include "zipfrac/positivity.hpp"
#include "zipfrac/types.hpp"

namespace {

using namespace zipfrac;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixtures_dir() {
  if (const char* env = std::getenv("ZIPFRAC_FIXTURES")) return env;
  return "fixtures";
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "zipfrac_acceptance";
  fs::create_directories(dir);
  return dir;
}

struct Fixture {
  RunConfig rc;
  Dataset ds;
  DerivativeSet dv;
  ZipperIfs ifs;
};

Expected<Fixture> load_fixture(const std::string& name) {
  auto rcx = load_run_config(fixtures_dir() + "/" + name + ".json");
  if (!rcx.ok()) return rcx.error();
  auto ds = dataset_from(rcx.value());
  if (!ds.ok()) return ds.error();
  auto sig = signature_from(rcx.value(), ds.value());
  if (!sig.ok()) return sig.error();
  auto dv = derivatives_from(rcx.value(), ds.value());
  if (!dv.ok()) return dv.error();
  auto cfg = zipper_config_from(rcx.value(), ds.value(), sig.value());
  if (!cfg.ok()) return cfg.error();
  auto ifs = build_ifs(ds.value(), dv.value(), std::move(cfg).value());
  if (!ifs.ok()) return ifs.error();
  return Fixture{std::move(rcx).value(), std::move(ds).value(), std::move(dv).value(),
                 std::move(ifs).value()};
}

Dataset random_dataset(std::mt19937_64& rng, bool positive_values) {
  std::uniform_int_distribution<int> points(4, 9);
  std::uniform_real_distribution<double> origin(-5.0, 5.0);
  std::uniform_real_distribution<double> step(0.5, 2.0);
  std::uniform_real_distribution<double> value(positive_values ? 0.1 : -10.0,
                                               positive_values ? 20.0 : 10.0);
  const int n = points(rng);
  std::vector<double> t(n), f(n);
  t[0] = origin(rng);
  f[0] = value(rng);
  for (int i = 1; i < n; ++i) {
    t[i] = t[i - 1] + step(rng);
    f[i] = value(rng);
  }
  return validate_dataset(t, f).value();
}

Signature random_signature(std::mt19937_64& rng, const Dataset& ds) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<int> bits(ds.n() - 1);
  for (int& b : bits) b = bit(rng);
  return validate_signature(bits, ds).value();
}

bool pass(int id, const std::string& what) {
  std::cout << "PASS criterion " << id << ": " << what << "\n";
  return true;
}

bool fail(int id, const std::string& what) {
  std::cout << "FAIL criterion " << id << ": " << what << "\n";
  return false;
}

// 1. The scaling-cap command reproduces the reference six-interval caps to
//    four decimals in under 0.1 s.
bool criterion1() {
  const fs::path cfg_path = scratch_dir() / "caps_only.json";
  {
    std::ofstream out(cfg_path, std::ios::binary);
    out << R"({"data": {"knots": [1, 3, 8, 10, 11, 12, 16],)"
        << R"( "values": [14, 2, 0.8, 0.65, 0.75, 0.7, 0.69]},)"
        << R"( "signature": [1, 1, 1, 1, 1, 1]})";
  }
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cmd_bounds(cfg_path.string(), CliOverrides{}, out, err);
  const double elapsed = ms_since(start);
  if (code != 0) return fail(1, "bounds command exited " + std::to_string(code));

  const std::string text = out.str();
  const auto at = text.find("lambda_max:");
  if (at == std::string::npos) return fail(1, "no lambda_max line in output");
  std::istringstream nums(text.substr(at + std::string("lambda_max:").size()));
  const double reference[6] = {0.1333, 0.0571, 0.0464, 0.0536, 0.05, 0.0492};
  for (int j = 0; j < 6; ++j) {
    double got = 0.0;
    if (!(nums >> got)) return fail(1, "could not parse cap " + std::to_string(j + 1));
    // "Four decimal places" up to one unit in the last place: the reference
    // row mixes rounding and truncation, so exact string equality is not a
    // meaningful target.
    if (std::abs(got - reference[j]) > 1e-4 + 1e-12) {
      return fail(1, "cap " + std::to_string(j + 1) + " = " + std::to_string(got) +
                         ", reference " + std::to_string(reference[j]));
    }
  }
  if (elapsed >= 100.0) return fail(1, "took " + std::to_string(elapsed) + " ms");
  std::ostringstream msg;
  msg << "six scaling caps match the reference row to 4 decimals in " << elapsed << " ms";
  return pass(1, msg.str());
}

// 2. Every showcase fixture interpolates its data: knot residuals stay
//    under 1e-8 with default settings, all six rows under 5 s.
bool criterion2() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f"}) {
    auto fx = load_fixture(name);
    if (!fx.ok()) return fail(2, std::string(name) + ": " + fx.error().describe());
    auto fp = fixed_point(fx.value().ifs);
    if (!fp.ok()) return fail(2, std::string(name) + ": " + fp.error().describe());
    if (!fp.value().converged) return fail(2, std::string(name) + " did not converge");
    for (std::size_t i = 0; i < fx.value().ds.n(); ++i) {
      auto v = eval_at(fx.value().ifs, fp.value().result, fx.value().ds.knot(i));
      if (!v.ok()) return fail(2, std::string(name) + ": " + v.error().describe());
      worst = std::max(worst, std::abs(v.value() - fx.value().ds.value(i)));
    }
  }
  const double elapsed = ms_since(start);
  if (worst > 1e-8) return fail(2, "worst knot residual " + std::to_string(worst));
  if (elapsed >= 5000.0) return fail(2, "took " + std::to_string(elapsed) + " ms");
  std::ostringstream msg;
  msg << "six fixtures interpolate their data, worst knot residual " << worst << ", "
      << elapsed << " ms";
  return pass(2, msg.str());
}

// 3. The positive/negative showcase pair separates as documented: the
//    certified row stays positive on a 10001-point probe; the unconstrained
//    row dips below zero only inside the second and sixth subintervals.
bool criterion3() {
  auto good = load_fixture("fig1b");
  if (!good.ok()) return fail(3, "fig1b: " + good.error().describe());
  auto good_rep = empirical_check(good.value().ifs);
  if (!good_rep.ok()) return fail(3, "fig1b: " + good_rep.error().describe());
  if (!good_rep.value().certified) return fail(3, "fig1b not certified");
  if (good_rep.value().probe_size != 10001) {
    return fail(3, "probe size " + std::to_string(good_rep.value().probe_size));
  }
  if (!(good_rep.value().empirical_min > 0.0)) {
    return fail(3, "fig1b empirical min " + std::to_string(good_rep.value().empirical_min));
  }

  auto bad = load_fixture("fig1a");
  if (!bad.ok()) return fail(3, "fig1a: " + bad.error().describe());
  auto bad_rep = empirical_check(bad.value().ifs);
  if (!bad_rep.ok()) return fail(3, "fig1a: " + bad_rep.error().describe());
  if (!(bad_rep.value().empirical_min < 0.0)) return fail(3, "fig1a never went negative");
  if (bad_rep.value().violating_intervals.empty()) {
    return fail(3, "fig1a has no recorded violations");
  }
  for (std::size_t j : bad_rep.value().violating_intervals) {
    if (j != 2 && j != 6) {
      return fail(3, "negative sample in interval " + std::to_string(j) +
                         ", expected only [3,8] and [12,16]");
    }
  }
  std::ostringstream msg;
  msg << "certified row min " << good_rep.value().empirical_min
      << " > 0; unconstrained row min " << bad_rep.value().empirical_min
      << " < 0, confined to [3,8] and [12,16]";
  return pass(3, msg.str());
}

// 4. With zero scaling the fixed point agrees with the per-interval
//    closed form to 1e-10 across the whole grid, both orientations.
bool criterion4() {
  double worst = 0.0;
  for (const char* name : {"fig1e", "fig1f"}) {
    auto fx = load_fixture(name);
    if (!fx.ok()) return fail(4, std::string(name) + ": " + fx.error().describe());
    auto fp = fixed_point(fx.value().ifs);
    if (!fp.ok()) return fail(4, std::string(name) + ": " + fp.error().describe());
    const SampledFunction& f = fp.value().result;
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto direct = classical_eval(fx.value().ifs, f.abscissa(k));
      if (!direct.ok()) return fail(4, std::string(name) + ": " + direct.error().describe());
      worst = std::max(worst, std::abs(direct.value() - f.values[k]));
    }
  }
  if (worst > 1e-10) return fail(4, "sup gap to closed form " + std::to_string(worst));
  std::ostringstream msg;
  msg << "zero-scaling fixed points match the closed form, sup gap " << worst;
  return pass(4, msg.str());
}

// 5. The grid operator contracts at rate at most max|lambda| for random
//    configurations and random function pairs.
bool criterion5() {
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> lam_frac(-0.9, 0.9);
  std::uniform_real_distribution<double> shape_pos(0.05, 2.0);
  std::uniform_real_distribution<double> shape_nn(0.0, 5.0);
  std::uniform_real_distribution<double> fun(-10.0, 10.0);
  const std::size_t grid = 257;

  double worst_excess = -1.0;
  for (int c = 0; c < 10; ++c) {
    Dataset ds = random_dataset(rng, false);
    Signature sig = random_signature(rng, ds);
    const std::size_t m = ds.n() - 1;
    std::vector<double> lam(m), alpha(m), beta(m), gamma(m), delta(m);
    for (std::size_t j = 0; j < m; ++j) {
      lam[j] = lam_frac(rng) * ds.a_mag(j);
      alpha[j] = shape_pos(rng);
      beta[j] = shape_nn(rng);
      gamma[j] = shape_nn(rng);
      delta[j] = shape_pos(rng);
    }
    auto cfg = validate_config(ds, sig, lam, alpha, beta, gamma, delta);
    if (!cfg.ok()) return fail(5, cfg.error().describe());
    const double lam_inf = cfg.value().lambda_inf();
    auto ifs = build_ifs(ds, amm_derivatives(ds), std::move(cfg).value());
    if (!ifs.ok()) return fail(5, ifs.error().describe());

    for (int p = 0; p < 50; ++p) {
      SampledFunction g{ds.t_first(), ds.t_last(), std::vector<double>(grid)};
      SampledFunction h = g;
      for (std::size_t k = 0; k < grid; ++k) {
        g.values[k] = fun(rng);
        h.values[k] = fun(rng);
      }
      auto tg = apply_operator(ifs.value(), g);
      auto th = apply_operator(ifs.value(), h);
      if (!tg.ok() || !th.ok()) return fail(5, "operator application failed");
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < grid; ++k) {
        num = std::max(num, std::abs(tg.value().values[k] - th.value().values[k]));
        den = std::max(den, std::abs(g.values[k] - h.values[k]));
      }
      const double ratio = num / den;
      worst_excess = std::max(worst_excess, ratio - lam_inf);
      if (ratio > lam_inf + 1e-9) {
        std::ostringstream msg;
        msg << "config " << c + 1 << " pair " << p + 1 << ": ratio " << ratio
            << " exceeds max|lambda| " << lam_inf;
        return fail(5, msg.str());
      }
    }
  }
  std::ostringstream msg;
  msg << "500 operator applications contract within max|lambda| (worst excess "
      << worst_excess << ")";
  return pass(5, msg.str());
}

// 6. One hundred random configurations drawn strictly inside the
//    positivity bounds all certify and stay positive on a dense probe,
//    within 60 s.
bool criterion6() {
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> lam_frac(0.0, 0.99);
  std::uniform_real_distribution<double> shape_pos(0.05, 2.0);
  std::uniform_real_distribution<double> margin(0.01, 1.01);
  const auto start = Clock::now();

  double least_min = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 100; ++c) {
    Dataset ds = random_dataset(rng, true);
    Signature sig = random_signature(rng, ds);
    DerivativeSet dv = amm_derivatives(ds);
    const std::size_t m = ds.n() - 1;

    auto caps = lambda_bounds(ds, sig);
    if (!caps.ok()) return fail(6, caps.error().describe());
    std::vector<double> lam(m), alpha(m), delta(m);
    for (std::size_t j = 0; j < m; ++j) {
      lam[j] = lam_frac(rng) * caps.value()[j];
      alpha[j] = shape_pos(rng);
      delta[j] = shape_pos(rng);
    }
    auto sb = shape_bounds(ds, dv, sig, lam, alpha, delta);
    if (!sb.ok()) return fail(6, sb.error().describe());
    std::vector<double> beta(m), gamma(m);
    for (std::size_t j = 0; j < m; ++j) {
      beta[j] = 1.01 * sb.value().beta_min[j] + margin(rng);
      gamma[j] = 1.01 * sb.value().gamma_min[j] + margin(rng);
    }
    auto cfg = validate_config(ds, sig, lam, alpha, beta, gamma, delta);
    if (!cfg.ok()) return fail(6, cfg.error().describe());
    auto ifs = build_ifs(ds, dv, std::move(cfg).value());
    if (!ifs.ok()) return fail(6, ifs.error().describe());

    auto rep = empirical_check(ifs.value());
    if (!rep.ok()) return fail(6, "draw " + std::to_string(c + 1) + ": " +
                                      rep.error().describe());
    if (!rep.value().certified) return fail(6, "draw " + std::to_string(c + 1) +
                                                   " not certified");
    if (!(rep.value().empirical_min > 0.0)) {
      return fail(6, "draw " + std::to_string(c + 1) + " probe min " +
                         std::to_string(rep.value().empirical_min));
    }
    least_min = std::min(least_min, rep.value().empirical_min);
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 60000.0) return fail(6, "took " + std::to_string(elapsed) + " ms");
  std::ostringstream msg;
  msg << "100 in-bounds random draws all certified and positive (least probe min "
      << least_min << ", " << elapsed << " ms)";
  return pass(6, msg.str());
}

// 7. The scaling caps are sharp: stepping one cap by +1e-9 pushes an
//    endpoint coefficient of that interval out of the positive cone, and
//    stepping by -1e-9 keeps both positive.
bool criterion7() {
  Dataset ds = demo_dataset();
  DerivativeSet dv = amm_derivatives(ds);
  const Signature sig = Signature::ones(6);
  auto caps = lambda_bounds(ds, sig);
  if (!caps.ok()) return fail(7, caps.error().describe());
  const DemoRow& base = demo_rows()[1];  // certified row: all caps respected

  int tested = 0;
  for (std::size_t j = 0; j < 6; ++j) {
    if (caps.value()[j] >= ds.a_mag(j)) continue;  // cap set by contraction, not by data
    for (double offset : {+1e-9, -1e-9}) {
      std::vector<double> lam = base.lambdas;
      lam[j] = caps.value()[j] + offset;
      auto cfg = validate_config(ds, sig, lam, std::vector<double>(6, kDemoAlpha),
                                 base.betas, base.gammas, std::vector<double>(6, kDemoDelta));
      if (!cfg.ok()) return fail(7, cfg.error().describe());
      auto rc = rational_coeffs(ds, dv, cfg.value(), j);
      if (!rc.ok()) return fail(7, rc.error().describe());
      const bool both_positive = rc.value().u > 0.0 && rc.value().x > 0.0;
      if (offset > 0.0 && both_positive) {
        return fail(7, "interval " + std::to_string(j + 1) +
                           ": u and x still positive above the cap");
      }
      if (offset < 0.0 && !both_positive) {
        return fail(7, "interval " + std::to_string(j + 1) +
                           ": coefficient not positive below the cap");
      }
    }
    ++tested;
  }
  if (tested == 0) return fail(7, "no interval had a data-limited cap");
  std::ostringstream msg;
  msg << "endpoint coefficients flip sign exactly at the scaling cap on " << tested
      << " intervals";
  return pass(7, msg.str());
}

// 8. The a-priori error bound dominates the measured error against a known
//    smooth generator, and its reversal term alone dominates the distance
//    to the plain-orientation interpolant, across 10 configurations.
bool criterion8() {
  const double pi = std::numbers::pi;
  std::vector<double> knots(7), values(7), derivs(7);
  for (int i = 0; i < 7; ++i) {
    knots[i] = 2.0 * pi * i / 6.0;
    values[i] = 2.0 + std::sin(knots[i]);
    derivs[i] = std::cos(knots[i]);
  }
  Dataset ds = validate_dataset(knots, values).value();
  DerivativeSet dv = set_derivatives(ds, derivs).value();
  const ErrorBoundInputs inputs{.psi_sup = 3.0, .psi3_sup = 1.0, .c = 10.0};

  const std::vector<std::vector<int>> sigs = {
      {0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1}};
  const std::vector<double> lam_factors = {0.0, 0.25, 0.9};

  int config_no = 0;
  for (std::size_t s = 0; s < sigs.size(); ++s) {
    for (std::size_t lf = 0; lf < lam_factors.size(); ++lf) {
      if (s == 3 && lf != 2) continue;  // the extra mixed signature runs once
      ++config_no;
      Signature sig = validate_signature(sigs[s], ds).value();
      auto caps = lambda_bounds(ds, sig);
      if (!caps.ok()) return fail(8, caps.error().describe());
      std::vector<double> lam(6);
      for (std::size_t j = 0; j < 6; ++j) lam[j] = lam_factors[lf] * caps.value()[j];
      const std::vector<double> alpha(6, 1.0), beta(6, 3.0), gamma(6, 3.0), delta(6, 1.0);

      auto cfg = validate_config(ds, sig, lam, alpha, beta, gamma, delta);
      if (!cfg.ok()) return fail(8, cfg.error().describe());
      auto ifs = build_ifs(ds, dv, cfg.value());
      if (!ifs.ok()) return fail(8, ifs.error().describe());
      auto fp = fixed_point(ifs.value());
      if (!fp.ok() || !fp.value().converged) return fail(8, "fixed point did not converge");

      auto rep = bound_report(ds, dv, cfg.value(), inputs);
      if (!rep.ok()) return fail(8, rep.error().describe());
      if (!rep.value().spline_available || rep.value().psi_sup_estimated) {
        return fail(8, "bound did not use the supplied generator statistics");
      }

      double measured = 0.0;
      for (int k = 0; k <= 10000; ++k) {
        const double t = knots.front() + (knots.back() - knots.front()) * k / 10000.0;
        auto v = eval_at(ifs.value(), fp.value().result, t);
        if (!v.ok()) return fail(8, v.error().describe());
        measured = std::max(measured, std::abs(v.value() - (2.0 + std::sin(t))));
      }
      if (measured > rep.value().total) {
        std::ostringstream msg;
        msg << "config " << config_no << ": measured error " << measured
            << " exceeds reported bound " << rep.value().total;
        return fail(8, msg.str());
      }

      // Distance to the plain-orientation interpolant with the same
      // scaling and shape parameters.
      auto plain_cfg = validate_config(ds, Signature::zeros(6), lam, alpha, beta, gamma, delta);
      if (!plain_cfg.ok()) return fail(8, plain_cfg.error().describe());
      auto plain_ifs = build_ifs(ds, dv, std::move(plain_cfg).value());
      if (!plain_ifs.ok()) return fail(8, plain_ifs.error().describe());
      auto plain_fp = fixed_point(plain_ifs.value());
      if (!plain_fp.ok() || !plain_fp.value().converged) {
        return fail(8, "plain-orientation fixed point did not converge");
      }
      auto gap = measured_gap(fp.value().result, plain_fp.value().result);
      if (!gap.ok()) return fail(8, gap.error().describe());
      if (gap.value() > rep.value().zipper_term) {
        std::ostringstream msg;
        msg << "config " << config_no << ": orientation gap " << gap.value()
            << " exceeds reversal term " << rep.value().zipper_term;
        return fail(8, msg.str());
      }
    }
  }
  if (config_no != 10) return fail(8, "ran " + std::to_string(config_no) + " configs, not 10");
  return pass(8, "reported bound dominates measured error in all 10 configurations");
}

// 9. The derivative estimator is exact on affine data and keeps interior
//    estimates between the neighboring chord slopes, over 100 random
//    datasets each.
bool criterion9() {
  std::mt19937_64 rng(901);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_int_distribution<int> points(3, 12);
  std::uniform_real_distribution<double> origin(-5.0, 5.0);
  std::uniform_real_distribution<double> step(0.1, 3.0);

  for (int trial = 0; trial < 100; ++trial) {
    const int n = points(rng);
    const double slope = coef(rng), intercept = coef(rng);
    std::vector<double> t(n), f(n);
    t[0] = origin(rng);
    for (int i = 1; i < n; ++i) t[i] = t[i - 1] + step(rng);
    for (int i = 0; i < n; ++i) f[i] = slope * t[i] + intercept;
    Dataset ds = validate_dataset(t, f).value();
    DerivativeSet dv = amm_derivatives(ds);
    for (int i = 0; i < n; ++i) {
      if (std::abs(dv.at(i) - slope) > 1e-12) {
        return fail(9, "affine trial " + std::to_string(trial + 1) + ": d[" +
                           std::to_string(i) + "] off by " +
                           std::to_string(std::abs(dv.at(i) - slope)));
      }
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    Dataset ds = random_dataset(rng, false);
    DerivativeSet dv = amm_derivatives(ds);
    for (std::size_t i = 1; i + 1 < ds.n(); ++i) {
      const double left = (ds.value(i) - ds.value(i - 1)) / ds.h(i - 1);
      const double right = (ds.value(i + 1) - ds.value(i)) / ds.h(i);
      const double lo = std::min(left, right) - 1e-12;
      const double hi = std::max(left, right) + 1e-12;
      if (dv.at(i) < lo || dv.at(i) > hi) {
        return fail(9, "interior estimate outside the chord-slope envelope");
      }
    }
  }
  return pass(9, "estimator exact on affine data and chord-bounded at interior knots");
}

// 10. Two consecutive demo runs produce byte-identical CSV outputs. Runs
//     the installed binary when ZIPFRAC_BIN is set, else the in-process
//     command.
bool criterion10() {
  const fs::path d1 = scratch_dir() / "demo_run1";
  const fs::path d2 = scratch_dir() / "demo_run2";
  std::error_code ec;
  fs::remove_all(d1, ec);
  fs::remove_all(d2, ec);

  const char* bin = std::getenv("ZIPFRAC_BIN");
  for (const fs::path& dir : {d1, d2}) {
    if (bin) {
      const std::string cmd = std::string("\"") + bin + "\" demo --outdir \"" +
                              dir.string() + "\" > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return fail(10, "demo run failed: " + cmd);
    } else {
      std::ostringstream out, err;
      CliOverrides ov;
      ov.outdir = dir.string();
      if (cmd_demo(ov, out, err) != 0) return fail(10, "in-process demo run failed");
    }
  }

  for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f"}) {
    const fs::path a = d1 / (std::string(name) + ".csv");
    const fs::path b = d2 / (std::string(name) + ".csv");
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    if (!fa || !fb) return fail(10, std::string("missing output ") + name + ".csv");
    std::stringstream ba, bb;
    ba << fa.rdbuf();
    bb << fb.rdbuf();
    if (ba.str() != bb.str()) {
      return fail(10, std::string(name) + ".csv differs between runs");
    }
    if (ba.str().empty()) return fail(10, std::string(name) + ".csv is empty");
  }
  return pass(10, std::string("both demo runs (") + (bin ? "installed binary" : "in-process") +
                      ") produced byte-identical CSVs");
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion1();
  all &= criterion2();
  all &= criterion3();
  all &= criterion4();
  all &= criterion5();
  all &= criterion6();
  all &= criterion7();
  all &= criterion8();
  all &= criterion9();
  all &= criterion10();
  std::cout << (all ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
