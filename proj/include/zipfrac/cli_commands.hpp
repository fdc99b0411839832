#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zipfrac/config.hpp"
#include "zipfrac/demo.hpp"
#include "zipfrac/derivatives.hpp"
#include "zipfrac/emit.hpp"
#include "zipfrac/errors.hpp"
#include "zipfrac/evaluator.hpp"
#include "zipfrac/ifs.hpp"
#include "zipfrac/positivity.hpp"

namespace zipfrac {

/// Command-line overrides; set fields win over config-file values.
struct CliOverrides {
  std::optional<std::size_t> grid;
  std::optional<double> tol;
  std::optional<std::size_t> max_iters;
  std::optional<std::string> outdir;  // --outdir flag or ZIPFRAC_OUTDIR
};

namespace detail {

inline void apply_overrides(EvalSettings& eval, const CliOverrides& ov) {
  if (ov.grid) eval.grid_size = *ov.grid;
  if (ov.tol) eval.tol = *ov.tol;
  if (ov.max_iters) eval.max_iters = *ov.max_iters;
}

/// Relative output paths land under the output root (--outdir, else
/// ZIPFRAC_OUTDIR, else the working directory); absolute paths are kept.
inline std::string resolve_out(const std::string& path, const CliOverrides& ov) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.is_absolute() || !ov.outdir) return p.string();
  return (fs::path(*ov.outdir) / p).string();
}

inline Expected<bool> write_out(const std::string& resolved, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path parent = fs::path(resolved).parent_path();
  if (!parent.empty()) fs::create_directories(parent, ec);
  if (ec) {
    return Error{Errc::io_error,
                 "cannot create directory '" + parent.string() + "': " + ec.message()};
  }
  return write_text(resolved, text);
}

inline int fail(std::ostream& err, const Error& e) {
  err << "error: " << e.describe() << "\n";
  return 1;
}

inline std::string four_decimals(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

/// Everything the interpolating commands need, assembled from one config
/// file with command-line overrides applied.
struct LoadedRun {
  RunConfig rc;
  Dataset ds;
  DerivativeSet dv;
  ZipperIfs ifs;
};

inline Expected<LoadedRun> load_full_run(const std::string& config_path,
                                         const CliOverrides& ov) {
  auto rc = load_run_config(config_path);
  if (!rc.ok()) return rc.error();
  apply_overrides(rc.value().eval, ov);
  auto ds = dataset_from(rc.value());
  if (!ds.ok()) return ds.error();
  auto sig = signature_from(rc.value(), ds.value());
  if (!sig.ok()) return sig.error();
  auto dv = derivatives_from(rc.value(), ds.value());
  if (!dv.ok()) return dv.error();
  auto cfg = zipper_config_from(rc.value(), ds.value(), std::move(sig).value());
  if (!cfg.ok()) return cfg.error();
  auto ifs = build_ifs(ds.value(), dv.value(), std::move(cfg).value());
  if (!ifs.ok()) return ifs.error();
  return LoadedRun{std::move(rc).value(), std::move(ds).value(), std::move(dv).value(),
                   std::move(ifs).value()};
}

}  // namespace detail

/// `zipfrac interpolate <config>`: converge the interpolant and write the
/// sampled curve (CSV), the run report (JSON), and optionally a plot
/// (SVG). Output names default to the config file's stem.
inline int cmd_interpolate(const std::string& config_path, const CliOverrides& ov,
                           std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  auto run = detail::load_full_run(config_path, ov);
  if (!run.ok()) return detail::fail(err, run.error());
  const ZipperIfs& ifs = run.value().ifs;
  const RunConfig& rc = run.value().rc;

  auto fp = fixed_point(ifs, rc.eval);
  if (!fp.ok()) return detail::fail(err, fp.error());
  const EvalReport& report = fp.value();

  double residual = 0.0;
  for (std::size_t i = 0; i < run.value().ds.n(); ++i) {
    const double v = eval_at(ifs, report.result, run.value().ds.knot(i)).value();
    residual = std::max(residual, std::abs(v - run.value().ds.value(i)));
  }

  const std::string stem = fs::path(config_path).stem().string();
  const std::string csv_path =
      detail::resolve_out(rc.csv_path.value_or(stem + ".csv"), ov);
  const std::string json_path =
      detail::resolve_out(rc.json_path.value_or(stem + ".json"), ov);

  auto wrote = detail::write_out(csv_path, render_csv(report.result));
  if (!wrote.ok()) return detail::fail(err, wrote.error());
  nlohmann::json j = eval_report_json(report, ifs.is_classical(), residual);
  j["outputs"] = {{"csv", csv_path}, {"json", json_path}};
  if (rc.svg_path) {
    const std::string svg_path = detail::resolve_out(*rc.svg_path, ov);
    auto svg = detail::write_out(svg_path, render_svg(report.result, run.value().ds));
    if (!svg.ok()) return detail::fail(err, svg.error());
    j["outputs"]["svg"] = svg_path;
  }
  wrote = detail::write_out(json_path, j.dump(2) + "\n");
  if (!wrote.ok()) return detail::fail(err, wrote.error());

  out << "interpolated " << report.result.size() << " points, iterations "
      << report.iterations << ", final change " << report.final_change
      << (report.converged ? "" : " (NOT converged)") << ", knot residual " << residual
      << "\n";
  out << "wrote " << csv_path << " and " << json_path << "\n";
  if (!report.converged) {
    err << "error: NotConverged: tolerance not reached within max_iters\n";
    return 1;
  }
  return 0;
}

/// `zipfrac bounds <config>`: print the positivity bounds for the config's
/// data and signature — scaling-factor upper bounds always, beta/gamma
/// lower bounds when the config supplies lambdas (alpha, delta default to
/// 1 when absent, and the output says so).
inline int cmd_bounds(const std::string& config_path, const CliOverrides& ov, std::ostream& out,
                      std::ostream& err) {
  auto rcx = load_run_config(config_path);
  if (!rcx.ok()) return detail::fail(err, rcx.error());
  const RunConfig& rc = rcx.value();
  auto ds = dataset_from(rc);
  if (!ds.ok()) return detail::fail(err, ds.error());
  auto sig = signature_from(rc, ds.value());
  if (!sig.ok()) return detail::fail(err, sig.error());

  auto lb = lambda_bounds(ds.value(), sig.value());
  if (!lb.ok()) return detail::fail(err, lb.error());
  out << "lambda_max:";
  for (double b : lb.value()) out << " " << detail::four_decimals(b);
  out << "\n";

  const std::vector<double>* beta_ptr = nullptr;
  const std::vector<double>* gamma_ptr = nullptr;
  ShapeBounds sb;
  if (rc.lambdas) {
    auto dv = derivatives_from(rc, ds.value());
    if (!dv.ok()) return detail::fail(err, dv.error());
    const std::size_t m = ds.value().n() - 1;
    const bool defaulted = !rc.alphas || !rc.deltas;
    const std::vector<double> alphas = rc.alphas.value_or(std::vector<double>(m, 1.0));
    const std::vector<double> deltas = rc.deltas.value_or(std::vector<double>(m, 1.0));
    auto sbx = shape_bounds(ds.value(), dv.value(), sig.value(), *rc.lambdas, alphas, deltas);
    if (!sbx.ok()) return detail::fail(err, sbx.error());
    sb = std::move(sbx).value();
    beta_ptr = &sb.beta_min;
    gamma_ptr = &sb.gamma_min;
    if (defaulted) out << "note: alpha/delta not in config; lower bounds use 1.0\n";
    out << "beta_min:";
    for (double b : sb.beta_min) out << " " << detail::four_decimals(b);
    out << "\ngamma_min:";
    for (double g : sb.gamma_min) out << " " << detail::four_decimals(g);
    out << "\n";
  }

  if (rc.json_path) {
    const std::string json_path = detail::resolve_out(*rc.json_path, ov);
    auto wrote =
        detail::write_out(json_path, bounds_json(lb.value(), beta_ptr, gamma_ptr).dump(2) + "\n");
    if (!wrote.ok()) return detail::fail(err, wrote.error());
    out << "wrote " << json_path << "\n";
  }
  return 0;
}

/// `zipfrac check <config>`: certificate plus dense-probe verdict.
/// Exit code 0 exactly when the certificate holds and the measured
/// minimum is positive.
inline int cmd_check(const std::string& config_path, const CliOverrides& ov, std::ostream& out,
                     std::ostream& err) {
  auto run = detail::load_full_run(config_path, ov);
  if (!run.ok()) return detail::fail(err, run.error());
  auto repx = empirical_check(run.value().ifs, run.value().rc.eval);
  if (!repx.ok()) return detail::fail(err, repx.error());
  const PositivityReport& rep = repx.value();

  out << "certified: " << (rep.certified ? "true" : "false") << "\n";
  out << "detail: " << rep.detail << "\n";
  for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
  out << "empirical_min: " << detail::full_digits(rep.empirical_min) << " over "
      << rep.probe_size << " probe points\n";
  if (!rep.violating_intervals.empty()) {
    out << "negative samples in intervals:";
    for (std::size_t j : rep.violating_intervals) out << " " << j;
    out << "\n";
  }
  if (run.value().rc.json_path) {
    const std::string json_path = detail::resolve_out(*run.value().rc.json_path, ov);
    auto wrote = detail::write_out(json_path, positivity_report_json(rep).dump(2) + "\n");
    if (!wrote.ok()) return detail::fail(err, wrote.error());
    out << "wrote " << json_path << "\n";
  }
  return (rep.certified && rep.empirical_min > 0.0) ? 0 : 1;
}

/// `zipfrac demo [--outdir D]`: run the six built-in parameter rows on
/// the showcase dataset and write a CSV+SVG pair per row.
inline int cmd_demo(const CliOverrides& ov, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (ov.outdir) {
    std::error_code ec;
    fs::create_directories(*ov.outdir, ec);
    if (ec) {
      return detail::fail(err, Error{Errc::io_error, "cannot create output directory '" +
                                                         *ov.outdir + "': " + ec.message()});
    }
  }
  EvalSettings settings;
  detail::apply_overrides(settings, ov);
  const Dataset ds = demo_dataset();
  const DerivativeSet dv = amm_derivatives(ds);

  bool all_ok = true;
  for (const DemoRow& row : demo_rows()) {
    ZipperConfig cfg = demo_config(ds, row);
    auto ifs = build_ifs(ds, dv, std::move(cfg));
    if (!ifs.ok()) return detail::fail(err, ifs.error());
    auto fp = fixed_point(ifs.value(), settings);
    if (!fp.ok()) return detail::fail(err, fp.error());
    const EvalReport& report = fp.value();
    if (!report.converged) all_ok = false;

    double curve_min = report.result.values[0];
    for (double v : report.result.values) curve_min = std::min(curve_min, v);

    const std::string csv_path = detail::resolve_out(row.name + ".csv", ov);
    const std::string svg_path = detail::resolve_out(row.name + ".svg", ov);
    auto w1 = detail::write_out(csv_path, render_csv(report.result));
    if (!w1.ok()) return detail::fail(err, w1.error());
    auto w2 = detail::write_out(svg_path, render_svg(report.result, ds));
    if (!w2.ok()) return detail::fail(err, w2.error());

    out << row.name << ": iterations " << report.iterations << ", min "
        << detail::full_digits(curve_min) << (report.converged ? "" : " (NOT converged)")
        << " — " << row.note << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace zipfrac
