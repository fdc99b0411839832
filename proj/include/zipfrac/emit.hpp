#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zipfrac/errors.hpp"
#include "zipfrac/evaluator.hpp"
#include "zipfrac/positivity.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

namespace detail {

/// Shortest exact decimal form a double round-trips from: %.17g.
inline std::string full_digits(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string two_decimals(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

/// Writes text to a file, byte-for-byte.
inline Expected<bool> write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return Error{Errc::io_error, "cannot open '" + path + "' for writing"};
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    return Error{Errc::io_error, "write failed for '" + path + "'"};
  }
  return true;
}

/// CSV of a sampled curve: header `t,value`, one `%.17g,%.17g` row per
/// grid point, `\n` newlines. The same curve always serializes to the
/// same bytes.
inline std::string render_csv(const SampledFunction& f) {
  std::string out = "t,value\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out += detail::full_digits(f.abscissa(k));
    out += ',';
    out += detail::full_digits(f.values[k]);
    out += '\n';
  }
  return out;
}

/// Reads back a `t,value` CSV (the emitter's own format).
inline Expected<SampledFunction> parse_csv(const std::string& text) {
  SampledFunction f;
  std::vector<double> ts;
  std::size_t pos = text.find('\n');
  if (pos == std::string::npos || text.substr(0, pos) != "t,value") {
    return Error{Errc::parse_error, "missing t,value header"};
  }
  ++pos;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      return Error{Errc::parse_error, "row without comma: '" + line + "'"};
    }
    try {
      ts.push_back(std::stod(line.substr(0, comma)));
      f.values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      return Error{Errc::parse_error, "non-numeric row: '" + line + "'"};
    }
  }
  if (ts.size() < 2) {
    return Error{Errc::parse_error, "need at least 2 rows"};
  }
  f.t0 = ts.front();
  f.t1 = ts.back();
  return f;
}

/// Self-contained SVG plot: one polyline for the curve, circles at the
/// knots, red fill wherever the curve drops below zero. The viewport is
/// the data bounding box with 5% margins. Presentational only.
inline std::string render_svg(const SampledFunction& f, const Dataset& ds) {
  constexpr double width = 880.0;
  constexpr double height = 520.0;

  double ymin = f.values[0];
  double ymax = f.values[0];
  for (double v : f.values) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  if (ymax - ymin < 1e-12) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  const double xspan = f.t1 - f.t0;
  const double yspan = ymax - ymin;
  const double xpad = 0.05 * xspan;
  const double ypad = 0.05 * yspan;

  const auto px = [&](double t) {
    return (t - (f.t0 - xpad)) / (xspan + 2 * xpad) * width;
  };
  const auto py = [&](double v) {
    return ((ymax + ypad) - v) / (yspan + 2 * ypad) * height;
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    detail::two_decimals(width) + "\" height=\"" + detail::two_decimals(height) +
                    "\" viewBox=\"0 0 " + detail::two_decimals(width) + " " +
                    detail::two_decimals(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Sub-zero regions, filled red between the curve and the zero line,
  // with linear interpolation at the crossings.
  if (ymin < 0.0 && ymax > 0.0) {
    const double y0 = py(0.0);
    std::size_t k = 0;
    while (k < f.size()) {
      if (f.values[k] >= 0.0) {
        ++k;
        continue;
      }
      std::string pts;
      double t_enter = f.abscissa(k);
      if (k > 0) {
        const double v0 = f.values[k - 1];
        const double v1 = f.values[k];
        t_enter = f.abscissa(k - 1) + (f.abscissa(k) - f.abscissa(k - 1)) * (v0 / (v0 - v1));
      }
      pts += detail::two_decimals(px(t_enter)) + "," + detail::two_decimals(y0);
      std::size_t end = k;
      while (end < f.size() && f.values[end] < 0.0) {
        pts += " " + detail::two_decimals(px(f.abscissa(end))) + "," +
               detail::two_decimals(py(f.values[end]));
        ++end;
      }
      double t_exit = f.abscissa(end - 1);
      if (end < f.size()) {
        const double v0 = f.values[end - 1];
        const double v1 = f.values[end];
        t_exit = f.abscissa(end - 1) + (f.abscissa(end) - f.abscissa(end - 1)) * (v0 / (v0 - v1));
      }
      pts += " " + detail::two_decimals(px(t_exit)) + "," + detail::two_decimals(y0);
      svg += "<polygon points=\"" + pts + "\" fill=\"#d62728\" fill-opacity=\"0.35\"/>\n";
      k = end;
    }
  }

  // Zero axis when visible.
  if (ymin - ypad < 0.0 && ymax + ypad > 0.0) {
    const double y0 = py(0.0);
    svg += "<line x1=\"0\" y1=\"" + detail::two_decimals(y0) + "\" x2=\"" +
           detail::two_decimals(width) + "\" y2=\"" + detail::two_decimals(y0) +
           "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  }

  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) svg += " ";
    svg += detail::two_decimals(px(f.abscissa(i))) + "," + detail::two_decimals(py(f.values[i]));
  }
  svg += "\"/>\n";

  for (std::size_t i = 0; i < ds.n(); ++i) {
    svg += "<circle cx=\"" + detail::two_decimals(px(ds.knot(i))) + "\" cy=\"" +
           detail::two_decimals(py(ds.value(i))) +
           "\" r=\"3.5\" fill=\"#111\" stroke=\"white\" stroke-width=\"1\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// JSON for an evaluation run.
inline nlohmann::json eval_report_json(const EvalReport& report, bool classical_path,
                                       double knot_residual_max) {
  return nlohmann::json{
      {"converged", report.converged},
      {"iterations", report.iterations},
      {"final_change", report.final_change},
      {"contraction_observed", report.contraction_observed},
      {"grid_size", report.result.size()},
      {"classical_path", classical_path},
      {"knot_residual_max", knot_residual_max},
  };
}

/// JSON for a positivity verdict.
inline nlohmann::json positivity_report_json(const PositivityReport& report) {
  nlohmann::json j{
      {"certified", report.certified},
      {"detail", report.detail},
      {"warnings", report.warnings},
  };
  if (report.empirical_done) {
    j["probe_size"] = report.probe_size;
    j["empirical_min"] = report.empirical_min;
    j["violating_intervals"] = report.violating_intervals;
  }
  return j;
}

/// JSON for parameter bounds; beta_min/gamma_min included when computed.
inline nlohmann::json bounds_json(const std::vector<double>& lambda_max,
                                  const std::vector<double>* beta_min,
                                  const std::vector<double>* gamma_min) {
  nlohmann::json j{{"lambda_max", lambda_max}};
  if (beta_min) j["beta_min"] = *beta_min;
  if (gamma_min) j["gamma_min"] = *gamma_min;
  return j;
}

}  // namespace zipfrac
