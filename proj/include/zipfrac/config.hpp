#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zipfrac/derivatives.hpp"
#include "zipfrac/errors.hpp"
#include "zipfrac/evaluator.hpp"
#include "zipfrac/types.hpp"

namespace zipfrac {

/// Parsed run configuration. Presence mirrors the file: anything the file
/// omitted is empty/unset here, and each command decides what it needs.
/// Scalar shape parameters are already broadcast to per-interval vectors.
struct RunConfig {
  std::vector<double> knots;
  std::vector<double> values;
  std::optional<std::vector<double>> derivatives;  // absent -> arithmetic-mean estimate
  std::vector<int> signature;
  std::optional<std::vector<double>> lambdas;
  std::optional<std::vector<double>> alphas;
  std::optional<std::vector<double>> betas;
  std::optional<std::vector<double>> gammas;
  std::optional<std::vector<double>> deltas;
  EvalSettings eval;
  std::optional<std::string> csv_path;
  std::optional<std::string> json_path;
  std::optional<std::string> svg_path;
};

namespace detail {

using nlohmann::json;

inline Error field_error(const std::string& path, const std::string& what) {
  return Error{Errc::parse_error, path + ": " + what};
}

inline Expected<std::vector<double>> number_array(const json& node, const std::string& path) {
  if (!node.is_array()) return field_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      return field_error(path + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(node[i].get<double>());
  }
  return out;
}

/// Shape-parameter field: a single number broadcasts to all m intervals.
inline Expected<std::vector<double>> broadcast_array(const json& node, const std::string& path,
                                                     std::size_t m) {
  if (node.is_number()) return std::vector<double>(m, node.get<double>());
  auto arr = number_array(node, path);
  if (!arr.ok()) return arr.error();
  if (arr.value().size() != m) {
    return field_error(path, "expected " + std::to_string(m) + " entries, got " +
                                 std::to_string(arr.value().size()));
  }
  return arr;
}

}  // namespace detail

/// Parses a config from JSON text. Structural problems are reported with
/// the offending field path; numeric/semantic validation happens later in
/// the type factories.
inline Expected<RunConfig> parse_run_config(const std::string& text) {
  using detail::field_error;
  nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
  if (root.is_discarded()) {
    return Error{Errc::parse_error, "config is not valid JSON"};
  }
  if (!root.is_object()) return field_error("(root)", "expected a JSON object");

  RunConfig rc;
  if (!root.contains("data") || !root["data"].is_object()) {
    return field_error("data", "required object with knots and values");
  }
  const nlohmann::json& data = root["data"];
  if (!data.contains("knots")) return field_error("data.knots", "required");
  if (!data.contains("values")) return field_error("data.values", "required");
  auto knots = detail::number_array(data["knots"], "data.knots");
  if (!knots.ok()) return knots.error();
  auto values = detail::number_array(data["values"], "data.values");
  if (!values.ok()) return values.error();
  rc.knots = std::move(knots).value();
  rc.values = std::move(values).value();
  const std::size_t n = rc.knots.size();
  const std::size_t m = n >= 1 ? n - 1 : 0;

  if (!root.contains("signature")) return field_error("signature", "required");
  const nlohmann::json& sig = root["signature"];
  if (!sig.is_array()) return field_error("signature", "expected an array of 0/1 entries");
  for (std::size_t j = 0; j < sig.size(); ++j) {
    if (!sig[j].is_number_integer() || (sig[j].get<int>() != 0 && sig[j].get<int>() != 1)) {
      return field_error("signature[" + std::to_string(j) + "]", "expected 0 or 1");
    }
    rc.signature.push_back(sig[j].get<int>());
  }

  if (root.contains("derivatives")) {
    auto d = detail::number_array(root["derivatives"], "derivatives");
    if (!d.ok()) return d.error();
    rc.derivatives = std::move(d).value();
  }
  if (root.contains("lambdas")) {
    auto lam = detail::number_array(root["lambdas"], "lambdas");
    if (!lam.ok()) return lam.error();
    rc.lambdas = std::move(lam).value();
  }
  const std::pair<const char*, std::optional<std::vector<double>>*> shapes[] = {
      {"alphas", &rc.alphas}, {"betas", &rc.betas}, {"gammas", &rc.gammas}, {"deltas", &rc.deltas}};
  for (const auto& [key, slot] : shapes) {
    if (root.contains(key)) {
      auto v = detail::broadcast_array(root[key], key, m);
      if (!v.ok()) return v.error();
      *slot = std::move(v).value();
    }
  }

  if (root.contains("eval")) {
    const nlohmann::json& ev = root["eval"];
    if (!ev.is_object()) return field_error("eval", "expected an object");
    if (ev.contains("grid_size")) {
      if (!ev["grid_size"].is_number_integer() || ev["grid_size"].get<long long>() < 0) {
        return field_error("eval.grid_size", "expected a non-negative integer");
      }
      rc.eval.grid_size = ev["grid_size"].get<std::size_t>();
    }
    if (ev.contains("tol")) {
      if (!ev["tol"].is_number()) return field_error("eval.tol", "expected a number");
      rc.eval.tol = ev["tol"].get<double>();
    }
    if (ev.contains("max_iters")) {
      if (!ev["max_iters"].is_number_integer() || ev["max_iters"].get<long long>() < 0) {
        return field_error("eval.max_iters", "expected a non-negative integer");
      }
      rc.eval.max_iters = ev["max_iters"].get<std::size_t>();
    }
  }

  if (root.contains("outputs")) {
    const nlohmann::json& out = root["outputs"];
    if (!out.is_object()) return field_error("outputs", "expected an object");
    const std::pair<const char*, std::optional<std::string>*> slots[] = {
        {"csv", &rc.csv_path}, {"json", &rc.json_path}, {"svg", &rc.svg_path}};
    for (const auto& [key, slot] : slots) {
      if (out.contains(key)) {
        if (!out[key].is_string()) return field_error(std::string("outputs.") + key,
                                                      "expected a string path");
        *slot = out[key].get<std::string>();
      }
    }
  }
  return rc;
}

/// Reads and parses a config file.
inline Expected<RunConfig> load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return Error{Errc::io_error, "cannot open config file '" + path + "'"};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

/// Assembles the validated dataset from a parsed config.
inline Expected<Dataset> dataset_from(const RunConfig& rc) {
  auto ds = validate_dataset(rc.knots, rc.values);
  if (!ds.ok()) {
    Error e = ds.error();
    e.message = "data: " + e.message;
    return e;
  }
  return ds;
}

/// Assembles the validated signature.
inline Expected<Signature> signature_from(const RunConfig& rc, const Dataset& ds) {
  auto sig = validate_signature(rc.signature, ds);
  if (!sig.ok()) {
    Error e = sig.error();
    e.message = "signature: " + e.message;
    return e;
  }
  return sig;
}

/// Knot derivatives: the file's values when given, else the
/// arithmetic-mean estimate from the data.
inline Expected<DerivativeSet> derivatives_from(const RunConfig& rc, const Dataset& ds) {
  if (!rc.derivatives) return amm_derivatives(ds);
  auto dv = set_derivatives(ds, *rc.derivatives);
  if (!dv.ok()) {
    Error e = dv.error();
    e.message = "derivatives: " + e.message;
    return e;
  }
  return dv;
}

/// Full per-interval parameter set; every field must be present in the
/// file for commands that build the interpolant.
inline Expected<ZipperConfig> zipper_config_from(const RunConfig& rc, const Dataset& ds,
                                                 Signature sig) {
  const std::pair<const char*, const std::optional<std::vector<double>>*> required[] = {
      {"lambdas", &rc.lambdas}, {"alphas", &rc.alphas},   {"betas", &rc.betas},
      {"gammas", &rc.gammas},   {"deltas", &rc.deltas}};
  for (const auto& [key, slot] : required) {
    if (!slot->has_value()) {
      return Error{Errc::parse_error, std::string(key) + ": required for this command"};
    }
  }
  return validate_config(ds, std::move(sig), *rc.lambdas, *rc.alphas, *rc.betas, *rc.gammas,
                         *rc.deltas);
}

}  // namespace zipfrac
