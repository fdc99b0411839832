#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace zipfrac {

/// Failure categories surfaced by validation and evaluation entry points.
enum class Errc {
  non_increasing_knots,
  too_few_points,
  length_mismatch,
  non_contractive_scaling,
  non_positive_denominator_param,
  non_positive_data,
  lambda_out_of_bounds,
  theta_out_of_range,
  index_out_of_range,
  grid_mismatch,
  out_of_domain,
  not_classical,
  not_converged,
  parse_error,
  io_error,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_increasing_knots: return "NonIncreasingKnots";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::non_contractive_scaling: return "NonContractiveScaling";
    case Errc::non_positive_denominator_param: return "NonPositiveDenominatorParam";
    case Errc::non_positive_data: return "NonPositiveData";
    case Errc::lambda_out_of_bounds: return "LambdaOutOfBounds";
    case Errc::theta_out_of_range: return "ThetaOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::not_classical: return "NotClassical";
    case Errc::not_converged: return "NotConverged";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

/// Structured error: category, human-readable message, and the 1-based
/// interval/knot index it refers to (0 when not index-specific).
struct Error {
  Errc code;
  std::string message;
  int index = 0;

  std::string describe() const {
    std::string s = errc_name(code);
    if (index > 0) s += "(" + std::to_string(index) + ")";
    if (!message.empty()) s += ": " + message;
    return s;
  }
};

/// Value-or-error return type. Bad user data never throws; accessing the
/// wrong alternative is a programming error and asserts.
template <typename T>
class Expected {
 public:
  Expected(T value) : state_(std::move(value)) {}
  Expected(Error err) : state_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(state_);
  }
  T& value() & {
    assert(ok());
    return std::get<T>(state_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(state_));
  }

  const Error& error() const {
    assert(!ok());
    return std::get<Error>(state_);
  }

 private:
  std::variant<T, Error> state_;
};

}  // namespace zipfrac
