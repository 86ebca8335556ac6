#include "ulrich/arith.hpp"

namespace ulrich {

namespace {

std::string_view name_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricGram: return "AsymmetricGram";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NonIntegralChi: return "NonIntegralChi";
    case ErrorCode::NonIntegralC2: return "NonIntegralC2";
    case ErrorCode::MissingHypothesis: return "MissingHypothesis";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::UnboundedSolutions: return "UnboundedSolutions";
    case ErrorCode::InvalidPolarization: return "InvalidPolarization";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace

std::string_view to_string(ErrorCode code) { return name_of(code); }

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(message), code_(code), path_(std::move(path)) {}

bool Error::is_internal() const noexcept {
  switch (code_) {
    case ErrorCode::NonIntegralGenus:
    case ErrorCode::NonIntegralChi:
    case ErrorCode::NonIntegralC2:
    case ErrorCode::InvariantViolation:
      return true;
    default:
      return false;
  }
}

std::optional<Integer> half_if_even(const Integer& n) {
  if (!is_even(n)) return std::nullopt;
  return Integer(n / 2);
}

Integer exact_half(const Integer& n, ErrorCode code, std::string_view what) {
  if (auto h = half_if_even(n)) return *h;
  throw Error(code, std::string(what) + " is not integral: " + to_string(n) + "/2");
}

Integer choose2(const Integer& r) { return r * (r - 1) / 2; }

std::optional<Integer> as_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  return Integer(boost::multiprecision::numerator(q));
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (auto n = as_integer(q)) return n->str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace ulrich
