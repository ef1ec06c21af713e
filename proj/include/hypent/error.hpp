#ifndef HYPENT_ERROR_HPP
#define HYPENT_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypent {

/// Machine-readable failure category. The name of each enumerator is what
/// `to_string` returns and what the CLI prints as the leading diagnostic.
enum class Errc {
  DivisionByZeroDivisor,
  NonFinite,
  DomainError,
  InvalidInterval,
  ParseError,
  OutsideDomain,
  NonConvergent,
  HypothesisViolated,
  EmptyDomain,
  NegativeComponent,
  ComponentExceedsOne,
  SumInvalid,
  CaseMismatch,
  LambdaOutOfRange,
  BadDelta,
  LengthMismatch,
  ZeroProbability,
  ZeroComponent,
  OrderOne,
  NegativeOrder,
  NonPositiveOrder,
  OrderOnZeroDivisorLine,
  DegenerateN,
  IoError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZeroDivisor: return "DivisionByZeroDivisor";
    case Errc::NonFinite: return "NonFinite";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::ParseError: return "ParseError";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::EmptyDomain: return "EmptyDomain";
    case Errc::NegativeComponent: return "NegativeComponent";
    case Errc::ComponentExceedsOne: return "ComponentExceedsOne";
    case Errc::SumInvalid: return "SumInvalid";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::LambdaOutOfRange: return "LambdaOutOfRange";
    case Errc::BadDelta: return "BadDelta";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroProbability: return "ZeroProbability";
    case Errc::ZeroComponent: return "ZeroComponent";
    case Errc::OrderOne: return "OrderOne";
    case Errc::NegativeOrder: return "NegativeOrder";
    case Errc::NonPositiveOrder: return "NonPositiveOrder";
    case Errc::OrderOnZeroDivisorLine: return "OrderOnZeroDivisorLine";
    case Errc::DegenerateN: return "DegenerateN";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

inline std::optional<Errc> parse_errc(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Errc::IoError); ++i) {
    if (to_string(static_cast<Errc>(i)) == name) return static_cast<Errc>(i);
  }
  return std::nullopt;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypent

#endif  // HYPENT_ERROR_HPP
