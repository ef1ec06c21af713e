#ifndef HYPENT_VERIFY_HPP
#define HYPENT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypent/calculus.hpp"
#include "hypent/probability.hpp"

namespace hypent {

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDULL;

/// Overridable with --tol name=value.
struct Tolerances {
  double sum_tol = kSumTol;
  double limit_tol = kLimitTol;
  double cr_tol = kCauchyRiemannTol;
  double lhopital_tol = kLHopitalTol;
  double convexity_slack = kConvexitySlack;
};

/// "name=value" with name one of sum_tol, limit_tol, cr_tol, lhopital_tol,
/// convexity_slack. The value must be positive and finite.
void apply_tolerance(Tolerances& tol, std::string_view assignment);

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyInput {
  std::string label;
  std::string text;  // raw file contents, validated inside the suite
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol;
  std::vector<VerifyInput> inputs;
};

/// Every module's invariants, each with its own stream derived from the seed.
/// The output is a pure function of the options.
std::vector<InvariantResult> run_invariants(const VerifyOptions& options);

/// "PASS name: detail" lines and a closing summary line.
std::string format_report(const std::vector<InvariantResult>& results);

}  // namespace hypent

#endif  // HYPENT_VERIFY_HPP
