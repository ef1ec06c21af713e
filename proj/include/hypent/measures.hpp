#ifndef HYPENT_MEASURES_HPP
#define HYPENT_MEASURES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "hypent/core.hpp"
#include "hypent/probability.hpp"

namespace hypent {

/// Every measure the CLI and the stability lab can evaluate by name.
enum class Measure {
  Shannon,
  Extropy,
  Renyi,
  Hartley,
  Collision,
  RenyiExtropy,
  ShannonViaGenerating,
  StrongShannonHyp,
  StrongShannonViaGenerating,
  RenyiHyp,
  RenyiHypMixed,
  RenyiHypLimit,
  HartleyHyp,
  CollisionHyp,
  StrongExtropyHyp,
  RenyiExtropyHyp,
};

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view name);
const std::vector<Measure>& all_measures();

bool is_real_measure(Measure m);
bool needs_order(Measure m);

struct EntropyValue {
  HyperbolicNumber value;  // real measures are embedded as x 1_D
  Measure measure;
  std::optional<HyperbolicNumber> order;
  Eigen::Index n = 0;
  bool degenerate_n = false;
};

/// Real measures are accepted only when both projections coincide (an
/// embedded real distribution) and, for ordered ones, when a1 == a2.
EntropyValue evaluate(Measure m, const HyperbolicDistribution<double>& dist,
                      std::optional<HyperbolicNumber> order = std::nullopt);

}  // namespace hypent

#endif  // HYPENT_MEASURES_HPP
