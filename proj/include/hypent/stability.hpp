#ifndef HYPENT_STABILITY_HPP
#define HYPENT_STABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypent/core.hpp"
#include "hypent/error.hpp"
#include "hypent/measures.hpp"
#include "hypent/probability.hpp"

namespace hypent {

/// Lesche metric sum_s |p_s - p'_s|.
template <typename T>
T lesche_norm(const RealDistribution<T>& P, const RealDistribution<T>& Q) {
  if (P.size() != Q.size()) throw Error(Errc::LengthMismatch, "distributions differ in N");
  return (P.probabilities() - Q.probabilities()).cwiseAbs().sum();
}

/// ||P1 - P1'|| e1 + ||P2 - P2'|| e2.
template <typename T>
Hyperbolic<T> lesche_norm_hyp(const HyperbolicDistribution<T>& A, const HyperbolicDistribution<T>& B) {
  if (A.size() != B.size()) throw Error(Errc::LengthMismatch, "distributions differ in N");
  if (A.dist_case() != B.dist_case()) throw Error(Errc::CaseMismatch, "distributions differ in case");
  return {(A.projection(0) - B.projection(0)).cwiseAbs().sum(),
          (A.projection(1) - B.projection(1)).cwiseAbs().sum()};
}

/// A measure together with its order, e.g. "renyi:0.5" or "renyi_hyp:0.5,2".
struct MeasureSpec {
  Measure measure;
  std::optional<HyperbolicNumber> order;
};

/// "a" means a 1_D, "a1,a2" means a1 e1 + a2 e2.
HyperbolicNumber parse_order(std::string_view text);
MeasureSpec parse_measure_spec(std::string_view text);
std::string to_string(const MeasureSpec& spec);

struct StabilityRecord {
  PerturbationFamily family;
  Eigen::Index n;
  double delta;
  Measure measure;
  std::optional<HyperbolicNumber> order;
  HyperbolicNumber norm;
  HyperbolicNumber ratio;
  std::optional<Errc> error;  // set on error rows; norm and ratio are then meaningless
};

bool operator==(const StabilityRecord& a, const StabilityRecord& b);

/// |M(A) - M(B)|_k / ((ln N) 1_D) for a pair of hyperbolic distributions.
HyperbolicNumber stability_ratio_hyp(const MeasureSpec& spec, const HyperbolicDistribution<double>& A,
                                     const HyperbolicDistribution<double>& B);

/// |M(P) - M(P')| / ln N, componentwise for hyperbolic measures, which are
/// evaluated on the embedded pair.
StabilityRecord stability_ratio(const MeasureSpec& spec, const PerturbationPair& pair);

struct SweepConfig {
  std::vector<PerturbationFamily> families;
  std::vector<Eigen::Index> n_grid;
  std::vector<double> delta_grid;
  std::vector<MeasureSpec> measures;
  std::uint64_t seed = 0;
};

/// Seed handed to the perturbation family for one (N, delta) cell.
std::uint64_t cell_seed(std::uint64_t seed, Eigen::Index n, double delta);

/// Cartesian product over the config. Rows are ordered by family, measure
/// (config order), N and delta; failing cells become error rows.
std::vector<StabilityRecord> stability_sweep(const SweepConfig& config);

}  // namespace hypent

#endif  // HYPENT_STABILITY_HPP
