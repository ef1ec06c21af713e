#ifndef HYPENT_PROBABILITY_HPP
#define HYPENT_PROBABILITY_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hypent/core.hpp"
#include "hypent/error.hpp"
#include "hypent/random.hpp"

namespace hypent {

/// Absolute per-component tolerance on distribution sums.
inline constexpr double kSumTol = 1e-9;

template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// N x 2 idempotent components: column 0 is the e1 projection, column 1 the e2 projection.
template <typename T>
using ComponentMatrix = Eigen::Matrix<T, Eigen::Dynamic, 2>;

namespace detail {

template <typename T>
void check_entry_range(T value, Eigen::Index s, T sum_tol) {
  if (!std::isfinite(value)) {
    throw Error(Errc::NonFinite, "entry " + std::to_string(s) + " is not finite");
  }
  if (value < T(0)) {
    std::ostringstream os;
    os << "entry " << s << " is " << value << " < 0";
    throw Error(Errc::NegativeComponent, os.str());
  }
  if (value > T(1) + sum_tol) {
    std::ostringstream os;
    os << "entry " << s << " is " << value << " > 1";
    throw Error(Errc::ComponentExceedsOne, os.str());
  }
}

}  // namespace detail

/// Finite probability vector (p_1, ..., p_N).
template <typename T>
class RealDistribution {
 public:
  explicit RealDistribution(Vec<T> p, T sum_tol = T(kSumTol)) : p_(std::move(p)) {
    if (p_.size() == 0) throw Error(Errc::DegenerateN, "distribution needs N >= 1");
    for (Eigen::Index s = 0; s < p_.size(); ++s) detail::check_entry_range(p_[s], s, sum_tol);
    const T total = p_.sum();
    if (std::abs(total - T(1)) > sum_tol) {
      std::ostringstream os;
      os.precision(17);
      os << "sum is " << total;
      throw Error(Errc::SumInvalid, os.str());
    }
  }

  static RealDistribution from(std::span<const T> values, T sum_tol = T(kSumTol)) {
    return RealDistribution(Eigen::Map<const Vec<T>>(values.data(), static_cast<Eigen::Index>(values.size())),
                            sum_tol);
  }

  Eigen::Index size() const { return p_.size(); }
  const Vec<T>& probabilities() const { return p_; }
  T operator[](Eigen::Index s) const { return p_[s]; }

 private:
  Vec<T> p_;
};

enum class DistributionCase { Full, E1Only, E2Only };

template <typename T>
class HyperbolicDistribution;

/// Classifies N x 2 idempotent components into Full / E1Only / E2Only.
/// Vectors mixing pure-e1 and pure-e2 entries are rejected outright.
template <typename T>
HyperbolicDistribution<T> validate(const ComponentMatrix<T>& comps, T sum_tol = T(kSumTol));

constexpr std::string_view to_string(DistributionCase c) {
  switch (c) {
    case DistributionCase::Full: return "full";
    case DistributionCase::E1Only: return "e1";
    case DistributionCase::E2Only: return "e2";
  }
  return "full";
}

/// Vector of hyperbolic numbers in [0, 1_D] summing to 1_D, 1 e1 or 1 e2.
/// Only constructible through `validate`, `embed`, `uniform_hyp` and `mix`.
template <typename T>
class HyperbolicDistribution {
 public:
  Eigen::Index size() const { return comps_.rows(); }
  DistributionCase dist_case() const { return case_; }
  const ComponentMatrix<T>& components() const { return comps_; }

  Hyperbolic<T> rho(Eigen::Index s) const { return {comps_(s, 0), comps_(s, 1)}; }

  /// Idempotent projection P_1 (index 0) or P_2 (index 1) as a raw column.
  auto projection(int index) const { return comps_.col(index); }

  /// Projection as a validated real distribution; the vanishing projection of
  /// an E1Only/E2Only distribution is rejected.
  RealDistribution<T> projection_distribution(int index) const {
    return RealDistribution<T>(comps_.col(index), T(kSumTol));
  }

 private:
  template <typename U>
  friend HyperbolicDistribution<U> validate(const ComponentMatrix<U>&, U);

  HyperbolicDistribution(ComponentMatrix<T> comps, DistributionCase c)
      : comps_(std::move(comps)), case_(c) {}

  ComponentMatrix<T> comps_;
  DistributionCase case_;
};

template <typename T>
HyperbolicDistribution<T> validate(const ComponentMatrix<T>& comps, T sum_tol) {
  if (comps.rows() == 0) throw Error(Errc::DegenerateN, "distribution needs N >= 1");
  bool any_pure_e1 = false;
  bool any_pure_e2 = false;
  for (Eigen::Index s = 0; s < comps.rows(); ++s) {
    detail::check_entry_range(comps(s, 0), s, sum_tol);
    detail::check_entry_range(comps(s, 1), s, sum_tol);
    const Hyperbolic<T> rho{comps(s, 0), comps(s, 1)};
    if (is_zero_divisor(rho)) (rho.x2 == T(0) ? any_pure_e1 : any_pure_e2) = true;
  }
  const T sum1 = comps.col(0).sum();
  const T sum2 = comps.col(1).sum();
  auto report = [&](std::string why) {
    std::ostringstream os;
    os.precision(17);
    os << why << " (sum_e1 = " << sum1 << ", sum_e2 = " << sum2 << ")";
    return Error(Errc::SumInvalid, os.str());
  };
  if (any_pure_e1 && any_pure_e2) throw report("mixed pure-e1 and pure-e2 entries");

  const bool sum1_one = std::abs(sum1 - T(1)) <= sum_tol;
  const bool sum2_one = std::abs(sum2 - T(1)) <= sum_tol;
  const bool all_e2_zero = (comps.col(1).array() == T(0)).all();
  const bool all_e1_zero = (comps.col(0).array() == T(0)).all();

  DistributionCase c;
  if (sum1_one && sum2_one) {
    c = DistributionCase::Full;
  } else if (sum1_one && all_e2_zero) {
    c = DistributionCase::E1Only;
  } else if (sum2_one && all_e1_zero) {
    c = DistributionCase::E2Only;
  } else {
    throw report("sum is neither 1_D, 1e1 nor 1e2");
  }
  return HyperbolicDistribution<T>(comps, c);
}

template <typename T>
HyperbolicDistribution<T> validate(std::span<const std::pair<T, T>> raw, T sum_tol = T(kSumTol)) {
  ComponentMatrix<T> comps(static_cast<Eigen::Index>(raw.size()), 2);
  for (std::size_t s = 0; s < raw.size(); ++s) {
    comps(static_cast<Eigen::Index>(s), 0) = raw[s].first;
    comps(static_cast<Eigen::Index>(s), 1) = raw[s].second;
  }
  return validate<T>(comps, sum_tol);
}

template <typename T>
HyperbolicDistribution<T> validate(std::initializer_list<std::pair<T, T>> raw,
                                   T sum_tol = T(kSumTol)) {
  return validate<T>(std::span<const std::pair<T, T>>(raw.begin(), raw.size()), sum_tol);
}

/// rho_s = p_s 1_D.
template <typename T>
HyperbolicDistribution<T> embed(const RealDistribution<T>& P, T sum_tol = T(kSumTol)) {
  ComponentMatrix<T> comps(P.size(), 2);
  comps.col(0) = P.probabilities();
  comps.col(1) = P.probabilities();
  return validate<T>(comps, sum_tol);
}

template <typename T>
RealDistribution<T> uniform(Eigen::Index n) {
  if (n < 1) throw Error(Errc::DegenerateN, "uniform distribution needs N >= 1");
  return RealDistribution<T>(Vec<T>::Constant(n, T(1) / T(n)));
}

template <typename T>
HyperbolicDistribution<T> uniform_hyp(Eigen::Index n) {
  return embed(uniform<T>(n));
}

/// Entrywise (1_D - lambda) rho_s + lambda rho'_s.
template <typename T>
HyperbolicDistribution<T> mix(const HyperbolicDistribution<T>& a, const HyperbolicDistribution<T>& b,
                              const Hyperbolic<T>& lambda) {
  if (a.size() != b.size() || a.dist_case() != b.dist_case()) {
    throw Error(Errc::CaseMismatch, "mix needs equal N and equal case");
  }
  if (!(preceq(zero_d<T>(), lambda) && preceq(lambda, one_d<T>()))) {
    throw Error(Errc::LambdaOutOfRange, "lambda must lie in [0, 1_D]");
  }
  ComponentMatrix<T> comps(a.size(), 2);
  comps.col(0) = (T(1) - lambda.x1) * a.projection(0) + lambda.x1 * b.projection(0);
  comps.col(1) = (T(1) - lambda.x2) * a.projection(1) + lambda.x2 * b.projection(1);
  return validate<T>(comps, T(kSumTol));
}

// ---------------------------------------------------------------------------
// Sampling and perturbation families (double only)

/// Normalized i.i.d. exponentials: uniform on the open simplex, every p_s > 0.
RealDistribution<double> random_distribution(Eigen::Index n, Xoshiro256& rng);

/// Case Full with independent random projections.
HyperbolicDistribution<double> random_hyperbolic_distribution(Eigen::Index n, Xoshiro256& rng);

enum class PerturbationFamily { CertaintySpread, UniformSpike, RandomSmooth };

std::string_view to_string(PerturbationFamily family);
PerturbationFamily parse_family(std::string_view name);

struct PerturbationPair {
  RealDistribution<double> base;
  RealDistribution<double> perturbed;
  PerturbationFamily family;
  double delta;
  Eigen::Index n;
  /// ||base - perturbed|| implied by the construction (<= delta).
  double expected_norm;
};

/// Builds (P, P') with ||P - P'|| <= delta.
///  - CertaintySpread: P = (1,0,...,0), P' = (1-d/2, d/(2(N-1)), ...).
///  - UniformSpike:    P = uniform(N), P'_1 = (1-d/2)/N + d/2, P'_s = (1-d/2)/N.
///  - RandomSmooth:    seeded random P, zero-sum move of total variation d.
PerturbationPair perturbation_family(PerturbationFamily family, Eigen::Index n, double delta,
                                     std::uint64_t seed);

}  // namespace hypent

#endif  // HYPENT_PROBABILITY_HPP
