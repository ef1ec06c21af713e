#ifndef HYPENT_ENTROPY_HPP
#define HYPENT_ENTROPY_HPP

/**
 * Entropy and extropy measures, real and hyperbolic.
 *
 * Real measures act on a RealDistribution with Eigen array expressions.
 * Hyperbolic measures are written with hyperbolic arithmetic (Log_D,
 * hyperbolic powers and quotients) over the entries rho_s, never by calling
 * the real measures on the projections; the componentwise factorization
 * S_f(B) = S(P1) e1 + S(P2) e2 is a property to test, not an implementation
 * shortcut.
 *
 * Conventions: natural logarithm throughout; 0 log 0 = 0 inside entropy
 * sums (per idempotent component); zero probabilities contribute 0 to
 * power sums of positive order. Rényi-type hyperbolic measures and both
 * extropies are restricted to case Full.
 */

#include <cmath>
#include <limits>
#include <string>

#include "hypent/calculus.hpp"
#include "hypent/core.hpp"
#include "hypent/error.hpp"
#include "hypent/probability.hpp"

namespace hypent {

template <typename T>
T xlogx(T x) {
  return x > T(0) ? x * std::log(x) : T(0);
}

// ---------------------------------------------------------------------------
// Real measures

template <typename T>
T shannon(const RealDistribution<T>& P) {
  return -P.probabilities().unaryExpr([](T p) { return xlogx(p); }).sum();
}

template <typename T>
T extropy(const RealDistribution<T>& P) {
  return -P.probabilities().unaryExpr([](T p) { return xlogx(T(1) - p); }).sum();
}

/// S(p; 1-p) = J(p; 1-p).
template <typename T>
T binary_entropy(T p) {
  return -xlogx(p) - xlogx(T(1) - p);
}

template <typename T>
struct DualityCheck {
  T lhs;      // J(P)
  T rhs;      // sum_s S(p_s; 1-p_s) - S(P)
  T lhs_sym;  // S(P)
  T rhs_sym;  // sum_s J(p_s; 1-p_s) - J(P)
};

template <typename T>
DualityCheck<T> extropy_duality_check(const RealDistribution<T>& P) {
  const T pair_sum = P.probabilities().unaryExpr([](T p) { return binary_entropy(p); }).sum();
  const T s = shannon(P);
  const T j = extropy(P);
  return {j, pair_sum - s, s, pair_sum - j};
}

template <typename T>
T hartley(const RealDistribution<T>& P) {
  return std::log(T(P.size()));
}

template <typename T>
T collision(const RealDistribution<T>& P) {
  return -std::log(P.probabilities().squaredNorm());
}

namespace detail {

template <typename T>
T positive_power_sum(const Vec<T>& p, T q) {
  return p.unaryExpr([q](T x) { return x > T(0) ? std::pow(x, q) : T(0); }).sum();
}

}  // namespace detail

/// (1/(1-q)) log sum p_s^q for q > 0, q != 1; q = 0 is Hartley.
template <typename T>
T renyi(const RealDistribution<T>& P, T q) {
  if (q < T(0)) throw Error(Errc::NegativeOrder, "Rényi order must be >= 0");
  if (q == T(1)) throw Error(Errc::OrderOne, "Rényi order 1 is the Shannon entropy");
  if (q == T(0)) return hartley(P);
  return std::log(detail::positive_power_sum(P.probabilities(), q)) / (T(1) - q);
}

/// (1/(1-q)) [-(N-1) log(N-1) + (N-1) log sum (1-p_s)^q]; 0 for N = 1.
template <typename T>
T renyi_extropy(const RealDistribution<T>& P, T q) {
  if (!(q > T(0))) throw Error(Errc::NonPositiveOrder, "Rényi extropy order must be > 0");
  if (q == T(1)) throw Error(Errc::OrderOne, "Rényi extropy order 1 is the Shannon extropy");
  if (P.size() == 1) return T(0);
  const T m = T(P.size() - 1);
  const Vec<T> complement = (T(1) - P.probabilities().array()).matrix();
  return (-m * std::log(m) + m * std::log(detail::positive_power_sum(complement, q))) / (T(1) - q);
}

// ---------------------------------------------------------------------------
// Hyperbolic building blocks

/// rho Log_D(rho), with 0 log 0 = 0 applied per idempotent component.
template <typename T>
Hyperbolic<T> rho_log_rho(const Hyperbolic<T>& rho) {
  if (prec(zero_d<T>(), rho)) return rho * hyp_log(rho);
  return {xlogx(rho.x1), xlogx(rho.x2)};
}

namespace detail {

template <typename T>
void require_full(const HyperbolicDistribution<T>& B, const char* what) {
  if (B.dist_case() != DistributionCase::Full) {
    throw Error(Errc::CaseMismatch, std::string(what) + " is defined for case Full only");
  }
}

template <typename T>
void require_positive_components(const HyperbolicDistribution<T>& B) {
  if (!(B.components().array() > T(0)).all()) {
    throw Error(Errc::ZeroComponent, "every idempotent component must be > 0");
  }
}

template <typename T>
void require_renyi_order(const Hyperbolic<T>& alpha) {
  if (!prec(zero_d<T>(), alpha)) throw Error(Errc::NonPositiveOrder, "order must satisfy alpha > 0_D");
  if (is_zero_divisor_or_zero(one_d<T>() - alpha)) {
    throw Error(Errc::OrderOnZeroDivisorLine, "1_D - alpha is a zero divisor");
  }
}

template <typename T>
Hyperbolic<T> power_sum(const HyperbolicDistribution<T>& B, const Hyperbolic<T>& alpha,
                        PowOptions opts = {}) {
  Hyperbolic<T> acc = zero_d<T>();
  for (Eigen::Index s = 0; s < B.size(); ++s) acc += hyp_pow(B.rho(s), alpha, opts);
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hyperbolic measures

/// S_f(B) = -sum_s rho_s Log_D(rho_s). Defined for all three cases.
template <typename T>
Hyperbolic<T> strong_shannon_hyp(const HyperbolicDistribution<T>& B) {
  Hyperbolic<T> acc = zero_d<T>();
  for (Eigen::Index s = 0; s < B.size(); ++s) acc -= rho_log_rho(B.rho(s));
  return acc;
}

/// xi -> sum_s rho_s^(-xi), with its analytic derivative -sum_s rho_s^(-xi) Log_D(rho_s).
template <typename T>
DifferentiableFunction<T> generating_function(const HyperbolicDistribution<T>& B) {
  detail::require_positive_components(B);
  auto value = [&B](int i) {
    return [p = Vec<T>(B.projection(i))](T x) { return p.array().pow(-x).sum(); };
  };
  auto slope = [&B](int i) {
    return [p = Vec<T>(B.projection(i))](T x) {
      return -(p.array().pow(-x) * p.array().log()).sum();
    };
  };
  return {ComponentFunction<T>{value(0), value(1)}, ComponentFunction<T>{slope(0), slope(1)}};
}

/// S_f as lim_{xi -> -1_D} of the hyperbolic derivative of the generating
/// function. The derivative is taken by finite differences, not analytically.
template <typename T>
Hyperbolic<T> strong_shannon_via_generating(const HyperbolicDistribution<T>& B) {
  detail::require_full(B, "the generating-function rewrite");
  DifferentiableFunction<T> gen = generating_function(B);
  gen.derivative.reset();
  const PlaneMap<T> slope = [&gen](const Hyperbolic<T>& xi) { return hyp_derivative(gen, xi); };
  return hyp_limit(slope, -one_d<T>());
}

template <typename T>
T shannon_via_generating(const RealDistribution<T>& P) {
  if (!(P.probabilities().array() > T(0)).all()) {
    throw Error(Errc::ZeroProbability, "generating-function rewrite needs every p_s > 0");
  }
  return strong_shannon_via_generating(embed(P)).x1;
}

/// (1_D / (1_D - alpha)) Log_D(sum_s rho_s^alpha).
template <typename T>
Hyperbolic<T> renyi_hyp(const HyperbolicDistribution<T>& B, const Hyperbolic<T>& alpha) {
  detail::require_full(B, "hyperbolic Rényi entropy");
  detail::require_renyi_order(alpha);
  return (one_d<T>() / (one_d<T>() - alpha)) * hyp_log(detail::power_sum(B, alpha));
}

/// Extension: a component of alpha equal to 1 yields the Shannon entropy of
/// that projection instead of being rejected.
template <typename T>
Hyperbolic<T> renyi_hyp_mixed(const HyperbolicDistribution<T>& B, const Hyperbolic<T>& alpha) {
  detail::require_full(B, "hyperbolic Rényi entropy");
  if (!prec(zero_d<T>(), alpha)) throw Error(Errc::NonPositiveOrder, "order must satisfy alpha > 0_D");
  auto component = [&](int i, T a) {
    const RealDistribution<T> P = B.projection_distribution(i);
    return a == T(1) ? shannon(P) : renyi(P, a);
  };
  return {component(0, alpha.x1), component(1, alpha.x2)};
}

/// alpha -> Log_D(sum_s rho_s^alpha) with derivative
/// sum_s rho_s^alpha Log_D(rho_s) / sum_s rho_s^alpha.
template <typename T>
DifferentiableFunction<T> renyi_log_sum(const HyperbolicDistribution<T>& B) {
  auto value = [&B](int i) {
    return [p = Vec<T>(B.projection(i))](T a) { return std::log(detail::positive_power_sum(p, a)); };
  };
  auto slope = [&B](int i) {
    return [p = Vec<T>(B.projection(i))](T a) {
      T num = 0, den = 0;
      for (Eigen::Index s = 0; s < p.size(); ++s) {
        if (p[s] <= T(0)) continue;
        const T w = std::pow(p[s], a);
        num += w * std::log(p[s]);
        den += w;
      }
      return num / den;
    };
  };
  constexpr T inf = std::numeric_limits<T>::infinity();
  const auto positive = Interval<T>::open(zero_d<T>(), {inf, inf});
  return {ComponentFunction<T>{value(0), value(1), positive},
          ComponentFunction<T>{slope(0), slope(1), positive}};
}

/// alpha -> 1_D - alpha.
template <typename T>
DifferentiableFunction<T> one_minus_order() {
  return {lift<T>([](T a) { return T(1) - a; }), lift<T>([](T) { return T(-1); })};
}

template <typename T>
struct RenyiLimit {
  Hyperbolic<T> direct;     // lim R_alpha along alpha -> 1_D
  Hyperbolic<T> lhopital;   // lim (Log_D sum rho^alpha)' / (1_D - alpha)'
};

template <typename T>
RenyiLimit<T> renyi_hyp_limit_detail(const HyperbolicDistribution<T>& B, LimitOptions opts = {},
                                      T agree_tol = T(kLHopitalTol)) {
  detail::require_full(B, "hyperbolic Rényi limit");
  detail::require_positive_components(B);
  const PlaneMap<T> renyi_at = [&B](const Hyperbolic<T>& alpha) { return renyi_hyp(B, alpha); };
  RenyiLimit<T> out;
  out.direct = hyp_limit(renyi_at, one_d<T>(), opts);
  const LHopitalResult<T> lh =
      lhopital_check(renyi_log_sum(B), one_minus_order<T>(), one_d<T>(), opts, agree_tol);
  if (!lh.agree) throw Error(Errc::NonConvergent, "L'Hopital quotients disagree at alpha = 1_D");
  out.lhopital = lh.rhs;
  if (!approx_eq(out.direct, out.lhopital, agree_tol)) {
    throw Error(Errc::NonConvergent, "direct and L'Hopital limits disagree at alpha = 1_D");
  }
  return out;
}

template <typename T>
Hyperbolic<T> renyi_hyp_limit(const HyperbolicDistribution<T>& B) {
  return renyi_hyp_limit_detail(B).direct;
}

/// R_{0_D}: sum_s rho_s^{0_D} counts every state (0^0 = 1).
template <typename T>
Hyperbolic<T> hartley_hyp(const HyperbolicDistribution<T>& B) {
  detail::require_full(B, "hyperbolic Hartley entropy");
  const Hyperbolic<T> count = detail::power_sum(B, zero_d<T>(), PowOptions{true});
  return (one_d<T>() / (one_d<T>() - zero_d<T>())) * hyp_log(count);
}

template <typename T>
Hyperbolic<T> collision_hyp(const HyperbolicDistribution<T>& B) {
  return renyi_hyp(B, embed_real(T(2)));
}

/// J_f(B) = -sum_s (1_D - rho_s) Log_D(1_D - rho_s).
template <typename T>
Hyperbolic<T> strong_extropy_hyp(const HyperbolicDistribution<T>& B) {
  detail::require_full(B, "hyperbolic extropy");
  Hyperbolic<T> acc = zero_d<T>();
  for (Eigen::Index s = 0; s < B.size(); ++s) acc -= rho_log_rho(one_d<T>() - B.rho(s));
  return acc;
}

template <typename T>
struct RenyiExtropyResult {
  Hyperbolic<T> value;
  bool degenerate_n = false;  // N = 1: prefactor N - 1_D vanishes, value set to 0_D
};

template <typename T>
RenyiExtropyResult<T> renyi_extropy_hyp(const HyperbolicDistribution<T>& B,
                                        const Hyperbolic<T>& alpha) {
  detail::require_full(B, "hyperbolic Rényi extropy");
  detail::require_renyi_order(alpha);
  if (B.size() == 1) return {zero_d<T>(), true};

  const Hyperbolic<T> m = embed_real(T(B.size())) - one_d<T>();
  Hyperbolic<T> sum = zero_d<T>();
  for (Eigen::Index s = 0; s < B.size(); ++s) sum += hyp_pow(one_d<T>() - B.rho(s), alpha);
  const Hyperbolic<T> bracket = -(m * hyp_log(m)) + m * hyp_log(sum);
  return {(one_d<T>() / (one_d<T>() - alpha)) * bracket, false};
}

}  // namespace hypent

#endif  // HYPENT_ENTROPY_HPP
