#ifndef HYPENT_CALCULUS_HPP
#define HYPENT_CALCULUS_HPP

/**
 * Calculus for hyperbolic-valued functions in idempotent form
 *   F(xi) = F1(x1) e1 + F2(x2) e2.
 *
 * The hyperbolic derivative of such a function is F1'(x1) e1 + F2'(x2) e2,
 * limits are taken along xi0 + t 1_D (never along zero-divisor directions),
 * and L'Hopital / convexity statements reduce to their real counterparts
 * applied per component. Everything here is numerical: fixed-step central
 * differences with one Richardson step, a fixed geometric approach sequence
 * for limits, and seeded random sampling for convexity.
 *
 * User callables must be reentrant; nothing here synchronizes.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypent/core.hpp"
#include "hypent/random.hpp"

namespace hypent {

inline constexpr double kFdRelStep = 1e-6;
inline constexpr double kLimitTol = 1e-8;
inline constexpr double kCauchyRiemannTol = 1e-6;
inline constexpr double kLHopitalTol = 1e-6;
inline constexpr double kConvexitySlack = 1e-10;
inline constexpr int kConcavitySamples = 10000;
inline constexpr std::uint64_t kConcavitySeed = 0x5EEDULL;

template <typename T>
using RealFunction = std::function<T(T)>;

/// General map D -> D, not necessarily of idempotent form.
template <typename T>
using PlaneMap = std::function<Hyperbolic<T>(const Hyperbolic<T>&)>;

template <typename T>
struct ComponentFunction {
  RealFunction<T> f1;
  RealFunction<T> f2;
  Interval<T> domain = Interval<T>::whole();

  Hyperbolic<T> operator()(const Hyperbolic<T>& xi) const { return {f1(xi.x1), f2(xi.x2)}; }
};

/// Same real function in both components.
template <typename T>
ComponentFunction<T> lift(RealFunction<T> f, Interval<T> domain = Interval<T>::whole()) {
  return {f, f, std::move(domain)};
}

template <typename T>
struct DifferentiableFunction {
  ComponentFunction<T> value;
  std::optional<ComponentFunction<T>> derivative;  // absent: finite differences
};

// ---------------------------------------------------------------------------
// Differentiation

/// Central difference with h = max(1e-6, 1e-6 |x|), Richardson-extrapolated
/// once with h/2.
template <typename T>
T central_difference(const RealFunction<T>& f, T x) {
  const T h = std::max(T(kFdRelStep), T(kFdRelStep) * std::abs(x));
  const T coarse = (f(x + h) - f(x - h)) / (T(2) * h);
  const T half = h / T(2);
  const T fine = (f(x + half) - f(x - half)) / (T(2) * half);
  return (T(4) * fine - coarse) / T(3);
}

template <typename T>
Hyperbolic<T> fd_derivative(const ComponentFunction<T>& F, const Hyperbolic<T>& xi) {
  return {central_difference(F.f1, xi.x1), central_difference(F.f2, xi.x2)};
}

template <typename T>
Hyperbolic<T> hyp_derivative(const DifferentiableFunction<T>& F, const Hyperbolic<T>& xi) {
  if (!F.value.domain.contains_interior(xi)) {
    throw Error(Errc::OutsideDomain, "derivative requested outside the domain interior");
  }
  return F.derivative ? (*F.derivative)(xi) : fd_derivative(F.value, xi);
}

/// The derivative as a component function (analytic if supplied).
template <typename T>
ComponentFunction<T> derivative_function(const DifferentiableFunction<T>& F) {
  if (F.derivative) return *F.derivative;
  const auto& v = F.value;
  return {[f = v.f1](T x) { return central_difference(f, x); },
          [f = v.f2](T x) { return central_difference(f, x); }, v.domain};
}

// ---------------------------------------------------------------------------
// Cauchy-Riemann

template <typename T>
struct CauchyRiemannResult {
  bool holds = false;
  /// x1 = |u_x - v_y|, x2 = |u_y - v_x| in the {1, k} coordinates xi = x + k y.
  Hyperbolic<T> residuals;
};

template <typename T>
CauchyRiemannResult<T> check_cauchy_riemann(const PlaneMap<T>& F, const Hyperbolic<T>& xi,
                                            T tol = T(kCauchyRiemannTol)) {
  const T x0 = xi.real_part();
  const T y0 = xi.k_part();
  auto u = [&](T x, T y) { return F(Hyperbolic<T>::from_unit_k(x, y)).real_part(); };
  auto v = [&](T x, T y) { return F(Hyperbolic<T>::from_unit_k(x, y)).k_part(); };

  const T u_x = central_difference<T>([&](T x) { return u(x, y0); }, x0);
  const T u_y = central_difference<T>([&](T y) { return u(x0, y); }, y0);
  const T v_x = central_difference<T>([&](T x) { return v(x, y0); }, x0);
  const T v_y = central_difference<T>([&](T y) { return v(x0, y); }, y0);

  CauchyRiemannResult<T> out;
  out.residuals = {std::abs(u_x - v_y), std::abs(u_y - v_x)};
  out.holds = out.residuals.x1 < tol && out.residuals.x2 < tol;
  return out;
}

template <typename T>
CauchyRiemannResult<T> check_cauchy_riemann(const DifferentiableFunction<T>& F,
                                            const Hyperbolic<T>& xi,
                                            T tol = T(kCauchyRiemannTol)) {
  if (!F.value.domain.contains_interior(xi)) {
    throw Error(Errc::OutsideDomain, "Cauchy-Riemann check outside the domain interior");
  }
  const ComponentFunction<T>& value = F.value;
  return check_cauchy_riemann<T>(PlaneMap<T>([&value](const Hyperbolic<T>& z) { return value(z); }),
                                 xi, tol);
}

// ---------------------------------------------------------------------------
// Limits

struct LimitOptions {
  double tol = kLimitTol;
  int first_exponent = 3;  // t_0 = 10^-3
  int steps = 11;          // t_n = 10^(-3-n), n = 0..10
};

namespace detail {

template <typename T>
struct ComponentLimit {
  bool converged = false;
  T value{};
};

/// Symmetric means m_n = (F(x0+t_n) + F(x0-t_n))/2 remove odd-order terms,
/// one Richardson step r_n = (100 m_n - m_{n-1})/99 removes t^2, and the
/// estimate with the smallest successive change is kept. Roundoff grows as t
/// shrinks, so the best n is interior to the sequence.
template <typename T>
ComponentLimit<T> extrapolate_component(const std::vector<T>& plus, const std::vector<T>& minus,
                                        T tol) {
  const std::size_t n_steps = plus.size();
  std::vector<bool> ok(n_steps);
  std::vector<T> mean(n_steps), gap(n_steps);
  for (std::size_t n = 0; n < n_steps; ++n) {
    ok[n] = std::isfinite(plus[n]) && std::isfinite(minus[n]);
    mean[n] = (plus[n] + minus[n]) / T(2);
    gap[n] = std::abs(plus[n] - minus[n]);
  }
  std::vector<std::optional<T>> rich(n_steps);
  for (std::size_t n = 1; n < n_steps; ++n) {
    if (ok[n] && ok[n - 1]) rich[n] = (T(100) * mean[n] - mean[n - 1]) / T(99);
  }

  std::optional<std::size_t> best;
  T best_change = std::numeric_limits<T>::infinity();
  for (std::size_t n = 2; n < n_steps; ++n) {
    if (!rich[n] || !rich[n - 1]) continue;
    const T change = std::abs(*rich[n] - *rich[n - 1]);
    if (change < best_change) {
      best_change = change;
      best = n;
    }
  }
  ComponentLimit<T> out;
  if (!best) return out;
  out.value = *rich[*best];

  std::size_t first = 0;
  while (!ok[first]) ++first;
  const bool settled = best_change <= tol;
  const bool sides_agree = gap[*best] <= std::max(tol, T(0.1) * gap[first]);
  out.converged = settled && sides_agree;
  return out;
}

}  // namespace detail

template <typename T>
Hyperbolic<T> hyp_limit(const PlaneMap<T>& F, const Hyperbolic<T>& xi0, LimitOptions opts = {}) {
  std::array<std::vector<T>, 2> plus, minus;
  for (int n = 0; n < opts.steps; ++n) {
    const T t = std::pow(T(10), -T(opts.first_exponent + n));
    const Hyperbolic<T> up = F(xi0 + embed_real(t));
    const Hyperbolic<T> down = F(xi0 - embed_real(t));
    plus[0].push_back(up.x1);
    plus[1].push_back(up.x2);
    minus[0].push_back(down.x1);
    minus[1].push_back(down.x2);
  }
  const auto c1 = detail::extrapolate_component(plus[0], minus[0], T(opts.tol));
  const auto c2 = detail::extrapolate_component(plus[1], minus[1], T(opts.tol));
  if (!c1.converged || !c2.converged) {
    throw Error(Errc::NonConvergent, "approach sequence did not settle at " + std::string(
                                         !c1.converged ? "e1" : "e2") + " component");
  }
  return {c1.value, c2.value};
}

template <typename T>
Hyperbolic<T> hyp_limit(const ComponentFunction<T>& F, const Hyperbolic<T>& xi0,
                        LimitOptions opts = {}) {
  return hyp_limit<T>(PlaneMap<T>([&F](const Hyperbolic<T>& z) { return F(z); }), xi0, opts);
}

template <typename T>
struct LHopitalResult {
  Hyperbolic<T> lhs;  // lim F/G
  Hyperbolic<T> rhs;  // lim F'/G'
  bool agree = false;
};

/// Checks lim F/G = lim F'/G' at xi0 for a 0/0 form.
template <typename T>
LHopitalResult<T> lhopital_check(const DifferentiableFunction<T>& F,
                                 const DifferentiableFunction<T>& G, const Hyperbolic<T>& xi0,
                                 LimitOptions opts = {}, T agree_tol = T(kLHopitalTol)) {
  const Hyperbolic<T> lim_f = hyp_limit(F.value, xi0, opts);
  const Hyperbolic<T> lim_g = hyp_limit(G.value, xi0, opts);
  if (!approx_eq(lim_f, zero_d<T>(), T(opts.tol)) || !approx_eq(lim_g, zero_d<T>(), T(opts.tol))) {
    throw Error(Errc::HypothesisViolated, "numerator and denominator must both tend to 0_D");
  }
  const Hyperbolic<T> g_prime = hyp_derivative(G, xi0);
  if (std::abs(g_prime.x1) <= T(opts.tol) || std::abs(g_prime.x2) <= T(opts.tol)) {
    throw Error(Errc::HypothesisViolated, "G'(xi0) lies in G0");
  }

  const ComponentFunction<T>& f = F.value;
  const ComponentFunction<T>& g = G.value;
  const ComponentFunction<T> quotient{[&](T x) { return f.f1(x) / g.f1(x); },
                                      [&](T x) { return f.f2(x) / g.f2(x); }, f.domain};
  const ComponentFunction<T> df = derivative_function(F);
  const ComponentFunction<T> dg = derivative_function(G);
  const ComponentFunction<T> deriv_quotient{[&](T x) { return df.f1(x) / dg.f1(x); },
                                            [&](T x) { return df.f2(x) / dg.f2(x); }, f.domain};

  LHopitalResult<T> out;
  out.lhs = hyp_limit(quotient, xi0, opts);
  out.rhs = hyp_limit(deriv_quotient, xi0, opts);
  out.agree = std::abs(out.lhs.x1 - out.rhs.x1) < agree_tol &&
              std::abs(out.lhs.x2 - out.rhs.x2) < agree_tol;
  return out;
}

// ---------------------------------------------------------------------------
// Convexity

template <typename T>
struct ConvexityWitness {
  Hyperbolic<T> xi;
  Hyperbolic<T> chi;
  Hyperbolic<T> lambda;
  Hyperbolic<T> value_at_mix;   // F((1-l) xi + l chi)
  Hyperbolic<T> mix_of_values;  // (1-l) F(xi) + l F(chi)
};

template <typename T>
struct ConcavityReport {
  bool concave = true;
  bool convex = true;
  std::vector<ConvexityWitness<T>> concavity_violations;
  std::vector<ConvexityWitness<T>> convexity_violations;
};

/// Samples comparable pairs xi <= chi in F.domain and lambda in [0, 1_D], and
/// tests both the convex and the concave inequality componentwise.
template <typename T>
ConcavityReport<T> concavity_probe(const ComponentFunction<T>& F, int samples = kConcavitySamples,
                                   std::uint64_t seed = kConcavitySeed,
                                   T slack = T(kConvexitySlack)) {
  const Interval<T>& dom = F.domain;
  if (!dom.is_bounded() || dom.is_degenerate() || samples <= 0) {
    throw Error(Errc::EmptyDomain, "convexity probe needs a bounded interval with interior");
  }
  constexpr std::size_t kMaxWitnesses = 8;
  Xoshiro256 rng(seed);
  auto open_unit = [&rng]() {
    double u = 0;
    while (u == 0) u = rng.uniform01();
    return T(u);
  };
  auto draw = [&]() -> Hyperbolic<T> {
    return {dom.lo().x1 + (dom.hi().x1 - dom.lo().x1) * open_unit(),
            dom.lo().x2 + (dom.hi().x2 - dom.lo().x2) * open_unit()};
  };

  ConcavityReport<T> report;
  for (int i = 0; i < samples; ++i) {
    const Hyperbolic<T> a = draw();
    const Hyperbolic<T> b = draw();
    const Hyperbolic<T> xi{std::min(a.x1, b.x1), std::min(a.x2, b.x2)};
    const Hyperbolic<T> chi{std::max(a.x1, b.x1), std::max(a.x2, b.x2)};
    const Hyperbolic<T> lambda{T(rng.uniform01()), T(rng.uniform01())};
    const Hyperbolic<T> rest = one_d<T>() - lambda;

    const Hyperbolic<T> lhs = F(rest * xi + lambda * chi);
    const Hyperbolic<T> rhs = rest * F(xi) + lambda * F(chi);
    const ConvexityWitness<T> w{xi, chi, lambda, lhs, rhs};

    if (lhs.x1 > rhs.x1 + slack || lhs.x2 > rhs.x2 + slack) {
      report.convex = false;
      if (report.convexity_violations.size() < kMaxWitnesses) report.convexity_violations.push_back(w);
    }
    if (lhs.x1 < rhs.x1 - slack || lhs.x2 < rhs.x2 - slack) {
      report.concave = false;
      if (report.concavity_violations.size() < kMaxWitnesses) report.concavity_violations.push_back(w);
    }
  }
  return report;
}

}  // namespace hypent

#endif  // HYPENT_CALCULUS_HPP
