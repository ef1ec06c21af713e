#ifndef HYPENT_CORE_HPP
#define HYPENT_CORE_HPP

/**
 * Hyperbolic (split-complex) numbers in the idempotent basis.
 *
 * Every element of D = R[k], k^2 = 1, decomposes uniquely as
 *   xi = x1 e1 + x2 e2,   e1 = (1+k)/2,  e2 = (1-k)/2,
 * with e1^2 = e1, e2^2 = e2 and e1 e2 = 0. Ring operations, the partial
 * order, powers and logarithms all act independently on (x1, x2), so the
 * idempotent pair is the only stored representation. The {1, k} basis is
 * provided as a view for I/O.
 */

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "hypent/error.hpp"

namespace hypent {

template <typename Scalar>
struct Hyperbolic {
  Scalar x1{};  // coefficient of e1
  Scalar x2{};  // coefficient of e2

  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(Scalar e1_coeff, Scalar e2_coeff) : x1(e1_coeff), x2(e2_coeff) {}

  /// a + b k  ->  (a+b) e1 + (a-b) e2
  static constexpr Hyperbolic from_unit_k(Scalar a, Scalar b) { return {a + b, a - b}; }

  constexpr Scalar real_part() const { return (x1 + x2) / Scalar(2); }
  constexpr Scalar k_part() const { return (x1 - x2) / Scalar(2); }

  constexpr bool operator==(const Hyperbolic&) const = default;

  constexpr Hyperbolic operator-() const { return {-x1, -x2}; }
  constexpr Hyperbolic& operator+=(const Hyperbolic& o) { x1 += o.x1; x2 += o.x2; return *this; }
  constexpr Hyperbolic& operator-=(const Hyperbolic& o) { x1 -= o.x1; x2 -= o.x2; return *this; }
  constexpr Hyperbolic& operator*=(const Hyperbolic& o) { x1 *= o.x1; x2 *= o.x2; return *this; }
};

using HyperbolicNumber = Hyperbolic<double>;

template <typename T> constexpr Hyperbolic<T> zero_d() { return {T(0), T(0)}; }
template <typename T> constexpr Hyperbolic<T> one_d() { return {T(1), T(1)}; }
template <typename T> constexpr Hyperbolic<T> unit_e1() { return {T(1), T(0)}; }
template <typename T> constexpr Hyperbolic<T> unit_e2() { return {T(0), T(1)}; }
template <typename T> constexpr Hyperbolic<T> unit_k() { return {T(1), T(-1)}; }

template <typename T>
constexpr Hyperbolic<T> operator+(Hyperbolic<T> a, const Hyperbolic<T>& b) { return a += b; }
template <typename T>
constexpr Hyperbolic<T> operator-(Hyperbolic<T> a, const Hyperbolic<T>& b) { return a -= b; }
template <typename T>
constexpr Hyperbolic<T> operator*(Hyperbolic<T> a, const Hyperbolic<T>& b) { return a *= b; }
template <typename T>
constexpr Hyperbolic<T> operator*(T s, const Hyperbolic<T>& a) { return {s * a.x1, s * a.x2}; }
template <typename T>
constexpr Hyperbolic<T> operator*(const Hyperbolic<T>& a, T s) { return {a.x1 * s, a.x2 * s}; }

/// Nonzero with exactly one vanishing idempotent component (the set G).
template <typename T>
constexpr bool is_zero_divisor(const Hyperbolic<T>& xi) {
  return (xi.x1 == T(0)) != (xi.x2 == T(0));
}

/// G0 = G together with 0.
template <typename T>
constexpr bool is_zero_divisor_or_zero(const Hyperbolic<T>& xi) {
  return xi.x1 == T(0) || xi.x2 == T(0);
}

template <typename T>
Hyperbolic<T> operator/(const Hyperbolic<T>& a, const Hyperbolic<T>& b) {
  if (is_zero_divisor_or_zero(b)) {
    throw Error(Errc::DivisionByZeroDivisor, "divisor has a zero idempotent component");
  }
  return {a.x1 / b.x1, a.x2 / b.x2};
}

template <typename T>
Hyperbolic<T> embed_real(T x) {
  if (!std::isfinite(x)) throw Error(Errc::NonFinite, "cannot embed a non-finite real");
  return {x, x};
}

// ---------------------------------------------------------------------------
// Partial order

enum class PartialOrdering { Less, Equal, Greater, Incomparable };

/// Classification relative to the strict order: Less iff both components are
/// strictly smaller, Greater iff both strictly larger, Equal iff both equal.
/// Anything else (mixed signs, or one tie) is Incomparable; use `preceq` for
/// the non-strict relation.
template <typename T>
constexpr PartialOrdering partial_cmp(const Hyperbolic<T>& a, const Hyperbolic<T>& b) {
  if (a.x1 == b.x1 && a.x2 == b.x2) return PartialOrdering::Equal;
  if (a.x1 < b.x1 && a.x2 < b.x2) return PartialOrdering::Less;
  if (a.x1 > b.x1 && a.x2 > b.x2) return PartialOrdering::Greater;
  return PartialOrdering::Incomparable;
}

template <typename T>
constexpr bool preceq(const Hyperbolic<T>& a, const Hyperbolic<T>& b) { return a.x1 <= b.x1 && a.x2 <= b.x2; }
template <typename T>
constexpr bool prec(const Hyperbolic<T>& a, const Hyperbolic<T>& b) { return a.x1 < b.x1 && a.x2 < b.x2; }
template <typename T>
constexpr bool succeq(const Hyperbolic<T>& a, const Hyperbolic<T>& b) { return preceq(b, a); }
template <typename T>
constexpr bool succ(const Hyperbolic<T>& a, const Hyperbolic<T>& b) { return prec(b, a); }

/// Componentwise absolute tolerance.
template <typename T>
bool approx_eq(const Hyperbolic<T>& a, const Hyperbolic<T>& b, T tol = T(1e-12)) {
  return std::abs(a.x1 - b.x1) <= tol && std::abs(a.x2 - b.x2) <= tol;
}

// ---------------------------------------------------------------------------
// Elementary functions

template <typename T>
Hyperbolic<T> modulus_k(const Hyperbolic<T>& xi) {
  return {std::abs(xi.x1), std::abs(xi.x2)};
}

template <typename T>
Hyperbolic<T> metric_Dk(const Hyperbolic<T>& a, const Hyperbolic<T>& b) {
  return modulus_k(a - b);
}

struct PowOptions {
  /// Evaluate 0^0 as 1. Only Hartley entropy uses this.
  bool zero_pow_zero_is_one = false;
};

namespace detail {

template <typename T>
T component_pow(T base, T exponent, PowOptions opts) {
  if (base < T(0)) throw Error(Errc::DomainError, "hyperbolic power of a negative component");
  if (base == T(0)) {
    if (exponent > T(0)) return T(0);
    if (exponent == T(0) && opts.zero_pow_zero_is_one) return T(1);
    throw Error(Errc::DomainError, "0^b with b <= 0");
  }
  return std::pow(base, exponent);
}

}  // namespace detail

/// alpha^beta = a1^b1 e1 + a2^b2 e2 for alpha in D+ (zero components allowed
/// when the matching exponent is positive).
template <typename T>
Hyperbolic<T> hyp_pow(const Hyperbolic<T>& base, const Hyperbolic<T>& exponent, PowOptions opts = {}) {
  return {detail::component_pow(base.x1, exponent.x1, opts),
          detail::component_pow(base.x2, exponent.x2, opts)};
}

/// Natural logarithm, componentwise; both components must be positive.
template <typename T>
Hyperbolic<T> hyp_log(const Hyperbolic<T>& xi) {
  if (!(xi.x1 > T(0) && xi.x2 > T(0))) {
    throw Error(Errc::DomainError, "hyperbolic logarithm needs both components > 0");
  }
  return {std::log(xi.x1), std::log(xi.x2)};
}

template <typename T>
Hyperbolic<T> hyp_exp(const Hyperbolic<T>& xi) {
  return {std::exp(xi.x1), std::exp(xi.x2)};
}

// ---------------------------------------------------------------------------
// Order intervals

template <typename T>
class Interval {
 public:
  /// [lo, hi]_D. Requires lo <= hi and hi - lo not a zero divisor.
  static Interval closed(const Hyperbolic<T>& lo, const Hyperbolic<T>& hi) {
    if (!preceq(lo, hi)) throw Error(Errc::InvalidInterval, "closed interval needs lo <= hi");
    if (is_zero_divisor(hi - lo)) {
      throw Error(Errc::InvalidInterval, "closed interval width is a zero divisor");
    }
    return Interval(lo, hi, true);
  }

  /// (lo, hi)_D. Bounds may be infinite.
  static Interval open(const Hyperbolic<T>& lo, const Hyperbolic<T>& hi) {
    if (!preceq(lo, hi)) throw Error(Errc::InvalidInterval, "open interval needs lo <= hi");
    return Interval(lo, hi, false);
  }

  static Interval unit() { return closed(zero_d<T>(), one_d<T>()); }

  static Interval whole() {
    constexpr T inf = std::numeric_limits<T>::infinity();
    return open({-inf, -inf}, {inf, inf});
  }

  const Hyperbolic<T>& lo() const { return lo_; }
  const Hyperbolic<T>& hi() const { return hi_; }
  bool is_closed() const { return closed_; }

  bool contains(const Hyperbolic<T>& xi) const {
    return closed_ ? preceq(lo_, xi) && preceq(xi, hi_) : prec(lo_, xi) && prec(xi, hi_);
  }

  bool contains_interior(const Hyperbolic<T>& xi) const { return prec(lo_, xi) && prec(xi, hi_); }

  bool is_bounded() const {
    return std::isfinite(lo_.x1) && std::isfinite(lo_.x2) && std::isfinite(hi_.x1) &&
           std::isfinite(hi_.x2);
  }

  /// No interior point in at least one component.
  bool is_degenerate() const { return !prec(lo_, hi_); }

 private:
  Interval(const Hyperbolic<T>& lo, const Hyperbolic<T>& hi, bool closed)
      : lo_(lo), hi_(hi), closed_(closed) {}

  Hyperbolic<T> lo_;
  Hyperbolic<T> hi_;
  bool closed_;
};

// ---------------------------------------------------------------------------
// Text

enum class Basis { Idempotent, UnitK };

/// "x1*e1+x2*e2" (idempotent) or "a+bk" (unit-k), shortest round-trip digits.
std::string to_string(const HyperbolicNumber& xi, Basis basis = Basis::Idempotent);

/// Accepts either rendering of `to_string`, with optional spaces, or a bare
/// real (embedded as x*1_D). Throws Error(ParseError).
HyperbolicNumber parse_hyperbolic(std::string_view text);

/// Whole-string real literal; ParseError otherwise.
double parse_real(std::string_view text);

}  // namespace hypent

#endif  // HYPENT_CORE_HPP
