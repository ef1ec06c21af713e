#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypent/entropy.hpp"
#include "hypent/measures.hpp"
#include "support.hpp"

using namespace hypent;
using H = HyperbolicNumber;

namespace {

// 40-digit mpmath evaluations, rounded.
constexpr double kS_P = 1.039720770839917964;    // S(0.5, 0.25, 0.25)
constexpr double kJ_P = 0.778096698957644046;    // J(0.5, 0.25, 0.25)
constexpr double kR2_P = 0.980829253011726237;   // R_2(0.5, 0.25, 0.25)
constexpr double kRhalf_P = 1.069599993479140741;
constexpr double kR3_P = 0.928148995182813086;
constexpr double kRJ2_P = 0.749386898882821387;  // Rényi extropy, q = 2
constexpr double kRJhalf_P = 0.794022194489659101;
constexpr double kSfE1 = 0.6931471805599453094;  // S_f of the B fixture
constexpr double kSfE2 = 0.5623351446188083503;
constexpr double kCollE2 = 0.4700036292457355537;
constexpr double kS_3_7 = 0.6108643020548934630;
constexpr double kJ_U3 = 0.810930216216328764;

const RealDistribution<double> kP(Vec<double>{{0.5, 0.25, 0.25}});
const auto kB = validate<double>({{0.5, 0.25}, {0.5, 0.75}});

std::vector<double> as_vector(const RealDistribution<double>& P) {
  return {P.probabilities().data(), P.probabilities().data() + P.size()};
}

}  // namespace

TEST_CASE("shannon and extropy") {
  CHECK(shannon(uniform<double>(2)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(shannon(RealDistribution<double>(Vec<double>{{1.0, 0.0, 0.0}})) == 0.0);
  CHECK(shannon(kP) == doctest::Approx(kS_P).epsilon(1e-14));

  CHECK(std::abs(extropy(uniform<double>(3)) - 2 * std::log(1.5)) <= 1e-12);
  CHECK(extropy(uniform<double>(3)) == doctest::Approx(kJ_U3).epsilon(1e-14));
  CHECK(extropy(kP) == doctest::Approx(kJ_P).epsilon(1e-14));
  const RealDistribution<double> two(Vec<double>{{0.3, 0.7}});
  CHECK(extropy(two) == doctest::Approx(shannon(two)).epsilon(1e-15));
  CHECK(binary_entropy(0.3) == doctest::Approx(kS_3_7).epsilon(1e-14));
  CHECK(binary_entropy(0.0) == 0.0);
}

TEST_CASE("extropy duality") {
  const auto half = extropy_duality_check(uniform<double>(2));
  CHECK(half.lhs == doctest::Approx(std::log(2.0)));
  CHECK(half.rhs == doctest::Approx(std::log(2.0)));
  const auto certain = extropy_duality_check(RealDistribution<double>(Vec<double>{{1.0, 0.0}}));
  CHECK(certain.lhs == 0.0);
  CHECK(std::abs(certain.rhs) < 1e-15);
  const auto d = extropy_duality_check(kP);
  CHECK(d.lhs == doctest::Approx(kJ_P).epsilon(1e-12));
  CHECK(std::abs(d.lhs - d.rhs) <= 1e-10);
  CHECK(std::abs(d.lhs_sym - d.rhs_sym) <= 1e-10);
}

TEST_CASE("renyi, hartley, collision") {
  for (double q : {0.0, 0.3, 2.0, 7.5}) {
    CHECK(renyi(uniform<double>(6), q) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  }
  CHECK(renyi(kP, 2.0) == doctest::Approx(kR2_P).epsilon(1e-14));
  CHECK(renyi(kP, 0.5) == doctest::Approx(kRhalf_P).epsilon(1e-14));
  CHECK(renyi(kP, 3.0) == doctest::Approx(kR3_P).epsilon(1e-14));
  CHECK(renyi(RealDistribution<double>(Vec<double>{{1.0, 0.0, 0.0}}), 0.5) == 0.0);
  CHECK_ERRC(renyi(kP, 1.0), Errc::OrderOne);
  CHECK_ERRC(renyi(kP, -0.5), Errc::NegativeOrder);

  CHECK(hartley(RealDistribution<double>(Vec<double>{{0.1, 0.2, 0.3, 0.4, 0.0}})) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-15));
  CHECK(collision(uniform<double>(4)) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(collision(RealDistribution<double>(Vec<double>{{1.0, 0.0}})) == 0.0);
}

TEST_CASE("renyi extropy") {
  CHECK(renyi_extropy(uniform<double>(2), 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(renyi_extropy(kP, 2.0) == doctest::Approx(kRJ2_P).epsilon(1e-14));
  CHECK(renyi_extropy(kP, 0.5) == doctest::Approx(kRJhalf_P).epsilon(1e-14));
  CHECK(renyi_extropy(uniform<double>(1), 2.0) == 0.0);
  CHECK_ERRC(renyi_extropy(kP, 1.0), Errc::OrderOne);
  CHECK_ERRC(renyi_extropy(kP, 0.0), Errc::NonPositiveOrder);
}

TEST_CASE("generating-function rewrite of Shannon") {
  CHECK(shannon_via_generating(uniform<double>(2)) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
  CHECK(std::abs(shannon_via_generating(kP) - kS_P) < 1e-8);
  CHECK(std::abs(shannon_via_generating(uniform<double>(10)) - std::log(10.0)) < 1e-8);
  CHECK_ERRC(shannon_via_generating(RealDistribution<double>(Vec<double>{{1.0, 0.0}})), Errc::ZeroProbability);

  CHECK(approx_eq(strong_shannon_via_generating(uniform_hyp<double>(2)), embed_real(std::log(2.0)), 1e-8));
  CHECK(approx_eq(strong_shannon_via_generating(kB), H{kSfE1, kSfE2}, 1e-8));
  CHECK(approx_eq(strong_shannon_via_generating(uniform_hyp<double>(16)), embed_real(std::log(16.0)), 1e-8));
  CHECK_ERRC(strong_shannon_via_generating(validate<double>({{0.5, 0.0}, {0.5, 1.0}})), Errc::ZeroComponent);
}

TEST_CASE("strong hyperbolic Shannon entropy") {
  for (Eigen::Index n : {1, 2, 7, 64}) {
    CHECK(approx_eq(strong_shannon_hyp(uniform_hyp<double>(n)), embed_real(std::log(static_cast<double>(n)))));
  }
  const auto s = strong_shannon_hyp(kB);
  CHECK(s.x1 == doctest::Approx(kSfE1).epsilon(1e-15));
  CHECK(s.x2 == doctest::Approx(kSfE2).epsilon(1e-15));
  const auto e1 = strong_shannon_hyp(validate<double>({{0.3, 0.0}, {0.7, 0.0}}));
  CHECK(e1.x1 == doctest::Approx(kS_3_7).epsilon(1e-15));
  CHECK(e1.x2 == 0.0);
  const auto e2 = strong_shannon_hyp(validate<double>({{0.0, 0.3}, {0.0, 0.7}}));
  CHECK(e2.x1 == 0.0);
  CHECK(e2.x2 == doctest::Approx(kS_3_7).epsilon(1e-15));
}

TEST_CASE("hyperbolic Rényi entropy") {
  CHECK(approx_eq(renyi_hyp(uniform_hyp<double>(2), H{2, 0.5}), embed_real(std::log(2.0))));
  const auto r2 = renyi_hyp(kB, embed_real(2.0));
  CHECK(r2.x1 == doctest::Approx(kSfE1).epsilon(1e-15));
  CHECK(r2.x2 == doctest::Approx(kCollE2).epsilon(1e-15));
  CHECK(approx_eq(renyi_hyp(embed(kP), embed_real(2.0)), embed_real(kR2_P), 1e-14));

  CHECK_ERRC(renyi_hyp(kB, H{1, 2}), Errc::OrderOnZeroDivisorLine);
  CHECK_ERRC(renyi_hyp(kB, H{2, 1}), Errc::OrderOnZeroDivisorLine);
  CHECK_ERRC(renyi_hyp(kB, one_d<double>()), Errc::OrderOnZeroDivisorLine);
  CHECK_ERRC(renyi_hyp(kB, H{0, 2}), Errc::NonPositiveOrder);
  CHECK_ERRC(renyi_hyp(kB, H{-1, 2}), Errc::NonPositiveOrder);
  CHECK_ERRC(renyi_hyp(validate<double>({{0.3, 0.0}, {0.7, 0.0}}), embed_real(2.0)), Errc::CaseMismatch);

  // Extension: the a_i = 1 component falls back to Shannon.
  const auto mixed = renyi_hyp_mixed(kB, H{1, 2});
  CHECK(mixed.x1 == doctest::Approx(kSfE1).epsilon(1e-15));
  CHECK(mixed.x2 == doctest::Approx(kCollE2).epsilon(1e-15));
}

TEST_CASE("Rényi limit at order one") {
  CHECK(approx_eq(renyi_hyp_limit(uniform_hyp<double>(3)), embed_real(std::log(3.0)), 1e-6));
  CHECK(approx_eq(renyi_hyp_limit(kB), H{kSfE1, kSfE2}, 1e-6));
  CHECK(approx_eq(renyi_hyp_limit(embed(kP)), embed_real(kS_P), 1e-6));
  const auto detail = renyi_hyp_limit_detail(kB);
  CHECK(approx_eq(detail.direct, detail.lhopital, 1e-6));
  CHECK_ERRC(renyi_hyp_limit(validate<double>({{0.5, 0.0}, {0.5, 1.0}})), Errc::ZeroComponent);
}

TEST_CASE("hartley and collision, hyperbolic") {
  CHECK(approx_eq(hartley_hyp(validate<double>({{0.2, 0.0}, {0.3, 0.5}, {0.5, 0.5}})), embed_real(std::log(3.0))));
  CHECK(approx_eq(collision_hyp(uniform_hyp<double>(4)), embed_real(std::log(4.0))));
  const auto c = collision_hyp(kB);
  CHECK(c.x1 == doctest::Approx(kSfE1).epsilon(1e-15));
  CHECK(c.x2 == doctest::Approx(kCollE2).epsilon(1e-15));
}

TEST_CASE("hyperbolic extropies") {
  Xoshiro256 rng(21);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.uniform(0.5, 1.0);
    const double q = rng.uniform(0.5, 1.0);
    ComponentMatrix<double> c(2, 2);
    c << p, 1 - q, 1 - p, q;
    const auto B = validate<double>(c);
    CHECK(strong_extropy_hyp(B) == strong_shannon_hyp(B));
  }
  CHECK(approx_eq(strong_extropy_hyp(uniform_hyp<double>(3)), embed_real(kJ_U3)));
  CHECK(approx_eq(strong_extropy_hyp(embed(kP)), embed_real(kJ_P)));
  CHECK_ERRC(strong_extropy_hyp(validate<double>({{0.3, 0.0}, {0.7, 0.0}})), Errc::CaseMismatch);

  CHECK(approx_eq(renyi_extropy_hyp(uniform_hyp<double>(2), embed_real(2.0)).value, embed_real(std::log(2.0))));
  CHECK(approx_eq(renyi_extropy_hyp(embed(kP), embed_real(2.0)).value, embed_real(kRJ2_P), 1e-14));
  const auto single = renyi_extropy_hyp(uniform_hyp<double>(1), embed_real(2.0));
  CHECK(single.degenerate_n);
  CHECK(single.value == zero_d<double>());
  CHECK_ERRC(renyi_extropy_hyp(kB, H{1, 2}), Errc::OrderOnZeroDivisorLine);
  CHECK_ERRC(renyi_extropy_hyp(kB, H{0, 2}), Errc::NonPositiveOrder);
}

TEST_CASE("Rényi extropy near order one (regression fixture, no closed form asserted)") {
  // Recorded numerically; these coincide with J per component.
  const PlaneMap<double> at = [](const H& a) { return renyi_extropy_hyp(kB, a).value; };
  const auto lim = hyp_limit(at, one_d<double>());
  CHECK(lim.x1 == doctest::Approx(0.69314718055994531).epsilon(1e-8));
  CHECK(lim.x2 == doctest::Approx(0.56233514461880835).epsilon(1e-8));
  const auto skewed = embed(RealDistribution<double>(Vec<double>{{0.7, 0.2, 0.1}}));
  const PlaneMap<double> at2 = [&skewed](const H& a) { return renyi_extropy_hyp(skewed, a).value; };
  CHECK(hyp_limit(at2, one_d<double>()).x1 == doctest::Approx(0.63453114644119227).epsilon(1e-8));
}

TEST_CASE("componentwise factorization against plain-loop oracles") {
  Xoshiro256 rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto n = 2 + static_cast<Eigen::Index>(rng.below(49));
    const auto B = random_hyperbolic_distribution(n, rng);
    const auto p1 = as_vector(B.projection_distribution(0));
    const auto p2 = as_vector(B.projection_distribution(1));
    CHECK(approx_eq(strong_shannon_hyp(B), H{oracle::shannon(p1), oracle::shannon(p2)}));
    CHECK(approx_eq(strong_extropy_hyp(B), H{oracle::extropy(p1), oracle::extropy(p2)}));
    const H alpha{rng.uniform(0.1, 0.9), rng.uniform(1.1, 4.0)};
    CHECK(approx_eq(renyi_hyp(B, alpha), H{oracle::renyi(p1, alpha.x1), oracle::renyi(p2, alpha.x2)}));
    CHECK(approx_eq(renyi_extropy_hyp(B, alpha).value,
                    H{oracle::renyi_extropy(p1, alpha.x1), oracle::renyi_extropy(p2, alpha.x2)}));
    CHECK(approx_eq(collision_hyp(B), H{oracle::renyi(p1, 2), oracle::renyi(p2, 2)}));
  }
}

TEST_CASE("measure registry and dispatch") {
  CHECK(all_measures().size() == 16);
  for (auto m : all_measures()) CHECK(parse_measure(to_string(m)) == m);
  CHECK_ERRC(parse_measure("tsallis"), Errc::ParseError);
  CHECK(is_real_measure(Measure::Collision));
  CHECK_FALSE(is_real_measure(Measure::CollisionHyp));
  CHECK(needs_order(Measure::RenyiExtropyHyp));

  const auto half = embed(uniform<double>(2));
  CHECK(evaluate(Measure::Shannon, half).value == embed_real(std::log(2.0)));
  CHECK(evaluate(Measure::Renyi, embed(kP), embed_real(2.0)).value.x1 == doctest::Approx(kR2_P).epsilon(1e-14));
  CHECK_ERRC(evaluate(Measure::Shannon, kB), Errc::CaseMismatch);
  CHECK_ERRC(evaluate(Measure::Renyi, embed(kP), H{2, 3}), Errc::CaseMismatch);
  CHECK_ERRC(evaluate(Measure::RenyiHyp, kB), Errc::DomainError);
  const auto s = evaluate(Measure::StrongShannonHyp, kB, embed_real(5.0));
  CHECK_FALSE(s.order.has_value());
  CHECK(s.n == 2);
  CHECK(evaluate(Measure::RenyiExtropyHyp, uniform_hyp<double>(1), embed_real(2.0)).degenerate_n);
  CHECK(evaluate(Measure::RenyiExtropy, embed(uniform<double>(1)), embed_real(2.0)).degenerate_n);
}

TEST_CASE("long double entropies") {
  const auto B = validate<long double>({{0.5L, 0.25L}, {0.5L, 0.75L}});
  const auto s = strong_shannon_hyp(B);
  CHECK(std::abs(s.x2 - 0.5623351446188083503L) < 1e-18L);
  const auto r = renyi_hyp(B, embed_real(2.0L));
  CHECK(std::abs(r.x2 - 0.4700036292457355537L) < 1e-18L);
}
