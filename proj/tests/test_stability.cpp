#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypent/entropy.hpp"
#include "hypent/stability.hpp"
#include "support.hpp"

using namespace hypent;
using H = HyperbolicNumber;

namespace {

RealDistribution<double> real(std::initializer_list<double> p) {
  return RealDistribution<double>::from(std::vector<double>(p));
}

// Shannon, CertaintySpread, N = 3, delta = 0.1; mpmath, 30 digits.
constexpr double kShannonCs3 = 0.2122428492553583356;

}  // namespace

TEST_CASE("Lesche norm") {
  CHECK(lesche_norm(real({0.5, 0.5}), real({0.5, 0.5})) == 0.0);
  CHECK(lesche_norm(real({1.0, 0.0}), real({0.0, 1.0})) == 2.0);
  CHECK(lesche_norm(real({0.5, 0.5}), real({0.55, 0.45})) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_ERRC(lesche_norm(uniform<double>(2), uniform<double>(3)), Errc::LengthMismatch);

  Xoshiro256 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto n = 2 + static_cast<Eigen::Index>(rng.below(20));
    const auto a = random_distribution(n, rng);
    const auto b = random_distribution(n, rng);
    const auto c = random_distribution(n, rng);
    CHECK(lesche_norm(a, b) == lesche_norm(b, a));
    CHECK(lesche_norm(a, c) <= lesche_norm(a, b) + lesche_norm(b, c) + 1e-15);
    CHECK(lesche_norm_hyp(embed(a), embed(b)) == embed_real(lesche_norm(a, b)));
  }
}

TEST_CASE("hyperbolic Lesche norm") {
  const auto B = validate<double>({{0.5, 0.25}, {0.5, 0.75}});
  const auto Bp = validate<double>({{0.4, 0.3}, {0.6, 0.7}});
  const auto d = lesche_norm_hyp(B, Bp);
  CHECK(d.x1 == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(d.x2 == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_ERRC(lesche_norm_hyp(B, uniform_hyp<double>(3)), Errc::LengthMismatch);
  CHECK_ERRC(lesche_norm_hyp(B, validate<double>({{0.3, 0.0}, {0.7, 0.0}})), Errc::CaseMismatch);
}

TEST_CASE("measure specs") {
  const auto r = parse_measure_spec("renyi:0.5");
  CHECK(r.measure == Measure::Renyi);
  CHECK(*r.order == embed_real(0.5));
  CHECK(*parse_measure_spec("renyi_hyp:0.5,2").order == H{0.5, 2});
  CHECK_FALSE(parse_measure_spec("shannon").order.has_value());
  CHECK(to_string(r) == "renyi:0.5");
  CHECK(to_string(parse_measure_spec("renyi_hyp:0.5,2")) == "renyi_hyp:0.5,2");
  CHECK(to_string(parse_measure_spec("shannon")) == "shannon");
  CHECK_ERRC(parse_measure_spec("renyi"), Errc::ParseError);
  CHECK_ERRC(parse_measure_spec("shannon:2"), Errc::ParseError);
  CHECK_ERRC(parse_measure_spec("renyi:x"), Errc::ParseError);
  CHECK_ERRC(parse_measure_spec("nope"), Errc::ParseError);
}

TEST_CASE("stability ratio") {
  const auto pair = perturbation_family(PerturbationFamily::CertaintySpread, 3, 0.1, 0);
  const auto rec = stability_ratio(parse_measure_spec("shannon"), pair);
  CHECK(rec.ratio.x1 == doctest::Approx(kShannonCs3).epsilon(1e-13));
  CHECK(rec.ratio.x2 == rec.ratio.x1);
  CHECK(rec.norm.x1 == doctest::Approx(0.1).epsilon(1e-13));
  CHECK_FALSE(rec.error.has_value());
  CHECK_FALSE(rec.order.has_value());

  const auto hyp = stability_ratio(parse_measure_spec("strong_shannon_hyp"), pair);
  CHECK(hyp.ratio == rec.ratio);

  const auto renyi = stability_ratio(parse_measure_spec("renyi:2"), pair);
  CHECK(*renyi.order == embed_real(2.0));

  const auto B = validate<double>({{0.5, 0.25}, {0.5, 0.75}});
  const auto Bp = validate<double>({{0.4, 0.3}, {0.6, 0.7}});
  const auto hr = stability_ratio_hyp(parse_measure_spec("strong_shannon_hyp"), B, Bp);
  const auto sB = strong_shannon_hyp(B);
  const auto sBp = strong_shannon_hyp(Bp);
  CHECK(hr.x1 == doctest::Approx(std::abs(sB.x1 - sBp.x1) / std::log(2.0)));
  CHECK(hr.x2 == doctest::Approx(std::abs(sB.x2 - sBp.x2) / std::log(2.0)));
  CHECK_ERRC(stability_ratio_hyp(parse_measure_spec("shannon"), uniform_hyp<double>(1), uniform_hyp<double>(1)),
             Errc::DegenerateN);
  CHECK_ERRC(stability_ratio_hyp(parse_measure_spec("shannon"), uniform_hyp<double>(2), uniform_hyp<double>(3)),
             Errc::LengthMismatch);
}

TEST_CASE("sweep ordering, determinism and error rows") {
  SweepConfig cfg;
  cfg.families = {PerturbationFamily::UniformSpike, PerturbationFamily::CertaintySpread};
  cfg.n_grid = {100, 10};
  cfg.delta_grid = {0.01, 0.001};
  cfg.measures = {parse_measure_spec("shannon"), parse_measure_spec("renyi:0.5")};
  cfg.seed = 9;
  const auto rows = stability_sweep(cfg);
  REQUIRE(rows.size() == 16);
  CHECK(rows.front().family == PerturbationFamily::CertaintySpread);
  CHECK(rows.front().measure == Measure::Shannon);
  CHECK(rows.front().n == 10);
  CHECK(rows.front().delta == 0.001);
  CHECK(rows[4].measure == Measure::Renyi);
  CHECK(rows.back().family == PerturbationFamily::UniformSpike);
  CHECK(rows == stability_sweep(cfg));

  cfg.families = {PerturbationFamily::RandomSmooth};
  const auto a = stability_sweep(cfg);
  cfg.seed = 10;
  CHECK_FALSE(a == stability_sweep(cfg));

  cfg.n_grid = {1, 10};
  cfg.delta_grid = {0.01, 2.0};
  const auto bad = stability_sweep(cfg);
  REQUIRE(bad.size() == 8);
  CHECK(bad[0].error == Errc::DegenerateN);
  CHECK(bad[0].ratio == zero_d<double>());
  CHECK(bad[2].n == 10);
  CHECK_FALSE(bad[2].error.has_value());
  CHECK(bad[3].error == Errc::BadDelta);

  cfg.n_grid.clear();
  CHECK_ERRC(stability_sweep(cfg), Errc::DomainError);
}

TEST_CASE("stability and instability signatures") {
  SweepConfig cfg;
  cfg.families = {PerturbationFamily::CertaintySpread};
  cfg.n_grid = {100, 1000, 10000, 100000};
  cfg.delta_grid = {0.001};
  cfg.measures = {parse_measure_spec("shannon")};
  const auto shannon = stability_sweep(cfg);
  for (std::size_t i = 1; i < shannon.size(); ++i) CHECK(shannon[i].ratio.x1 < shannon[i - 1].ratio.x1);

  cfg.delta_grid = {0.01};
  cfg.measures = {parse_measure_spec("renyi:0.5")};
  const auto renyi = stability_sweep(cfg);
  for (std::size_t i = 1; i < renyi.size(); ++i) CHECK(renyi[i].ratio.x1 > renyi[i - 1].ratio.x1);
  CHECK(renyi.back().ratio.x1 > 0.4);
  CHECK(renyi.back().ratio.x1 < 1.0);
}
