#include "hypent/probability.hpp"

#include <string>

#include "hypent/random.hpp"

namespace hypent {

std::string_view to_string(PerturbationFamily family) {
  switch (family) {
    case PerturbationFamily::CertaintySpread: return "certainty_spread";
    case PerturbationFamily::UniformSpike: return "uniform_spike";
    case PerturbationFamily::RandomSmooth: return "random_smooth";
  }
  return "certainty_spread";
}

PerturbationFamily parse_family(std::string_view name) {
  for (auto f : {PerturbationFamily::CertaintySpread, PerturbationFamily::UniformSpike,
                 PerturbationFamily::RandomSmooth}) {
    if (name == to_string(f)) return f;
  }
  throw Error(Errc::ParseError, "unknown perturbation family '" + std::string(name) + "'");
}

RealDistribution<double> random_distribution(Eigen::Index n, Xoshiro256& rng) {
  if (n < 1) throw Error(Errc::DegenerateN, "distribution needs N >= 1");
  Vec<double> p(n);
  for (Eigen::Index s = 0; s < n; ++s) {
    double u = 0;
    while (u == 0) u = rng.uniform01();
    p[s] = -std::log(u);
  }
  return RealDistribution<double>(p / p.sum());
}

HyperbolicDistribution<double> random_hyperbolic_distribution(Eigen::Index n, Xoshiro256& rng) {
  ComponentMatrix<double> comps(n, 2);
  comps.col(0) = random_distribution(n, rng).probabilities();
  comps.col(1) = random_distribution(n, rng).probabilities();
  return validate<double>(comps);
}

PerturbationPair perturbation_family(PerturbationFamily family, Eigen::Index n, double delta,
                                     std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(Errc::BadDelta, "delta must satisfy 0 < delta < 1, got " + std::to_string(delta));
  }
  if (n < 2) throw Error(Errc::DegenerateN, "perturbation families need N >= 2");

  const double half = delta / 2.0;
  Vec<double> base(n);
  Vec<double> moved(n);
  double expected = delta;

  switch (family) {
    case PerturbationFamily::CertaintySpread:
      base.setZero();
      base[0] = 1.0;
      moved.setConstant(half / static_cast<double>(n - 1));
      moved[0] = 1.0 - half;
      break;

    case PerturbationFamily::UniformSpike: {
      const double inv_n = 1.0 / static_cast<double>(n);
      base.setConstant(inv_n);
      moved.setConstant((1.0 - half) * inv_n);
      moved[0] += half;
      expected = delta * static_cast<double>(n - 1) / static_cast<double>(n);
      break;
    }

    case PerturbationFamily::RandomSmooth: {
      Xoshiro256 rng(seed);
      base = random_distribution(n, rng).probabilities();
      Eigen::Index receiver = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
      if (1.0 - base[receiver] < half) base.minCoeff(&receiver);
      // The receiver gains d/2; every other state gives up d/2 in proportion to its mass.
      const double donor_mass = 1.0 - base[receiver];
      moved = base - (half / donor_mass) * base;
      moved[receiver] = base[receiver] + half;
      break;
    }
  }
  return PerturbationPair{RealDistribution<double>(std::move(base)),
                          RealDistribution<double>(std::move(moved)), family, delta, n, expected};
}

}  // namespace hypent
