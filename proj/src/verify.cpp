#include "hypent/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "hypent/catalog.hpp"
#include "hypent/entropy.hpp"
#include "hypent/io.hpp"
#include "hypent/measures.hpp"
#include "hypent/stability.hpp"

namespace hypent {

void apply_tolerance(Tolerances& tol, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(Errc::ParseError, "tolerance override must be name=value, got '" + std::string(assignment) + "'");
  }
  const auto name = assignment.substr(0, eq);
  const double value = parse_real(assignment.substr(eq + 1));
  if (!(value > 0) || !std::isfinite(value)) {
    throw Error(Errc::DomainError, "tolerance " + std::string(name) + " must be positive and finite");
  }
  if (name == "sum_tol") tol.sum_tol = value;
  else if (name == "limit_tol") tol.limit_tol = value;
  else if (name == "cr_tol") tol.cr_tol = value;
  else if (name == "lhopital_tol") tol.lhopital_tol = value;
  else if (name == "convexity_slack") tol.convexity_slack = value;
  else throw Error(Errc::ParseError, "unknown tolerance '" + std::string(name) + "'");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string hnum(const HyperbolicNumber& xi) { return "(" + num(xi.x1) + ", " + num(xi.x2) + ")"; }

/// Counts checks and keeps the first failure message.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& why) {
    ++checked_;
    if (ok) return;
    if (failed_++ == 0) first_ = why();
  }
  void note(std::string extra) { extra_ = std::move(extra); }

  InvariantResult result(std::string name) const {
    InvariantResult r{std::move(name), failed_ == 0, {}};
    if (failed_ == 0) {
      r.detail = std::to_string(checked_) + " checks";
    } else {
      r.detail = std::to_string(failed_) + "/" + std::to_string(checked_) + " failed; first: " + first_;
    }
    if (!extra_.empty()) r.detail += "; " + extra_;
    return r;
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::string first_;
  std::string extra_;
};

double ulp_distance(double a, double b) {
  if (a == b) return 0;
  const double gap = std::abs(std::nextafter(a, std::numeric_limits<double>::infinity()) - a);
  return std::abs(a - b) / gap;
}

double within(Xoshiro256& rng, double lo, double hi) { return rng.uniform(lo, hi); }

HyperbolicNumber random_number(Xoshiro256& rng, double lo, double hi) {
  return {within(rng, lo, hi), within(rng, lo, hi)};
}

/// A Rényi order with components in [lo, hi] kept at least 0.05 away from 1.
double order_component(Xoshiro256& rng, double lo, double hi) {
  double a = 1;
  while (std::abs(a - 1) < 0.05) a = within(rng, lo, hi);
  return a;
}

HyperbolicNumber random_order(Xoshiro256& rng, double lo = 0.1, double hi = 3.0) {
  return {order_component(rng, lo, hi), order_component(rng, lo, hi)};
}

Eigen::Index random_n(Xoshiro256& rng, Eigen::Index lo, Eigen::Index hi) {
  return lo + static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Same N, two independent projections of each side.
std::pair<HyperbolicDistribution<double>, HyperbolicDistribution<double>> random_pair(Xoshiro256& rng,
                                                                                    Eigen::Index n) {
  auto a = random_hyperbolic_distribution(n, rng);
  auto b = random_hyperbolic_distribution(n, rng);
  return {std::move(a), std::move(b)};
}

/// N = 2 with the larger probability drawn from [0.5, 1] so that the
/// complement is exact: 1 - (1 - p) == p.
HyperbolicDistribution<double> random_two_state(Xoshiro256& rng) {
  const double p1 = rng.uniform(0.5, 1.0);
  const double p2 = rng.uniform(0.5, 1.0);
  ComponentMatrix<double> c(2, 2);
  c << p1, p2, 1 - p1, 1 - p2;
  return validate<double>(c);
}

// ---------------------------------------------------------------------------
// core

InvariantResult core_ring_laws(Xoshiro256& rng) {
  Tally t;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_number(rng, -10, 10);
    const auto b = random_number(rng, -10, 10);
    const auto c = random_number(rng, -10, 10);
    auto close = [&](const HyperbolicNumber& x, const HyperbolicNumber& y, double scale) {
      return std::abs(x.x1 - y.x1) <= 2 * eps * scale && std::abs(x.x2 - y.x2) <= 2 * eps * scale;
    };
    const double add_scale = 30;
    const double mul_scale = 2 * 100 + 100;
    t.expect(close((a + b) + c, a + (b + c), add_scale), [&] { return "associativity at " + hnum(a); });
    t.expect(a * b == b * a, [&] { return "commutativity at " + hnum(a); });
    t.expect(close(a * (b + c), a * b + a * c, mul_scale), [&] { return "distributivity at " + hnum(a); });
  }
  return t.result("core.ring_laws");
}

InvariantResult core_idempotents() {
  Tally t;
  const auto e1 = unit_e1<double>();
  const auto e2 = unit_e2<double>();
  t.expect(e1 * e1 == e1, [] { return std::string("e1^2 != e1"); });
  t.expect(e2 * e2 == e2, [] { return std::string("e2^2 != e2"); });
  t.expect(e1 * e2 == zero_d<double>(), [] { return std::string("e1 e2 != 0"); });
  const auto k = unit_k<double>();
  t.expect(k * k == one_d<double>(), [] { return std::string("k^2 != 1"); });
  return t.result("core.idempotents");
}

InvariantResult core_partial_order(Xoshiro256& rng) {
  Tally t;
  // Small integer grid so that ties and comparable pairs are frequent.
  auto grid = [&rng]() -> HyperbolicNumber {
    return {static_cast<double>(rng.below(5)) - 2, static_cast<double>(rng.below(5)) - 2};
  };
  for (int i = 0; i < 5000; ++i) {
    const auto a = grid();
    const auto b = grid();
    const auto c = grid();
    t.expect(preceq(a, a) && partial_cmp(a, a) == PartialOrdering::Equal,
             [&] { return "reflexivity at " + hnum(a); });
    t.expect(!(preceq(a, b) && preceq(b, a)) || a == b, [&] { return "antisymmetry at " + hnum(a); });
    t.expect(!(preceq(a, b) && preceq(b, c)) || preceq(a, c), [&] { return "transitivity at " + hnum(a); });
    t.expect((partial_cmp(a, b) == PartialOrdering::Incomparable) ==
                 (partial_cmp(b, a) == PartialOrdering::Incomparable),
             [&] { return "incomparability not symmetric at " + hnum(a) + ", " + hnum(b); });
  }
  return t.result("core.partial_order");
}

InvariantResult core_triangle(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_number(rng, -5, 5);
    const auto b = random_number(rng, -5, 5);
    const auto c = random_number(rng, -5, 5);
    const auto lhs = metric_Dk(a, c);
    const auto rhs = metric_Dk(a, b) + metric_Dk(b, c);
    t.expect(preceq(lhs, rhs + embed_real(1e-12)), [&] { return hnum(lhs) + " > " + hnum(rhs); });
  }
  return t.result("core.triangle_inequality");
}

InvariantResult core_componentwise(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_number(rng, -5, 5);
    const auto b = random_number(rng, 0.5, 5);
    const auto pos = random_number(rng, 0.01, 10);
    auto same = [](const HyperbolicNumber& h, double y1, double y2) { return h.x1 == y1 && h.x2 == y2; };
    t.expect(same(a + b, a.x1 + b.x1, a.x2 + b.x2), [&] { return "sum at " + hnum(a); });
    t.expect(same(a - b, a.x1 - b.x1, a.x2 - b.x2), [&] { return "difference at " + hnum(a); });
    t.expect(same(a * b, a.x1 * b.x1, a.x2 * b.x2), [&] { return "product at " + hnum(a); });
    t.expect(same(a / b, a.x1 / b.x1, a.x2 / b.x2), [&] { return "quotient at " + hnum(a); });
    auto ulp1 = [](const HyperbolicNumber& h, double y1, double y2) {
      return ulp_distance(h.x1, y1) <= 1 && ulp_distance(h.x2, y2) <= 1;
    };
    t.expect(ulp1(hyp_exp(a), std::exp(a.x1), std::exp(a.x2)), [&] { return "exp at " + hnum(a); });
    t.expect(ulp1(hyp_log(pos), std::log(pos.x1), std::log(pos.x2)), [&] { return "log at " + hnum(pos); });
    t.expect(ulp1(hyp_pow(pos, a), std::pow(pos.x1, a.x1), std::pow(pos.x2, a.x2)),
             [&] { return "pow at " + hnum(pos); });
  }
  return t.result("core.componentwise_oracle");
}

// ---------------------------------------------------------------------------
// calculus

InvariantResult calculus_analytic_vs_fd(Xoshiro256& rng) {
  Tally t;
  double worst = 0;
  for (const auto& entry : shipped_functions()) {
    const auto& box = entry.sample_box;
    for (int i = 0; i < 100; ++i) {
      const HyperbolicNumber xi{within(rng, box.lo().x1, box.hi().x1), within(rng, box.lo().x2, box.hi().x2)};
      const auto exact = hyp_derivative(entry.function, xi);
      const auto approx = fd_derivative(entry.function.value, xi);
      const double gap = std::max(std::abs(exact.x1 - approx.x1), std::abs(exact.x2 - approx.x2));
      worst = std::max(worst, gap);
      t.expect(gap < 1e-6, [&] { return entry.name + " at " + hnum(xi) + " off by " + num(gap); });
    }
  }
  t.note("max discrepancy " + num(worst));
  return t.result("calculus.analytic_vs_finite_difference");
}

/// Linearity of the numerical operator itself: FD(aF + bG) against
/// a FD(F) + b FD(G) with hyperbolic scalars a, b.
InvariantResult calculus_linearity(Xoshiro256& rng) {
  Tally t;
  double worst = 0;
  const auto& fns = shipped_functions();
  for (int i = 0; i < 200; ++i) {
    const auto& F = fns[rng.below(fns.size())];
    const auto& G = fns[rng.below(fns.size())];
    const auto a = random_number(rng, -1, 1);
    const auto b = random_number(rng, -1, 1);
    const ComponentFunction<double>& f = F.function.value;
    const ComponentFunction<double>& g = G.function.value;
    const ComponentFunction<double> combo{[&](double x) { return a.x1 * f.f1(x) + b.x1 * g.f1(x); },
                                          [&](double x) { return a.x2 * f.f2(x) + b.x2 * g.f2(x); }};
    const HyperbolicNumber xi{std::max(F.sample_box.lo().x1, G.sample_box.lo().x1) + 0.5 * rng.uniform01(),
                              std::max(F.sample_box.lo().x2, G.sample_box.lo().x2) + 0.5 * rng.uniform01()};
    const auto lhs = fd_derivative(combo, xi);
    const auto rhs = a * fd_derivative(f, xi) + b * fd_derivative(g, xi);
    // Difference roundoff is eps |f| / h, so the bound scales with the values.
    const auto fv = f(xi);
    const auto gv = g(xi);
    const double scale = 1 + std::max(std::abs(a.x1 * fv.x1) + std::abs(b.x1 * gv.x1),
                                      std::abs(a.x2 * fv.x2) + std::abs(b.x2 * gv.x2));
    const double gap = std::max(std::abs(lhs.x1 - rhs.x1), std::abs(lhs.x2 - rhs.x2)) / scale;
    worst = std::max(worst, gap);
    t.expect(gap <= 1e-9, [&] { return F.name + ", " + G.name + ": scaled gap " + num(gap) + " at " + hnum(xi); });
  }
  t.note("max scaled gap " + num(worst));
  return t.result("calculus.derivative_linearity");
}

InvariantResult calculus_lhopital(const Tolerances& tol) {
  Tally t;
  const LimitOptions opts{tol.limit_tol};
  auto find = [](std::string_view name) -> const DifferentiableFunction<double>& {
    for (const auto& e : shipped_functions()) {
      if (e.name == name) return e.function;
    }
    throw Error(Errc::DomainError, "missing catalog entry");
  };
  const auto B = validate<double>({{0.5, 0.25}, {0.3, 0.6}, {0.2, 0.15}});
  struct Case {
    std::string label;
    DifferentiableFunction<double> f, g;
    HyperbolicNumber expected;
  };
  const std::vector<Case> cases{
      {"(xi^2-1)/(xi-1)", find("square_minus_one"), find("minus_one"), embed_real(2.0)},
      {"Log(xi)/(xi-1)", find("log"), find("minus_one"), embed_real(1.0)},
      {"renyi log-sum/(1-alpha)", find("renyi_log_sum"), find("one_minus"), strong_shannon_hyp(B)},
  };
  for (const auto& c : cases) {
    const auto r = lhopital_check(c.f, c.g, one_d<double>(), opts, tol.lhopital_tol);
    t.expect(r.agree, [&] { return c.label + ": " + hnum(r.lhs) + " vs " + hnum(r.rhs); });
    t.expect(approx_eq(r.rhs, c.expected, tol.lhopital_tol),
             [&] { return c.label + " limit " + hnum(r.rhs) + ", expected " + hnum(c.expected); });
  }
  return t.result("calculus.lhopital_shipped_pairs");
}

InvariantResult calculus_cauchy_riemann(Xoshiro256& rng, const Tolerances& tol) {
  Tally t;
  double worst = 0;
  for (const auto& entry : shipped_functions()) {
    const auto& box = entry.sample_box;
    for (int i = 0; i < 20; ++i) {
      const HyperbolicNumber xi{within(rng, box.lo().x1, box.hi().x1), within(rng, box.lo().x2, box.hi().x2)};
      const auto r = check_cauchy_riemann(entry.function, xi, tol.cr_tol);
      worst = std::max({worst, r.residuals.x1, r.residuals.x2});
      t.expect(r.holds, [&] { return entry.name + " residuals " + hnum(r.residuals) + " at " + hnum(xi); });
    }
  }
  // The swap (x1, x2) -> (x2, x1) is smooth on R^2 but not of idempotent form.
  const PlaneMap<double> swap = [](const HyperbolicNumber& z) { return HyperbolicNumber{z.x2, z.x1}; };
  for (int i = 0; i < 20; ++i) {
    const auto xi = random_number(rng, -2, 2);
    const auto r = check_cauchy_riemann(swap, xi, tol.cr_tol);
    t.expect(!r.holds && std::max(r.residuals.x1, r.residuals.x2) > 0.1,
             [&] { return "swap map passes at " + hnum(xi); });
  }
  t.note("max residual " + num(worst));
  return t.result("calculus.cauchy_riemann");
}

InvariantResult calculus_sf_concave_on_segments(Xoshiro256& rng, const Tolerances& tol) {
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const auto [A, B] = random_pair(rng, random_n(rng, 2, 20));
    auto along = [&A = A, &B = B](int c) {
      return [a = Vec<double>(A.projection(c)), b = Vec<double>(B.projection(c))](double s) {
        const Vec<double> p = (1 - s) * a + s * b;
        double h = 0;
        for (Eigen::Index j = 0; j < p.size(); ++j) h -= xlogx(p[j]);
        return h;
      };
    };
    const ComponentFunction<double> F{along(0), along(1), Interval<double>::unit()};
    const auto report = concavity_probe(F, 2000, rng(), tol.convexity_slack);
    t.expect(report.concave, [&] { return "violation on segment " + std::to_string(i); });
  }
  return t.result("calculus.strong_shannon_concave_on_segments");
}

// ---------------------------------------------------------------------------
// probability

bool same_distribution(const HyperbolicDistribution<double>& a, const HyperbolicDistribution<double>& b) {
  return a.dist_case() == b.dist_case() && a.components() == b.components();
}

std::vector<std::pair<std::string, HyperbolicDistribution<double>>> shipped_fixtures() {
  std::vector<std::pair<std::string, HyperbolicDistribution<double>>> out;
  out.emplace_back("B", validate<double>({{0.5, 0.25}, {0.5, 0.75}}));
  out.emplace_back("embedded", embed(RealDistribution<double>(Vec<double>{{0.5, 0.25, 0.25}})));
  out.emplace_back("uniform_hyp(7)", uniform_hyp<double>(7));
  out.emplace_back("e1_only", validate<double>({{0.4, 0.0}, {0.6, 0.0}}));
  out.emplace_back("e2_only", validate<double>({{0.0, 0.1}, {0.0, 0.2}, {0.0, 0.7}}));
  out.emplace_back("thirds", validate<double>({{1.0 / 3, 0.1}, {1.0 / 3, 0.2}, {1.0 / 3, 0.7}}));
  return out;
}

void check_roundtrip(Tally& t, const std::string& label, const HyperbolicDistribution<double>& dist,
                     double sum_tol) {
  for (auto format : {io::Format::Csv, io::Format::Json}) {
    const auto text = io::write_distribution(dist, format);
    const auto back = io::parse_distribution(text, sum_tol);
    t.expect(same_distribution(dist, back.dist), [&] {
      return label + " changed after " + (format == io::Format::Csv ? "CSV" : "JSON") + " round trip";
    });
  }
}

InvariantResult probability_roundtrip(const VerifyOptions& options) {
  Tally t;
  for (const auto& [label, dist] : shipped_fixtures()) check_roundtrip(t, label, dist, options.tol.sum_tol);
  for (const auto& input : options.inputs) {
    try {
      const auto loaded = io::parse_distribution(input.text, options.tol.sum_tol);
      check_roundtrip(t, input.label, loaded.dist, options.tol.sum_tol);
    } catch (const Error& e) {
      t.expect(false, [&] { return input.label + ": " + e.what(); });
    }
  }
  return t.result("probability.serialization_roundtrip");
}

InvariantResult probability_embed(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto P = random_distribution(random_n(rng, 1, 50), rng);
    const auto B = embed(P);
    t.expect(B.projection(0) == P.probabilities() && B.projection(1) == P.probabilities() &&
                 B.dist_case() == DistributionCase::Full,
             [&] { return "projection differs at N = " + std::to_string(P.size()); });
  }
  return t.result("probability.embed_projections");
}

InvariantResult probability_mix(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto [A, B] = random_pair(rng, random_n(rng, 2, 50));
    const HyperbolicNumber lambda{rng.uniform01(), rng.uniform01()};
    const auto M = mix(A, B, lambda);
    const HyperbolicNumber sum{M.projection(0).sum(), M.projection(1).sum()};
    t.expect(approx_eq(sum, one_d<double>(), 1e-12), [&] { return "sum " + hnum(sum); });
  }
  return t.result("probability.mix_preserves_sum");
}

InvariantResult probability_perturbation_norm(Xoshiro256& rng) {
  Tally t;
  for (auto family : {PerturbationFamily::CertaintySpread, PerturbationFamily::UniformSpike,
                      PerturbationFamily::RandomSmooth}) {
    for (Eigen::Index n : {2, 3, 10, 1000, 100000}) {
      for (double delta : {1e-4, 0.01, 0.3, 0.9}) {
        const auto pair = perturbation_family(family, n, delta, rng());
        const double norm = lesche_norm(pair.base, pair.perturbed);
        t.expect(std::abs(norm - pair.expected_norm) <= 1e-12 && pair.expected_norm <= delta * (1 + 1e-15),
                 [&] {
                   return std::string(to_string(family)) + " N=" + std::to_string(n) + " delta=" + num(delta) +
                          ": norm " + num(norm) + ", declared " + num(pair.expected_norm);
                 });
      }
    }
  }
  return t.result("probability.perturbation_norm");
}

// ---------------------------------------------------------------------------
// entropy

InvariantResult entropy_factorization(Xoshiro256& rng) {
  Tally t;
  double worst = 0;
  auto check = [&](const char* what, const HyperbolicNumber& hyp, double r1, double r2) {
    const double gap = std::max(std::abs(hyp.x1 - r1), std::abs(hyp.x2 - r2));
    worst = std::max(worst, gap);
    t.expect(gap <= 1e-12, [&] { return std::string(what) + " off by " + num(gap); });
  };
  for (int i = 0; i < 200; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 2, 50), rng);
    const auto P1 = B.projection_distribution(0);
    const auto P2 = B.projection_distribution(1);
    check("S_f", strong_shannon_hyp(B), shannon(P1), shannon(P2));
    check("hartley_hyp", hartley_hyp(B), hartley(P1), hartley(P2));
    check("collision_hyp", collision_hyp(B), collision(P1), collision(P2));
    check("J_f", strong_extropy_hyp(B), extropy(P1), extropy(P2));
    for (int k = 0; k < 5; ++k) {
      const auto alpha = random_order(rng);
      check("renyi_hyp", renyi_hyp(B, alpha), renyi(P1, alpha.x1), renyi(P2, alpha.x2));
      check("renyi_extropy_hyp", renyi_extropy_hyp(B, alpha).value, renyi_extropy(P1, alpha.x1),
            renyi_extropy(P2, alpha.x2));
    }
  }
  t.note("max gap " + num(worst));
  return t.result("entropy.componentwise_factorization");
}

InvariantResult entropy_maxima(Xoshiro256& rng) {
  Tally t;
  for (Eigen::Index n = 2; n <= 64; ++n) {
    const auto U = uniform_hyp<double>(n);
    const auto expected = embed_real(std::log(static_cast<double>(n)));
    t.expect(approx_eq(strong_shannon_hyp(U), expected), [&] { return "S_f at N=" + std::to_string(n); });
    t.expect(approx_eq(hartley_hyp(U), expected), [&] { return "hartley_hyp at N=" + std::to_string(n); });
    for (int k = 0; k < 5; ++k) {
      const auto alpha = random_order(rng);
      const auto r = renyi_hyp(U, alpha);
      t.expect(approx_eq(r, expected),
               [&] { return "renyi_hyp at N=" + std::to_string(n) + ", alpha " + hnum(alpha) + ": " + hnum(r); });
    }
  }
  return t.result("entropy.maxima_at_uniform");
}

InvariantResult entropy_renyi_nonnegative(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 2, 50), rng);
    const auto alpha = random_order(rng);
    const auto r = renyi_hyp(B, alpha);
    t.expect(succeq(r, zero_d<double>()), [&] { return hnum(r) + " at alpha " + hnum(alpha); });
  }
  return t.result("entropy.renyi_nonnegative");
}

InvariantResult entropy_renyi_monotone(Xoshiro256& rng, const Tolerances& tol) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 2, 50), rng);
    const auto a = random_order(rng);
    const auto b = random_order(rng);
    const HyperbolicNumber lo{std::min(a.x1, b.x1), std::min(a.x2, b.x2)};
    const HyperbolicNumber hi{std::max(a.x1, b.x1), std::max(a.x2, b.x2)};
    const auto r_lo = renyi_hyp(B, lo);
    const auto r_hi = renyi_hyp(B, hi);
    t.expect(succeq(r_lo + embed_real(tol.convexity_slack), r_hi),
             [&] { return "R at " + hnum(lo) + " = " + hnum(r_lo) + " below R at " + hnum(hi) + " = " + hnum(r_hi); });
  }
  return t.result("entropy.renyi_non_increasing_in_order");
}

InvariantResult entropy_renyi_concave(Xoshiro256& rng, const Tolerances& tol) {
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const auto [A, B] = random_pair(rng, random_n(rng, 2, 30));
    const HyperbolicNumber alpha{rng.uniform(0.02, 0.95), rng.uniform(0.02, 0.95)};
    const HyperbolicNumber lambda{rng.uniform01(), rng.uniform01()};
    const auto lhs = renyi_hyp(mix(A, B, lambda), alpha);
    const auto rhs = (one_d<double>() - lambda) * renyi_hyp(A, alpha) + lambda * renyi_hyp(B, alpha);
    t.expect(succeq(lhs + embed_real(tol.convexity_slack), rhs),
             [&] { return hnum(lhs) + " below " + hnum(rhs) + " at alpha " + hnum(alpha); });
  }
  return t.result("entropy.renyi_concave");
}

InvariantResult entropy_extropy_two_states(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto B = random_two_state(rng);
    const auto s = strong_shannon_hyp(B);
    const auto j = strong_extropy_hyp(B);
    t.expect(ulp_distance(s.x1, j.x1) <= 1 && ulp_distance(s.x2, j.x2) <= 1,
             [&] { return hnum(s) + " vs " + hnum(j); });
  }
  return t.result("entropy.extropy_equals_shannon_n2");
}

InvariantResult entropy_extropy_dominance(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 3, 50), rng);
    const auto s = strong_shannon_hyp(B);
    const auto j = strong_extropy_hyp(B);
    t.expect(succeq(s, j), [&] { return hnum(s) + " below " + hnum(j); });
  }
  return t.result("entropy.shannon_dominates_extropy");
}

InvariantResult entropy_duality(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto P = random_distribution(random_n(rng, 2, 50), rng);
    const auto d = extropy_duality_check(P);
    t.expect(std::abs(d.lhs - d.rhs) <= 1e-10 && std::abs(d.lhs_sym - d.rhs_sym) <= 1e-10,
             [&] { return num(d.lhs) + " vs " + num(d.rhs); });
  }
  return t.result("entropy.extropy_duality");
}

InvariantResult entropy_generating_rewrite(Xoshiro256& rng) {
  Tally t;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 2, 30), rng);
    const auto via = strong_shannon_via_generating(B);
    const auto direct = strong_shannon_hyp(B);
    worst = std::max({worst, std::abs(via.x1 - direct.x1), std::abs(via.x2 - direct.x2)});
    t.expect(approx_eq(via, direct, 1e-8), [&] { return hnum(via) + " vs " + hnum(direct); });
  }
  t.note("max gap " + num(worst));
  return t.result("entropy.generating_function_rewrite");
}

InvariantResult entropy_limit(Xoshiro256& rng, const Tolerances& tol) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const auto B = random_hyperbolic_distribution(random_n(rng, 2, 30), rng);
    const auto lim = renyi_hyp_limit_detail(B, LimitOptions{tol.limit_tol}, tol.lhopital_tol);
    const auto s = strong_shannon_hyp(B);
    t.expect(approx_eq(lim.direct, s, 1e-6), [&] { return "direct " + hnum(lim.direct) + " vs " + hnum(s); });
    t.expect(approx_eq(lim.lhopital, s, 1e-6), [&] { return "L'Hopital " + hnum(lim.lhopital) + " vs " + hnum(s); });
  }
  return t.result("entropy.renyi_limit_is_shannon");
}

// ---------------------------------------------------------------------------
// stability

InvariantResult stability_norm_metric(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto n = random_n(rng, 1, 50);
    const auto P = random_distribution(n, rng);
    const auto Q = random_distribution(n, rng);
    const auto R = random_distribution(n, rng);
    t.expect(lesche_norm(P, Q) == lesche_norm(Q, P), [] { return std::string("asymmetric norm"); });
    t.expect(lesche_norm(P, R) <= lesche_norm(P, Q) + lesche_norm(Q, R) + 1e-15,
             [] { return std::string("triangle inequality"); });
    const auto h = lesche_norm_hyp(embed(P), embed(Q));
    t.expect(h == embed_real(lesche_norm(P, Q)), [&] { return "embedded norm " + hnum(h); });
  }
  return t.result("stability.lesche_norm_metric");
}

const std::vector<Eigen::Index> kSignatureGrid{2, 10, 100, 1000, 10000, 100000};

InvariantResult stability_signature(Measure measure, std::uint64_t seed) {
  Tally t;
  SweepConfig cfg{{PerturbationFamily::CertaintySpread, PerturbationFamily::UniformSpike,
                   PerturbationFamily::RandomSmooth},
                  kSignatureGrid,
                  {1e-4},
                  {MeasureSpec{measure, std::nullopt}},
                  seed};
  double worst = 0;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& r : stability_sweep(cfg)) {
    t.expect(!r.error, [&] { return std::string("error row ") + std::string(to_string(*r.error)); });
    if (r.error) continue;
    const double ratio = std::max(r.ratio.x1, r.ratio.x2);
    worst = std::max(worst, ratio);
    t.expect(ratio < 0.01, [&] {
      return std::string(to_string(r.family)) + " N=" + std::to_string(r.n) + " ratio " + num(ratio);
    });
    if (r.family == PerturbationFamily::CertaintySpread) {
      t.expect(ratio <= previous, [&] { return "ratio increases at N=" + std::to_string(r.n); });
      previous = ratio;
    }
  }
  t.note("max ratio " + num(worst));
  return t.result("stability.signature_" + std::string(to_string(measure)));
}

InvariantResult stability_instability(MeasureSpec spec, PerturbationFamily family, std::uint64_t seed) {
  Tally t;
  const auto pair = perturbation_family(family, 100000, 0.01, seed);
  const auto r = stability_ratio(spec, pair);
  const double ratio = std::min(r.ratio.x1, r.ratio.x2);
  t.expect(ratio > 0.4, [&] { return "ratio " + num(ratio) + " <= 0.4"; });
  t.note("ratio " + num(ratio) + " at N=1e5, delta=0.01");
  return t.result("stability.instability_" + to_string(spec) + "_" + std::string(to_string(family)));
}

InvariantResult stability_componentwise(Xoshiro256& rng) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const auto n = random_n(rng, 2, 500);
    const auto a = perturbation_family(PerturbationFamily::RandomSmooth, n, rng.uniform(1e-4, 0.5), rng());
    const auto b = perturbation_family(PerturbationFamily::RandomSmooth, n, rng.uniform(1e-4, 0.5), rng());
    ComponentMatrix<double> base(n, 2), moved(n, 2);
    base << a.base.probabilities(), b.base.probabilities();
    moved << a.perturbed.probabilities(), b.perturbed.probabilities();
    const auto A = validate<double>(base);
    const auto B = validate<double>(moved);
    const double ln_n = std::log(static_cast<double>(n));

    const auto s = stability_ratio_hyp({Measure::StrongShannonHyp, std::nullopt}, A, B);
    const double s1 = std::abs(shannon(a.base) - shannon(a.perturbed)) / ln_n;
    const double s2 = std::abs(shannon(b.base) - shannon(b.perturbed)) / ln_n;
    t.expect(approx_eq(s, HyperbolicNumber{s1, s2}), [&] { return "S_f ratio " + hnum(s); });

    const auto alpha = random_order(rng);
    const auto r = stability_ratio_hyp({Measure::RenyiHyp, alpha}, A, B);
    const double r1 = std::abs(renyi(a.base, alpha.x1) - renyi(a.perturbed, alpha.x1)) / ln_n;
    const double r2 = std::abs(renyi(b.base, alpha.x2) - renyi(b.perturbed, alpha.x2)) / ln_n;
    t.expect(approx_eq(r, HyperbolicNumber{r1, r2}), [&] { return "renyi_hyp ratio " + hnum(r); });
  }
  return t.result("stability.componentwise_ratios");
}

// ---------------------------------------------------------------------------
// cli

SweepConfig mixed_sweep(std::uint64_t seed) {
  return SweepConfig{{PerturbationFamily::RandomSmooth, PerturbationFamily::CertaintySpread},
                     {1, 10, 1000},
                     {1e-3, 0.2, 1.5},
                     {MeasureSpec{Measure::Shannon, std::nullopt},
                      MeasureSpec{Measure::RenyiHyp, HyperbolicNumber{0.5, 2.0}},
                      MeasureSpec{Measure::Renyi, embed_real(1.0)}},
                     seed};
}

InvariantResult cli_determinism(std::uint64_t seed) {
  Tally t;
  const auto first = io::write_stability_csv(stability_sweep(mixed_sweep(seed)));
  const auto second = io::write_stability_csv(stability_sweep(mixed_sweep(seed)));
  t.expect(first == second, [] { return std::string("sweep CSV differs between identical runs"); });
  return t.result("cli.determinism");
}

InvariantResult cli_csv_roundtrip(std::uint64_t seed) {
  Tally t;
  const auto records = stability_sweep(mixed_sweep(seed));
  const auto back = io::read_stability_csv(io::write_stability_csv(records));
  t.expect(back.size() == records.size(), [] { return std::string("row count changed"); });
  for (std::size_t i = 0; i < std::min(back.size(), records.size()); ++i) {
    t.expect(back[i] == records[i], [&] { return "row " + std::to_string(i) + " changed"; });
  }
  return t.result("cli.csv_roundtrip");
}

}  // namespace

std::vector<InvariantResult> run_invariants(const VerifyOptions& options) {
  const Tolerances& tol = options.tol;
  std::uint64_t stream = 0;
  auto rng = [&]() { return Xoshiro256(derive_seed(options.seed, ++stream)); };
  auto seed = [&]() { return derive_seed(options.seed, ++stream); };

  using Step = std::function<InvariantResult()>;
  std::vector<Step> steps{
      [&] { auto g = rng(); return core_ring_laws(g); },
      [&] { return core_idempotents(); },
      [&] { auto g = rng(); return core_partial_order(g); },
      [&] { auto g = rng(); return core_triangle(g); },
      [&] { auto g = rng(); return core_componentwise(g); },
      [&] { auto g = rng(); return calculus_analytic_vs_fd(g); },
      [&] { auto g = rng(); return calculus_linearity(g); },
      [&] { return calculus_lhopital(tol); },
      [&] { auto g = rng(); return calculus_cauchy_riemann(g, tol); },
      [&] { auto g = rng(); return calculus_sf_concave_on_segments(g, tol); },
      [&] { return probability_roundtrip(options); },
      [&] { auto g = rng(); return probability_embed(g); },
      [&] { auto g = rng(); return probability_mix(g); },
      [&] { auto g = rng(); return probability_perturbation_norm(g); },
      [&] { auto g = rng(); return entropy_factorization(g); },
      [&] { auto g = rng(); return entropy_maxima(g); },
      [&] { auto g = rng(); return entropy_renyi_nonnegative(g); },
      [&] { auto g = rng(); return entropy_renyi_monotone(g, tol); },
      [&] { auto g = rng(); return entropy_renyi_concave(g, tol); },
      [&] { auto g = rng(); return entropy_extropy_two_states(g); },
      [&] { auto g = rng(); return entropy_extropy_dominance(g); },
      [&] { auto g = rng(); return entropy_duality(g); },
      [&] { auto g = rng(); return entropy_generating_rewrite(g); },
      [&] { auto g = rng(); return entropy_limit(g, tol); },
      [&] { auto g = rng(); return stability_norm_metric(g); },
      [&] { return stability_signature(Measure::Shannon, seed()); },
      [&] { return stability_signature(Measure::StrongShannonHyp, seed()); },
      [&] {
        return stability_instability({Measure::Renyi, embed_real(0.5)}, PerturbationFamily::CertaintySpread, seed());
      },
      [&] {
        return stability_instability({Measure::Renyi, embed_real(2.0)}, PerturbationFamily::UniformSpike, seed());
      },
      [&] {
        return stability_instability({Measure::RenyiHyp, embed_real(0.5)}, PerturbationFamily::CertaintySpread,
                                     seed());
      },
      [&] {
        return stability_instability({Measure::RenyiHyp, embed_real(2.0)}, PerturbationFamily::UniformSpike, seed());
      },
      [&] { auto g = rng(); return stability_componentwise(g); },
      [&] { return cli_determinism(seed()); },
      [&] { return cli_csv_roundtrip(seed()); },
  };

  std::vector<InvariantResult> out;
  out.reserve(steps.size());
  for (const auto& step : steps) {
    const std::uint64_t before = stream;
    try {
      out.push_back(step());
    } catch (const std::exception& e) {
      out.push_back({"step " + std::to_string(before + 1), false, std::string("threw ") + e.what()});
    }
  }
  return out;
}

std::string format_report(const std::vector<InvariantResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += (r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    passed += r.passed ? 1 : 0;
  }
  out += "summary: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " invariants passed\n";
  return out;
}

}  // namespace hypent
