#include "hypent/measures.hpp"

#include <string>

#include "hypent/entropy.hpp"

namespace hypent {

namespace {

struct MeasureInfo {
  Measure measure;
  std::string_view name;
  bool real;
  bool ordered;
};

constexpr MeasureInfo kMeasures[] = {
    {Measure::Shannon, "shannon", true, false},
    {Measure::Extropy, "extropy", true, false},
    {Measure::Renyi, "renyi", true, true},
    {Measure::Hartley, "hartley", true, false},
    {Measure::Collision, "collision", true, false},
    {Measure::RenyiExtropy, "renyi_extropy", true, true},
    {Measure::ShannonViaGenerating, "shannon_via_generating", true, false},
    {Measure::StrongShannonHyp, "strong_shannon_hyp", false, false},
    {Measure::StrongShannonViaGenerating, "strong_shannon_via_generating", false, false},
    {Measure::RenyiHyp, "renyi_hyp", false, true},
    {Measure::RenyiHypMixed, "renyi_hyp_mixed", false, true},
    {Measure::RenyiHypLimit, "renyi_hyp_limit", false, false},
    {Measure::HartleyHyp, "hartley_hyp", false, false},
    {Measure::CollisionHyp, "collision_hyp", false, false},
    {Measure::StrongExtropyHyp, "strong_extropy_hyp", false, false},
    {Measure::RenyiExtropyHyp, "renyi_extropy_hyp", false, true},
};

const MeasureInfo& info(Measure m) {
  for (const auto& entry : kMeasures) {
    if (entry.measure == m) return entry;
  }
  return kMeasures[0];
}

RealDistribution<double> shared_projection(const HyperbolicDistribution<double>& dist,
                                           Measure m) {
  if (dist.dist_case() != DistributionCase::Full || dist.projection(0) != dist.projection(1)) {
    throw Error(Errc::CaseMismatch, std::string(to_string(m)) +
                                        " is a real measure; the input has distinct projections");
  }
  return dist.projection_distribution(0);
}

double real_order(const std::optional<HyperbolicNumber>& order, Measure m) {
  if (order->x1 != order->x2) {
    throw Error(Errc::CaseMismatch,
                std::string(to_string(m)) + " takes a real order (a1 == a2), got " + to_string(*order));
  }
  return order->x1;
}

}  // namespace

std::string_view to_string(Measure m) { return info(m).name; }

Measure parse_measure(std::string_view name) {
  for (const auto& entry : kMeasures) {
    if (entry.name == name) return entry.measure;
  }
  throw Error(Errc::ParseError, "unknown measure '" + std::string(name) + "'");
}

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> list = [] {
    std::vector<Measure> out;
    for (const auto& entry : kMeasures) out.push_back(entry.measure);
    return out;
  }();
  return list;
}

bool is_real_measure(Measure m) { return info(m).real; }
bool needs_order(Measure m) { return info(m).ordered; }

EntropyValue evaluate(Measure m, const HyperbolicDistribution<double>& dist,
                      std::optional<HyperbolicNumber> order) {
  if (needs_order(m) && !order) {
    throw Error(Errc::DomainError, std::string(to_string(m)) + " needs an order");
  }
  if (!needs_order(m)) order.reset();

  EntropyValue out{zero_d<double>(), m, order, dist.size(), false};
  if (is_real_measure(m)) {
    const RealDistribution<double> P = shared_projection(dist, m);
    double v = 0;
    switch (m) {
      case Measure::Shannon: v = shannon(P); break;
      case Measure::Extropy: v = extropy(P); break;
      case Measure::Renyi: v = renyi(P, real_order(order, m)); break;
      case Measure::Hartley: v = hartley(P); break;
      case Measure::Collision: v = collision(P); break;
      case Measure::RenyiExtropy:
        out.degenerate_n = P.size() == 1;
        v = renyi_extropy(P, real_order(order, m));
        break;
      case Measure::ShannonViaGenerating: v = shannon_via_generating(P); break;
      default: break;
    }
    out.value = embed_real(v);
    return out;
  }

  switch (m) {
    case Measure::StrongShannonHyp: out.value = strong_shannon_hyp(dist); break;
    case Measure::StrongShannonViaGenerating: out.value = strong_shannon_via_generating(dist); break;
    case Measure::RenyiHyp: out.value = renyi_hyp(dist, *order); break;
    case Measure::RenyiHypMixed: out.value = renyi_hyp_mixed(dist, *order); break;
    case Measure::RenyiHypLimit: out.value = renyi_hyp_limit(dist); break;
    case Measure::HartleyHyp: out.value = hartley_hyp(dist); break;
    case Measure::CollisionHyp: out.value = collision_hyp(dist); break;
    case Measure::StrongExtropyHyp: out.value = strong_extropy_hyp(dist); break;
    case Measure::RenyiExtropyHyp: {
      const auto r = renyi_extropy_hyp(dist, *order);
      out.value = r.value;
      out.degenerate_n = r.degenerate_n;
      break;
    }
    default: break;
  }
  return out;
}

}  // namespace hypent
