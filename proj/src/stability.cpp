#include "hypent/stability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "hypent/random.hpp"

namespace hypent {

HyperbolicNumber parse_order(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return embed_real(parse_real(text));
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

MeasureSpec parse_measure_spec(std::string_view text) {
  const auto colon = text.find(':');
  MeasureSpec spec{parse_measure(text.substr(0, colon)), std::nullopt};
  if (colon != std::string_view::npos) spec.order = parse_order(text.substr(colon + 1));
  if (needs_order(spec.measure) && !spec.order) {
    throw Error(Errc::ParseError, "measure '" + std::string(text) + "' needs an order, e.g. renyi:0.5");
  }
  if (!needs_order(spec.measure) && spec.order) {
    throw Error(Errc::ParseError, "measure '" + std::string(text) + "' takes no order");
  }
  return spec;
}

std::string to_string(const MeasureSpec& spec) {
  std::string out(to_string(spec.measure));
  if (spec.order) {
    char buf[64];
    if (spec.order->x1 == spec.order->x2) {
      std::snprintf(buf, sizeof(buf), ":%.17g", spec.order->x1);
    } else {
      std::snprintf(buf, sizeof(buf), ":%.17g,%.17g", spec.order->x1, spec.order->x2);
    }
    out += buf;
  }
  return out;
}

bool operator==(const StabilityRecord& a, const StabilityRecord& b) {
  return std::tie(a.family, a.n, a.delta, a.measure, a.order, a.norm, a.ratio, a.error) ==
         std::tie(b.family, b.n, b.delta, b.measure, b.order, b.norm, b.ratio, b.error);
}

HyperbolicNumber stability_ratio_hyp(const MeasureSpec& spec, const HyperbolicDistribution<double>& A,
                                     const HyperbolicDistribution<double>& B) {
  if (A.size() != B.size()) throw Error(Errc::LengthMismatch, "distributions differ in N");
  if (A.size() < 2) throw Error(Errc::DegenerateN, "stability ratio needs N >= 2");
  const auto a = evaluate(spec.measure, A, spec.order).value;
  const auto b = evaluate(spec.measure, B, spec.order).value;
  return modulus_k(a - b) / embed_real(std::log(static_cast<double>(A.size())));
}

StabilityRecord stability_ratio(const MeasureSpec& spec, const PerturbationPair& pair) {
  if (pair.n < 2) throw Error(Errc::DegenerateN, "stability ratio needs N >= 2");
  const auto A = embed(pair.base);
  const auto B = embed(pair.perturbed);
  return StabilityRecord{pair.family,
                         pair.n,
                         pair.delta,
                         spec.measure,
                         needs_order(spec.measure) ? spec.order : std::nullopt,
                         lesche_norm_hyp(A, B),
                         stability_ratio_hyp(spec, A, B),
                         std::nullopt};
}

std::uint64_t cell_seed(std::uint64_t seed, Eigen::Index n, double delta) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), std::bit_cast<std::uint64_t>(delta));
}

std::vector<StabilityRecord> stability_sweep(const SweepConfig& config) {
  if (config.families.empty()) throw Error(Errc::DomainError, "empty family list");
  if (config.n_grid.empty()) throw Error(Errc::DomainError, "empty N grid");
  if (config.delta_grid.empty()) throw Error(Errc::DomainError, "empty delta grid");
  if (config.measures.empty()) throw Error(Errc::DomainError, "empty measure list");

  struct Keyed {
    std::size_t measure_index;
    StabilityRecord record;
  };
  std::vector<Keyed> rows;
  auto error_row = [](PerturbationFamily f, Eigen::Index n, double d, const MeasureSpec& m, Errc code) {
    return StabilityRecord{f, n, d, m.measure, m.order, zero_d<double>(), zero_d<double>(), code};
  };

  for (auto family : config.families) {
    for (auto n : config.n_grid) {
      for (double delta : config.delta_grid) {
        std::optional<PerturbationPair> pair;
        std::optional<Errc> pair_error;
        try {
          pair = perturbation_family(family, n, delta, cell_seed(config.seed, n, delta));
        } catch (const Error& e) {
          pair_error = e.code();
        }
        for (std::size_t i = 0; i < config.measures.size(); ++i) {
          const auto& spec = config.measures[i];
          if (pair_error) {
            rows.push_back({i, error_row(family, n, delta, spec, *pair_error)});
            continue;
          }
          try {
            rows.push_back({i, stability_ratio(spec, *pair)});
          } catch (const Error& e) {
            rows.push_back({i, error_row(family, n, delta, spec, e.code())});
          }
        }
      }
    }
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Keyed& x, const Keyed& y) {
    return std::tie(x.record.family, x.measure_index, x.record.n, x.record.delta) <
           std::tie(y.record.family, y.measure_index, y.record.n, y.record.delta);
  });
  std::vector<StabilityRecord> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.record));
  return out;
}

}  // namespace hypent
