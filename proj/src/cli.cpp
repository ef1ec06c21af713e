#include "hypent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypent/entropy.hpp"
#include "hypent/io.hpp"
#include "hypent/measures.hpp"
#include "hypent/stability.hpp"
#include "hypent/verify.hpp"

namespace hypent::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string basis = "idempotent";
  std::vector<std::string> tol;
};

struct Options {
  Common common;
  std::vector<std::string> measures;
  std::string order;
  std::vector<std::string> families;
  std::string n_grid = "100,1000,10000,100000";
  std::string delta_grid = "0.01";
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> verify_inputs;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IoError: return kIoFailure;
    case Errc::NonConvergent: return kNonConvergence;
    default: return kValidationFailure;
  }
}

Basis parse_basis(const std::string& name) {
  if (name == "idempotent") return Basis::Idempotent;
  if (name == "unit-k") return Basis::UnitK;
  throw Error(Errc::ParseError, "unknown basis '" + name + "'");
}

Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  for (const auto& o : overrides) apply_tolerance(tol, o);
  return tol;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto item = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    if (!item.empty()) out.push_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Eigen::Index> parse_n_grid(const std::string& text) {
  std::vector<Eigen::Index> out;
  for (auto item : split_list(text)) {
    const double v = parse_real(item);
    if (!(v >= 1) || v != std::floor(v) || v > 1e9) {
      throw Error(Errc::ParseError, "N must be a positive integer, got '" + std::string(item) + "'");
    }
    out.push_back(static_cast<Eigen::Index>(v));
  }
  if (out.empty()) throw Error(Errc::DomainError, "empty N grid");
  return out;
}

std::vector<double> parse_delta_grid(const std::string& text) {
  std::vector<double> out;
  for (auto item : split_list(text)) out.push_back(parse_real(item));
  if (out.empty()) throw Error(Errc::DomainError, "empty delta grid");
  return out;
}

/// "renyi:0.5" carries its own order; a bare ordered name takes --order.
std::vector<MeasureSpec> parse_measures(const std::vector<std::string>& names, const std::string& order) {
  const std::optional<HyperbolicNumber> shared =
      order.empty() ? std::nullopt : std::optional<HyperbolicNumber>(parse_order(order));
  std::vector<MeasureSpec> out;
  for (const auto& name : names) {
    if (name.find(':') != std::string::npos) {
      out.push_back(parse_measure_spec(name));
      continue;
    }
    const Measure m = parse_measure(name);
    if (needs_order(m) && !shared) {
      throw Error(Errc::ParseError, "measure '" + name + "' needs an order (name:order or --order)");
    }
    out.push_back({m, needs_order(m) ? shared : std::nullopt});
  }
  return out;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
  } else {
    io::write_text_file(c.output, text);
  }
}

int cmd_entropy(const Options& o, std::ostream& out) {
  const auto format = io::parse_format(o.common.format);
  const auto basis = parse_basis(o.common.basis);
  const auto tol = parse_tolerances(o.common.tol);
  const auto loaded = io::read_distribution(o.common.input, tol.sum_tol);

  std::vector<std::string> names = o.measures;
  if (names.empty()) {
    if (loaded.real) {
      names = {"shannon", "extropy", "hartley", "collision"};
    } else {
      names = {"strong_shannon_hyp", "hartley_hyp", "collision_hyp", "strong_extropy_hyp"};
    }
  }
  std::vector<EntropyValue> values;
  for (const auto& spec : parse_measures(names, o.order)) {
    values.push_back(evaluate(spec.measure, loaded.dist, spec.order));
  }
  emit(o.common, io::write_entropy(values, format, basis), out);
  return kOk;
}

int cmd_stability(const Options& o, std::ostream& out) {
  const auto format = io::parse_format(o.common.format);
  const auto basis = parse_basis(o.common.basis);
  SweepConfig cfg;
  for (const auto& f : o.families) {
    for (auto item : split_list(f)) cfg.families.push_back(parse_family(item));
  }
  if (o.families.empty()) {
    cfg.families = {PerturbationFamily::CertaintySpread, PerturbationFamily::UniformSpike,
                    PerturbationFamily::RandomSmooth};
  }
  cfg.n_grid = parse_n_grid(o.n_grid);
  cfg.delta_grid = parse_delta_grid(o.delta_grid);
  cfg.measures = parse_measures(o.measures.empty() ? std::vector<std::string>{"shannon"} : o.measures, o.order);
  cfg.seed = o.seed;

  const auto records = stability_sweep(cfg);
  emit(o.common,
       format == io::Format::Csv ? io::write_stability_csv(records, basis)
                                 : io::write_stability_json(records, basis),
       out);
  return kOk;
}

int cmd_limits(const Options& o, std::ostream& out) {
  const auto format = io::parse_format(o.common.format);
  const auto basis = parse_basis(o.common.basis);
  const auto tol = parse_tolerances(o.common.tol);
  const auto loaded = io::read_distribution(o.common.input, tol.sum_tol);
  const auto& B = loaded.dist;

  // Preconditions first so that a zero component is a validation failure.
  const auto shannon_value = strong_shannon_hyp(B);
  detail::require_positive_components(B);

  struct Row {
    std::string label;
    std::optional<HyperbolicNumber> alpha;
    HyperbolicNumber value;
  };
  std::vector<Row> rows;
  for (int k = 1; k <= 6; ++k) {
    const auto alpha = embed_real(1.0 - std::pow(10.0, -k));
    rows.push_back({"sequence", alpha, renyi_hyp(B, alpha)});
  }
  const auto lim = renyi_hyp_limit_detail(B, LimitOptions{tol.limit_tol}, tol.lhopital_tol);
  const HyperbolicNumber diffs{
      std::max(std::abs(lim.direct.x1 - shannon_value.x1), std::abs(lim.lhopital.x1 - shannon_value.x1)),
      std::max(std::abs(lim.direct.x2 - shannon_value.x2), std::abs(lim.lhopital.x2 - shannon_value.x2))};
  rows.push_back({"direct_limit", one_d<double>(), lim.direct});
  rows.push_back({"lhopital", one_d<double>(), lim.lhopital});
  rows.push_back({"strong_shannon", std::nullopt, shannon_value});
  rows.push_back({"diffs", std::nullopt, diffs});
  const bool converged = diffs.x1 < tol.lhopital_tol && diffs.x2 < tol.lhopital_tol;

  std::string text;
  if (format == io::Format::Json) {
    auto pair = [basis](const HyperbolicNumber& xi) {
      const auto [a, b] = io::columns(xi, basis);
      return json::array({a, b});
    };
    json doc{{"rows", json::array()}, {"converged", converged}};
    for (const auto& r : rows) {
      doc["rows"].push_back({{"row", r.label},
                             {"alpha", r.alpha ? pair(*r.alpha) : json(nullptr)},
                             {"value", pair(r.value)}});
    }
    text = doc.dump(2) + "\n";
  } else {
    const auto [s1, s2] = io::column_suffixes(basis);
    text = "row,alpha" + s1 + ",alpha" + s2 + ",value" + s1 + ",value" + s2 + "\n";
    for (const auto& r : rows) {
      text += r.label + ",";
      if (r.alpha) {
        const auto [a, b] = io::columns(*r.alpha, basis);
        text += io::format_real(a) + "," + io::format_real(b);
      } else {
        text += ",";
      }
      const auto [v1, v2] = io::columns(r.value, basis);
      text += "," + io::format_real(v1) + "," + io::format_real(v2) + "\n";
    }
  }
  emit(o.common, text, out);
  return converged ? kOk : kNonConvergence;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto format = io::parse_format(o.common.format);
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.tol = parse_tolerances(o.common.tol);
  for (const auto& path : o.verify_inputs) vo.inputs.push_back({path, io::read_text_file(path)});

  const auto results = run_invariants(vo);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::string text;
  if (format == io::Format::Json) {
    json doc{{"seed", o.seed}, {"passed", all}, {"invariants", json::array()}};
    for (const auto& r : results) {
      doc["invariants"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    text = doc.dump(2) + "\n";
  } else {
    text = format_report(results);
  }
  emit(o.common, text, out);
  return all ? kOk : kInvariantFailure;
}

void add_common(CLI::App* sub, Common& c, bool with_input) {
  if (with_input) {
    sub->add_option("--input", c.input, "Distribution file: JSON {case, rho} or list, CSV p1,p2 or p")
        ->required();
  }
  sub->add_option("--output", c.output, "Write here instead of standard output");
  sub->add_option("--format", c.format, "csv or json")->capture_default_str();
  sub->add_option("--basis", c.basis, "Display basis: idempotent (e1, e2) or unit-k (1, k)")
      ->capture_default_str();
  sub->add_option("--tol", c.tol,
                  "Override a tolerance, name=value; names: sum_tol (1e-9), limit_tol (1e-8), "
                  "cr_tol (1e-6), lhopital_tol (1e-6), convexity_slack (1e-10)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hyperbolic (split-complex) entropies, extropies and Lesche-stability sweeps", "hypent"};
  app.require_subcommand(1);

  auto* entropy = app.add_subcommand("entropy", "Evaluate entropy measures on a distribution");
  add_common(entropy, o.common, true);
  entropy->add_option("--measure", o.measures,
                      "Measure name, optionally with order (renyi:0.5, renyi_hyp:0.5,2); repeatable. "
                      "Default: shannon, extropy, hartley, collision for real input and the hyperbolic "
                      "counterparts otherwise");
  entropy->add_option("--order", o.order, "Order for measures given without one: a or a1,a2");

  auto* stability = app.add_subcommand("stability", "Lesche-stability sweep, one CSV row per cell");
  add_common(stability, o.common, false);
  stability->add_option("--measure", o.measures, "Measure with optional order; repeatable (default shannon)");
  stability->add_option("--order", o.order, "Order for measures given without one: a or a1,a2");
  stability->add_option("--family", o.families,
                        "certainty_spread, uniform_spike, random_smooth; repeatable or comma-separated "
                        "(default all three)");
  stability->add_option("--N-grid", o.n_grid, "Comma-separated N values")->capture_default_str();
  stability->add_option("--delta-grid", o.delta_grid, "Comma-separated delta values in (0, 1)")
      ->capture_default_str();
  stability->add_option("--seed", o.seed, "Seed for random_smooth")->capture_default_str();

  auto* limits = app.add_subcommand("limits", "Rényi entropy as alpha -> 1_D against the Shannon value");
  add_common(limits, o.common, true);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite; exit 4 if any invariant fails");
  add_common(verify, o.common, false);
  verify->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  verify->add_option("--input", o.verify_inputs, "Extra distribution fixture for the round-trip check; repeatable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(o, out);
    if (stability->parsed()) return cmd_stability(o, out);
    if (limits->parsed()) return cmd_limits(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kValidationFailure;
}

}  // namespace hypent::cli
