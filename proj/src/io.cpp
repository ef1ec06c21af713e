#include "hypent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypent::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> nonblank_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

double json_real(const json& v) {
  if (!v.is_number()) throw Error(Errc::ParseError, "expected a number, got " + v.dump());
  return v.get<double>();
}

LoadedDistribution parse_json_distribution(std::string_view text, double sum_tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }

  if (doc.is_array()) {
    Vec<double> p(static_cast<Eigen::Index>(doc.size()));
    for (std::size_t s = 0; s < doc.size(); ++s) p[static_cast<Eigen::Index>(s)] = json_real(doc[s]);
    return {embed(RealDistribution<double>(std::move(p), sum_tol), sum_tol), true};
  }
  if (!doc.is_object() || !doc.contains("rho") || !doc["rho"].is_array()) {
    throw Error(Errc::ParseError, "expected {\"case\": ..., \"rho\": [[x1, x2], ...]} or a list of reals");
  }
  const json& rho = doc["rho"];
  ComponentMatrix<double> comps(static_cast<Eigen::Index>(rho.size()), 2);
  for (std::size_t s = 0; s < rho.size(); ++s) {
    if (!rho[s].is_array() || rho[s].size() != 2) {
      throw Error(Errc::ParseError, "rho entry " + std::to_string(s) + " is not an [x1, x2] pair");
    }
    comps(static_cast<Eigen::Index>(s), 0) = json_real(rho[s][0]);
    comps(static_cast<Eigen::Index>(s), 1) = json_real(rho[s][1]);
  }
  auto dist = validate<double>(comps, sum_tol);
  if (doc.contains("case")) {
    if (!doc["case"].is_string()) throw Error(Errc::ParseError, "\"case\" must be a string");
    const auto declared = doc["case"].get<std::string>();
    if (declared != "full" && declared != "e1" && declared != "e2") {
      throw Error(Errc::ParseError, "unknown case '" + declared + "'");
    }
    if (declared != to_string(dist.dist_case())) {
      throw Error(Errc::CaseMismatch, "declared case '" + declared + "' but the sums give '" +
                                          std::string(to_string(dist.dist_case())) + "'");
    }
  }
  return {std::move(dist), false};
}

LoadedDistribution parse_csv_distribution(std::string_view text, double sum_tol) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty CSV");
  const auto header = split(lines[0], ',');
  const bool real = header.size() == 1 && header[0] == "p";
  const bool hyp = header.size() == 2 && header[0] == "p1" && header[1] == "p2";
  if (!real && !hyp) {
    throw Error(Errc::ParseError, "CSV header must be 'p' or 'p1,p2', got '" + std::string(lines[0]) + "'");
  }
  const auto rows = static_cast<Eigen::Index>(lines.size() - 1);
  ComponentMatrix<double> comps(rows, 2);
  for (Eigen::Index s = 0; s < rows; ++s) {
    const auto cells = split(lines[static_cast<std::size_t>(s) + 1], ',');
    if (cells.size() != header.size()) {
      throw Error(Errc::ParseError, "CSV line " + std::to_string(s + 2) + " has " +
                                        std::to_string(cells.size()) + " fields, expected " +
                                        std::to_string(header.size()));
    }
    comps(s, 0) = parse_real(cells[0]);
    comps(s, 1) = real ? comps(s, 0) : parse_real(cells[1]);
  }
  if (real) return {embed(RealDistribution<double>(comps.col(0), sum_tol), sum_tol), true};
  return {validate<double>(comps, sum_tol), false};
}

std::string cell(const HyperbolicNumber& xi, Basis basis) {
  const auto [a, b] = columns(xi, basis);
  return format_real(a) + "," + format_real(b);
}

std::string order_cells(const std::optional<HyperbolicNumber>& order, Basis basis) {
  return order ? cell(*order, basis) : std::string(",");
}

json pair_json(const HyperbolicNumber& xi, Basis basis) {
  const auto [a, b] = columns(xi, basis);
  return json::array({a, b});
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(Errc::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "read failed on '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::IoError, "write failed on '" + path.string() + "'");
}

LoadedDistribution parse_distribution(std::string_view text, double sum_tol) {
  const auto body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    return parse_json_distribution(body, sum_tol);
  }
  return parse_csv_distribution(body, sum_tol);
}

LoadedDistribution read_distribution(const std::filesystem::path& path, double sum_tol) {
  return parse_distribution(read_text_file(path), sum_tol);
}

std::string write_distribution(const HyperbolicDistribution<double>& dist, Format format) {
  if (format == Format::Json) {
    json rho = json::array();
    for (Eigen::Index s = 0; s < dist.size(); ++s) {
      rho.push_back(json::array({dist.components()(s, 0), dist.components()(s, 1)}));
    }
    return json{{"case", std::string(to_string(dist.dist_case()))}, {"rho", rho}}.dump() + "\n";
  }
  std::string out = "p1,p2\n";
  for (Eigen::Index s = 0; s < dist.size(); ++s) {
    out += format_real(dist.components()(s, 0)) + "," + format_real(dist.components()(s, 1)) + "\n";
  }
  return out;
}

std::pair<double, double> columns(const HyperbolicNumber& xi, Basis basis) {
  if (basis == Basis::UnitK) return {xi.real_part(), xi.k_part()};
  return {xi.x1, xi.x2};
}

std::pair<std::string, std::string> column_suffixes(Basis basis) {
  if (basis == Basis::UnitK) return {"_1", "_k"};
  return {"_e1", "_e2"};
}

std::string write_entropy(const std::vector<EntropyValue>& values, Format format, Basis basis) {
  const auto [s1, s2] = column_suffixes(basis);
  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& v : values) {
      json row{{"measure", std::string(to_string(v.measure))},
               {"order", v.order ? pair_json(*v.order, basis) : json(nullptr)},
               {"value", pair_json(v.value, basis)},
               {"N", v.n},
               {"basis", basis == Basis::UnitK ? "unit-k" : "idempotent"}};
      if (v.degenerate_n) row["degenerate_n"] = true;
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }
  std::string out = "measure,order" + s1 + ",order" + s2 + ",value" + s1 + ",value" + s2 + "\n";
  for (const auto& v : values) {
    out += std::string(to_string(v.measure)) + "," + order_cells(v.order, basis) + "," + cell(v.value, basis) + "\n";
  }
  return out;
}

std::string write_stability_csv(const std::vector<StabilityRecord>& records, Basis basis) {
  std::string out;
  if (basis == Basis::Idempotent) {
    out = std::string(kStabilityHeader) + "\n";
  } else {
    out = "family,measure,order_1,order_k,N,delta,norm_1,norm_k,ratio_1,ratio_k\n";
  }
  for (const auto& r : records) {
    out += std::string(to_string(r.family)) + "," + std::string(to_string(r.measure)) + "," +
           order_cells(r.order, basis) + "," + std::to_string(r.n) + "," + format_real(r.delta) + ",";
    if (r.error) {
      const std::string tag = "error:" + std::string(to_string(*r.error));
      out += tag + "," + tag + "," + tag + "," + tag;
    } else {
      out += cell(r.norm, basis) + "," + cell(r.ratio, basis);
    }
    out += "\n";
  }
  return out;
}

std::vector<StabilityRecord> read_stability_csv(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty() || lines[0] != kStabilityHeader) {
    throw Error(Errc::ParseError, "missing stability CSV header");
  }
  std::vector<StabilityRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto c = split(lines[i], ',');
    if (c.size() != 10) {
      throw Error(Errc::ParseError, "stability CSV line " + std::to_string(i + 1) + " has " +
                                        std::to_string(c.size()) + " fields");
    }
    StabilityRecord r{parse_family(c[0]), 0, parse_real(c[5]), parse_measure(c[1]), std::nullopt,
                      zero_d<double>(), zero_d<double>(), std::nullopt};
    if (!c[2].empty() || !c[3].empty()) r.order = HyperbolicNumber{parse_real(c[2]), parse_real(c[3])};
    r.n = static_cast<Eigen::Index>(parse_real(c[4]));
    if (c[6].substr(0, 6) == "error:") {
      r.error = parse_errc(c[6].substr(6));
      if (!r.error) throw Error(Errc::ParseError, "unknown error code '" + std::string(c[6]) + "'");
    } else {
      r.norm = {parse_real(c[6]), parse_real(c[7])};
      r.ratio = {parse_real(c[8]), parse_real(c[9])};
    }
    out.push_back(r);
  }
  return out;
}

std::string write_stability_json(const std::vector<StabilityRecord>& records, Basis basis) {
  json rows = json::array();
  for (const auto& r : records) {
    json row{{"family", std::string(to_string(r.family))},
             {"measure", std::string(to_string(r.measure))},
             {"order", r.order ? pair_json(*r.order, basis) : json(nullptr)},
             {"N", r.n},
             {"delta", r.delta}};
    if (r.error) {
      row["error"] = std::string(to_string(*r.error));
    } else {
      row["norm"] = pair_json(r.norm, basis);
      row["ratio"] = pair_json(r.ratio, basis);
    }
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

}  // namespace hypent::io
