#ifndef HYPENT_IO_HPP
#define HYPENT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hypent/core.hpp"
#include "hypent/measures.hpp"
#include "hypent/probability.hpp"
#include "hypent/stability.hpp"

namespace hypent::io {

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

/// "%.17g"; round-trips every finite double.
std::string format_real(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct LoadedDistribution {
  HyperbolicDistribution<double> dist;
  bool real;  // parsed from a real distribution and embedded
};

/// Accepts
///   {"case": "full"|"e1"|"e2", "rho": [[x1, x2], ...]}   hyperbolic JSON
///   [p1, p2, ...]                                        real JSON
///   CSV with header "p1,p2" (hyperbolic) or "p" (real)
/// JSON versus CSV is decided by the first non-blank character.
LoadedDistribution parse_distribution(std::string_view text, double sum_tol = kSumTol);
LoadedDistribution read_distribution(const std::filesystem::path& path, double sum_tol = kSumTol);

std::string write_distribution(const HyperbolicDistribution<double>& dist, Format format);

/// The two display columns of a hyperbolic value in the chosen basis.
std::pair<double, double> columns(const HyperbolicNumber& xi, Basis basis);
std::pair<std::string, std::string> column_suffixes(Basis basis);

std::string write_entropy(const std::vector<EntropyValue>& values, Format format,
                          Basis basis = Basis::Idempotent);

inline constexpr std::string_view kStabilityHeader =
    "family,measure,order_e1,order_e2,N,delta,norm_e1,norm_e2,ratio_e1,ratio_e2";

/// Error rows carry "error:<Code>" in the norm and ratio columns.
std::string write_stability_csv(const std::vector<StabilityRecord>& records,
                                Basis basis = Basis::Idempotent);
std::vector<StabilityRecord> read_stability_csv(std::string_view text);
std::string write_stability_json(const std::vector<StabilityRecord>& records,
                                 Basis basis = Basis::Idempotent);

}  // namespace hypent::io

#endif  // HYPENT_IO_HPP
