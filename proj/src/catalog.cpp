#include "hypent/catalog.hpp"

#include <cmath>
#include <limits>

#include "hypent/entropy.hpp"

namespace hypent {

namespace {

using F = ComponentFunction<double>;

CatalogEntry same_both(std::string name, RealFunction<double> f, RealFunction<double> df,
                       Interval<double> domain, Interval<double> box) {
  return {std::move(name), {lift(f, domain), lift(df, domain)}, std::move(box)};
}

const HyperbolicDistribution<double>& reference_distribution() {
  static const auto B = validate<double>({{0.5, 0.25}, {0.3, 0.6}, {0.2, 0.15}});
  return B;
}

}  // namespace

const std::vector<CatalogEntry>& shipped_functions() {
  static const std::vector<CatalogEntry> entries = [] {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto whole = Interval<double>::whole();
    const auto positive = Interval<double>::open(zero_d<double>(), {inf, inf});
    const auto box = Interval<double>::closed({-2.0, -2.0}, {2.0, 2.0});
    const auto positive_box = Interval<double>::closed({0.1, 0.1}, {3.0, 3.0});

    std::vector<CatalogEntry> out;
    out.push_back(same_both("square", [](double x) { return x * x; }, [](double x) { return 2 * x; },
                            whole, box));
    out.push_back(same_both("cube", [](double x) { return x * x * x; },
                            [](double x) { return 3 * x * x; }, whole, box));
    out.push_back(same_both("log", [](double x) { return std::log(x); }, [](double x) { return 1 / x; },
                            positive, positive_box));
    out.push_back(same_both("exp", [](double x) { return std::exp(x); },
                            [](double x) { return std::exp(x); }, whole, box));
    out.push_back({"power_2e1_0.5e2",
                   {F{[](double x) { return x * x; }, [](double x) { return std::sqrt(x); }, positive},
                    F{[](double x) { return 2 * x; }, [](double x) { return 0.5 / std::sqrt(x); }, positive}},
                   positive_box});
    out.push_back(same_both("square_minus_one", [](double x) { return x * x - 1; },
                            [](double x) { return 2 * x; }, whole, box));
    out.push_back(same_both("minus_one", [](double x) { return x - 1; }, [](double) { return 1.0; },
                            whole, box));
    out.push_back(same_both("one_minus", [](double x) { return 1 - x; }, [](double) { return -1.0; },
                            whole, box));
    out.push_back({"generating_function", generating_function(reference_distribution()), box});
    out.push_back({"renyi_log_sum", renyi_log_sum(reference_distribution()), positive_box});
    return out;
  }();
  return entries;
}

}  // namespace hypent
