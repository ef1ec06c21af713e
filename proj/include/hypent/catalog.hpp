#ifndef HYPENT_CATALOG_HPP
#define HYPENT_CATALOG_HPP

#include <string>
#include <vector>

#include "hypent/calculus.hpp"

namespace hypent {

/// A shipped function with an analytic derivative and a bounded box in which
/// random test points are drawn (strictly inside the function's domain).
struct CatalogEntry {
  std::string name;
  DifferentiableFunction<double> function;
  Interval<double> sample_box;
};

/// xi^2, xi^3, Log, Exp, xi^(2e1 + 0.5e2), xi^2 - 1, xi - 1, 1 - xi, and the
/// generating function and Rényi log-sum of a fixed positive distribution.
const std::vector<CatalogEntry>& shipped_functions();

}  // namespace hypent

#endif  // HYPENT_CATALOG_HPP
