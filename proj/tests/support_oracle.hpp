#ifndef HYPENT_TESTS_SUPPORT_ORACLE_HPP
#define HYPENT_TESTS_SUPPORT_ORACLE_HPP

// Test-only real oracles written as plain loops over std::vector, so they share
// no code with the library's Eigen expressions.

#include <cmath>
#include <vector>

namespace oracle {

inline double shannon(const std::vector<double>& p) {
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * std::log(x);
  }
  return h;
}

inline double extropy(const std::vector<double>& p) {
  double j = 0;
  for (double x : p) {
    const double c = 1 - x;
    if (c > 0) j -= c * std::log(c);
  }
  return j;
}

inline double hartley(const std::vector<double>& p) {
  double count = 0;
  for (double x : p) {
    if (x > 0) ++count;
  }
  return std::log(count);
}

inline double renyi(const std::vector<double>& p, double q) {
  double s = 0;
  for (double x : p) {
    if (x > 0) s += std::pow(x, q);
  }
  return std::log(s) / (1 - q);
}

inline double renyi_extropy(const std::vector<double>& p, double q) {
  const double m = static_cast<double>(p.size()) - 1;
  double s = 0;
  for (double x : p) s += std::pow(1 - x, q);
  return (-m * std::log(m) + m * std::log(s)) / (1 - q);
}

}  // namespace oracle

#endif  // HYPENT_TESTS_SUPPORT_ORACLE_HPP
