#include "modelcomb/fixtures.hpp"

#include <cmath>

namespace modelcomb {

CoefficientMap two_grid_measure(double radius) {
  std::vector<std::pair<Vec, std::complex<double>>> entries;
  const double sqrt2 = std::sqrt(2.0);
  for (long n = static_cast<long>(std::floor(-radius)); n <= static_cast<long>(std::ceil(radius));
       ++n) {
    const double x = static_cast<double>(n);
    if (std::fabs(x) <= radius) entries.push_back({Vec{x}, 1.0});
  }
  const long kmax = static_cast<long>(std::ceil((radius + 1.0) / sqrt2));
  for (long k = -kmax; k <= kmax; ++k) {
    const double x = sqrt2 * static_cast<double>(k) + 0.5;
    if (std::fabs(x) <= radius) entries.push_back({Vec{x}, 1.0});
  }
  return CoefficientMap::from_entries(1, std::move(entries));
}

CoefficientMap perturbed_grid_measure(double radius) {
  std::vector<std::pair<Vec, std::complex<double>>> entries;
  const long nmax = static_cast<long>(std::ceil(radius)) + 2;
  for (long n = -nmax; n <= nmax; ++n) {
    const double x = static_cast<double>(n);
    if (std::fabs(x) <= radius) entries.push_back({Vec{x}, 1.0});
  }
  for (long n = -nmax; n <= nmax; ++n) {
    if (n == 0) continue;
    const double x = static_cast<double>(n) - 1.0 / static_cast<double>(n);
    if (std::fabs(x) <= radius) entries.push_back({Vec{x}, -1.0});
  }
  // from_entries merges the colliding atoms at 0 (1 - 1 - 1 = -1).
  return CoefficientMap::from_entries(1, std::move(entries));
}

}  // namespace modelcomb
