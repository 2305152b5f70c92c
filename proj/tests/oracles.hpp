#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and separate from the library implementations they
// check.

#include <complex>
#include <map>
#include <vector>

#include "modelcomb/comb.hpp"
#include "modelcomb/geometry.hpp"
#include "modelcomb/scheme.hpp"
#include "modelcomb/window.hpp"

namespace testutil {

// Exhaustive integer scan over |z_i| <= bound, filtering by the embedded
// coordinates (no bounding-box mapping involved).
inline std::vector<modelcomb::IntVec> brute_force_lattice(const modelcomb::SchemeBasis& basis,
                                                          const modelcomb::Box& physical_box,
                                                          const modelcomb::Box& internal_box,
                                                          std::int64_t bound) {
  using namespace modelcomb;
  std::vector<IntVec> out;
  const int n = basis.n();
  IntVec z(n, -bound);
  while (true) {
    const auto e = embed(basis, z);
    bool inside = true;
    for (int i = 0; i < basis.d && inside; ++i)
      inside = e.physical[i] >= physical_box.lo[i] && e.physical[i] <= physical_box.hi[i];
    for (int i = 0; i < basis.m && inside; ++i)
      inside = e.internal[i] >= internal_box.lo[i] && e.internal[i] <= internal_box.hi[i];
    if (inside) out.push_back(z);
    int axis = n - 1;
    while (axis >= 0 && z[axis] == bound) --axis;
    if (axis < 0) break;
    ++z[axis];
    for (int i = axis + 1; i < n; ++i) z[i] = -bound;
  }
  return out;
}

// Riemann-grid covariogram (1D), step h.
inline double grid_covariogram(const modelcomb::WindowUnion& W, double t, double h) {
  const auto bb = W.bounding_box();
  double acc = 0.0;
  for (double u = bb.lo[0] + h / 2; u <= bb.hi[0]; u += h) {
    if (W.contains({u}, 0.0) && W.contains({u + t}, 0.0)) acc += h;
  }
  return acc;
}

// Dense-sampling character deviation: sup over sampled w of |e^{2pi i y.w}-1|,
// including box corners.
inline double sampled_char_deviation(const modelcomb::Vec& y, const modelcomb::WindowUnion& W,
                                     int samples_per_box) {
  using namespace modelcomb;
  double best = 0.0;
  auto visit = [&](double t) {
    const double v = 2.0 * std::fabs(std::sin(3.14159265358979323846 * t));
    if (v > best) best = v;
  };
  for (const auto& b : W.boxes) {
    if (b.dim() == 1) {
      for (int i = 0; i <= samples_per_box; ++i) {
        const double w = b.lo[0] + (b.hi[0] - b.lo[0]) * i / samples_per_box;
        visit(y[0] * w);
      }
    } else {
      const int side = static_cast<int>(std::sqrt(static_cast<double>(samples_per_box)));
      for (int i = 0; i <= side; ++i)
        for (int j = 0; j <= side; ++j) {
          const double wx = b.lo[0] + (b.hi[0] - b.lo[0]) * i / side;
          const double wy = b.lo[1] + (b.hi[1] - b.lo[1]) * j / side;
          visit(y[0] * wx + y[1] * wy);
        }
    }
  }
  return best;
}

// Naive finite-volume autocorrelation: double loop over points inside A_R,
// std::map keyed by integer difference. Matches the library's summation
// order (outer index major) so agreement is exact.
inline std::map<modelcomb::IntVec, std::complex<double>> naive_autocorrelation(
    const modelcomb::WeightedComb& c, double R) {
  using namespace modelcomb;
  std::map<IntVec, std::complex<double>> acc;
  const auto& patch = *c.patch;
  const int n = patch.scheme.n();
  std::vector<size_t> inside;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c.weights[i] == std::complex<double>(0.0, 0.0)) continue;
    const Vec x = physical_part(patch.scheme, patch.points[i]);
    bool in = true;
    for (double v : x) in = in && std::fabs(v) <= R;
    if (in) inside.push_back(i);
  }
  for (size_t a : inside)
    for (size_t b : inside) {
      IntVec key(n);
      for (int k = 0; k < n; ++k) key[k] = patch.points[a][k] - patch.points[b][k];
      acc[key] += c.weights[a] * std::conj(c.weights[b]);
    }
  const double vol = std::pow(2.0 * R, patch.scheme.d);
  for (auto& [k, v] : acc) v /= vol;
  return acc;
}

}  // namespace testutil
