#include "modelcomb/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "modelcomb/errors.hpp"

namespace modelcomb {

PointSetPatch model_set(const SchemeBasis& scheme, const WindowUnion& W, const Box& region,
                        std::uint64_t candidate_budget) {
  if (!region.valid()) throw std::invalid_argument("model_set: region must be a bounded box");
  PointSetPatch patch;
  patch.scheme = scheme;
  patch.window = W;
  patch.region = region;
  if (W.empty()) return patch;

  const Box internal_box = W.bounding_box().inflated(W.eta);
  auto candidates = enumerate_lattice(scheme, region, internal_box, candidate_budget);
  patch.points.reserve(candidates.size());
  for (auto& z : candidates) {
    switch (W.classify(star(scheme, z))) {
      case Membership::member:
        patch.points.push_back(std::move(z));
        break;
      case Membership::member_boundary:
        patch.points.push_back(std::move(z));
        ++patch.boundary_ambiguous_count;
        break;
      case Membership::outside:
        break;
    }
  }
  return patch;
}

namespace {

// Covering radius over a grid with a one-step interior margin; nearest
// neighbor via a sorted first coordinate sweep.
double covering_radius_of_points(const std::vector<Vec>& pts, const Box& region) {
  const int d = region.dim();
  const int steps = 1000;
  std::vector<Vec> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
  std::vector<double> xs(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) xs[i] = sorted[i][0];

  auto nearest = [&](const Vec& g) {
    double best = std::numeric_limits<double>::infinity();
    auto it = std::lower_bound(xs.begin(), xs.end(), g[0]);
    auto probe = [&](std::ptrdiff_t idx) {
      if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(sorted.size())) return;
      const Vec& p = sorted[idx];
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += (p[k] - g[k]) * (p[k] - g[k]);
      best = std::min(best, std::sqrt(s));
    };
    const std::ptrdiff_t at = it - xs.begin();
    for (std::ptrdiff_t r = at; r < static_cast<std::ptrdiff_t>(xs.size()); ++r) {
      if (xs[r] - g[0] > best) break;
      probe(r);
    }
    for (std::ptrdiff_t l = at - 1; l >= 0; --l) {
      if (g[0] - xs[l] > best) break;
      probe(l);
    }
    return best;
  };

  double cover = 0.0;
  if (d == 1) {
    const double step = region.width(0) / steps;
    for (int i = 1; i < steps; ++i) {
      Vec g{region.lo[0] + i * step};
      cover = std::max(cover, nearest(g));
    }
  } else {
    const double sx = region.width(0) / steps;
    const double sy = region.width(1) / steps;
    for (int i = 1; i < steps; ++i) {
      for (int j = 1; j < steps; ++j) {
        Vec g{region.lo[0] + i * sx, region.lo[1] + j * sy};
        cover = std::max(cover, nearest(g));
      }
    }
  }
  return cover;
}

}  // namespace

DeloneRadii delone_radii(const PointSetPatch& patch) {
  if (patch.size() < 2) throw TooFewPoints("delone_radii: need at least 2 points");
  for (int i = 0; i < patch.region.dim(); ++i)
    if (patch.region.width(i) <= 0.0)
      throw TooFewPoints("delone_radii: degenerate region");

  std::vector<Vec> phys(patch.size());
  for (size_t i = 0; i < patch.size(); ++i)
    phys[i] = physical_part(patch.scheme, patch.points[i]);

  // Packing: sweep over the first coordinate.
  std::vector<Vec> sorted = phys;
  std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
  const int d = patch.region.dim();
  double min_dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[j][0] - sorted[i][0] >= min_dist) break;
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += (sorted[j][k] - sorted[i][k]) * (sorted[j][k] - sorted[i][k]);
      min_dist = std::min(min_dist, std::sqrt(s));
    }
  }
  return DeloneRadii{0.5 * min_dist, covering_radius_of_points(phys, patch.region)};
}

double meyer_defect(const PointSetPatch& patch) {
  if (patch.size() < 2) throw TooFewPoints("meyer_defect: need at least 2 points");
  const int d = patch.region.dim();

  // Central half-region.
  Box half = patch.region;
  for (int i = 0; i < d; ++i) {
    const double c = 0.5 * (half.lo[i] + half.hi[i]);
    const double w = 0.25 * half.width(i);
    half.lo[i] = c - w;
    half.hi[i] = c + w;
  }

  std::vector<const IntVec*> central;
  for (const auto& z : patch.points)
    if (half.contains(physical_part(patch.scheme, z), 0.0)) central.push_back(&z);
  if (central.size() < 2) throw TooFewPoints("meyer_defect: central half-region has < 2 points");

  std::set<IntVec> diff_set;
  const int n = patch.scheme.n();
  for (size_t i = 0; i < central.size(); ++i)
    for (size_t j = 0; j < central.size(); ++j) {
      if (i == j) continue;
      IntVec dz(n);
      for (int k = 0; k < n; ++k) dz[k] = (*central[i])[k] - (*central[j])[k];
      diff_set.insert(std::move(dz));
    }

  std::vector<Vec> delta;
  delta.reserve(diff_set.size());
  for (const auto& z : diff_set) delta.push_back(physical_part(patch.scheme, z));
  std::sort(delta.begin(), delta.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });

  double min_gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < delta.size(); ++i) {
    for (size_t j = i + 1; j < delta.size(); ++j) {
      if (delta[j][0] - delta[i][0] >= min_gap) break;
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += (delta[j][k] - delta[i][k]) * (delta[j][k] - delta[i][k]);
      const double dist = std::sqrt(s);
      if (dist > 0.0) min_gap = std::min(min_gap, dist);
    }
  }
  return min_gap;
}

}  // namespace modelcomb
