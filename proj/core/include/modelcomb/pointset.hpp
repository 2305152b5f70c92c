#pragma once

#include <cstdint>
#include <vector>

#include "modelcomb/geometry.hpp"
#include "modelcomb/scheme.hpp"
#include "modelcomb/window.hpp"

namespace modelcomb {

/// Finite patch of a model set: lattice points with internal part in the
/// window and physical part in the region, exact integer coordinates in
/// lexicographic order.
struct PointSetPatch {
  SchemeBasis scheme;
  WindowUnion window;
  Box region;  // in R^d
  std::vector<IntVec> points;
  int boundary_ambiguous_count = 0;

  size_t size() const { return points.size(); }
};

PointSetPatch model_set(const SchemeBasis& scheme, const WindowUnion& W, const Box& region,
                        std::uint64_t candidate_budget = 100000000ull);

struct DeloneRadii {
  double packing;
  double covering;
};

/// packing = half the minimum pairwise physical distance; covering = max
/// over a region grid (10^3 per axis, one-step interior margin) of the
/// distance to the nearest patch point.
DeloneRadii delone_radii(const PointSetPatch& patch);

/// Minimum nonzero pairwise distance within the difference set of the
/// central half-region; positive values certify uniform discreteness of
/// the difference set at patch scale.
double meyer_defect(const PointSetPatch& patch);

}  // namespace modelcomb
