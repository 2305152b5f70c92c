#pragma once

#include <cstdint>
#include <vector>

namespace modelcomb {

// Small dense vectors: dimensions here are d, m or d+m with d,m in {1,2}.
using Vec = std::vector<double>;
using IntVec = std::vector<std::int64_t>;

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const Vec& a, const Vec& b);

double sup_norm(const Vec& v);
double euclid_norm(const Vec& v);
double dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);

/// Axis-aligned box with per-coordinate closed/open endpoint flags.
/// Flags matter only for exact (eta = 0) membership; Lebesgue volume
/// ignores them.
struct Box {
  Vec lo, hi;
  std::vector<bool> lo_closed, hi_closed;

  Box() = default;
  Box(Vec lo_, Vec hi_);  // all endpoints closed
  Box(Vec lo_, Vec hi_, std::vector<bool> lo_c, std::vector<bool> hi_c);

  static Box centered(double radius, int dim);

  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const;
  bool valid() const;
  bool degenerate() const;  // some axis has hi < lo
  double width(int axis) const { return hi[axis] - lo[axis]; }

  // Membership in the eta-inflated closed box; flags ignored.
  bool contains(const Vec& x, double eta = 0.0) const;
  // Membership honoring the endpoint flags exactly.
  bool contains_flagged(const Vec& x) const;
  // Membership in the eta-deflated closed box (classifies points that are
  // solidly interior vs within eta of a face).
  bool contains_deflated(const Vec& x, double eta) const;

  Box inflated(double eta) const;
};

// Closed intersection; result may be degenerate.
Box intersect_closed(const Box& a, const Box& b);

}  // namespace modelcomb
