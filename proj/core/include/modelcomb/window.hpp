#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modelcomb/geometry.hpp"

namespace modelcomb {

enum class Membership { outside, member, member_boundary };

/// Finite union of axis-aligned boxes in internal space, normalized so the
/// boxes are pairwise disjoint. eta is the boundary tolerance: points
/// within eta of the union count as members but are flagged ambiguous.
struct WindowUnion {
  std::vector<Box> boxes;
  double eta = 1e-9;

  WindowUnion() = default;
  static WindowUnion from_boxes(std::vector<Box> boxes, double eta = 1e-9);
  static WindowUnion interval(double lo, double hi, double eta = 1e-9);

  int dim() const { return boxes.empty() ? 0 : boxes.front().dim(); }
  bool empty() const { return boxes.empty(); }
  Box bounding_box() const;

  Membership classify(const Vec& u) const;            // uses stored eta
  Membership classify(const Vec& u, double eta) const;
  bool contains(const Vec& u) const { return classify(u) != Membership::outside; }
  bool contains(const Vec& u, double eta) const {
    return classify(u, eta) != Membership::outside;
  }
};

/// Lebesgue volume (endpoint flags ignored).
double volume(const WindowUnion& W);

/// vol(W ∩ (W + t)), exact from pairwise box intersections.
double covariogram(const WindowUnion& W, const Vec& t);

/// Upper bound on the Lipschitz constant of t -> covariogram(W, t)
/// (sup norm in t). Exact (=1 per axis) for a single box.
double covariogram_lipschitz(const WindowUnion& W);

/// Closure of W - W as a closed box union.
WindowUnion difference_window(const WindowUnion& W);

/// sup over w in closure(W) of |exp(2 pi i y.w) - 1| = 2 sup |sin(pi y.w)|,
/// computed exactly per box from the range of y.w.
double char_deviation(const Vec& y, const WindowUnion& W);

/// Membership in N(closure(W), eps): char_deviation(y, W) < eps.
bool eps_dual_member(const Vec& y, const WindowUnion& W, double eps);

/// Function-backed window (never materialized as boxes).
struct PredicateWindow {
  std::function<bool(const Vec&)> member;
  std::string descriptor;
};

PredicateWindow eps_dual_window(const WindowUnion& W, double eps);

}  // namespace modelcomb
