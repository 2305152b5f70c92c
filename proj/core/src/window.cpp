#include "modelcomb/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "modelcomb/errors.hpp"

namespace modelcomb {

namespace {

// 1D: sort by lo and merge overlapping or touching intervals, keeping the
// outermost endpoint flags.
std::vector<Box> normalize_1d(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end(),
            [](const Box& a, const Box& b) { return a.lo[0] < b.lo[0]; });
  std::vector<Box> out;
  for (auto& b : boxes) {
    if (!out.empty() && b.lo[0] <= out.back().hi[0]) {
      Box& prev = out.back();
      if (b.hi[0] > prev.hi[0]) {
        prev.hi[0] = b.hi[0];
        prev.hi_closed[0] = b.hi_closed[0];
      } else if (b.hi[0] == prev.hi[0]) {
        prev.hi_closed[0] = prev.hi_closed[0] || b.hi_closed[0];
      }
      if (b.lo[0] == prev.lo[0]) prev.lo_closed[0] = prev.lo_closed[0] || b.lo_closed[0];
    } else {
      out.push_back(b);
    }
  }
  return out;
}

bool boxes_overlap(const Box& a, const Box& b) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return false;
  return true;
}

// 2D: if the boxes already have disjoint interiors keep them; otherwise
// rebuild an exact disjoint decomposition by x-slabs (flags become closed).
std::vector<Box> normalize_2d(std::vector<Box> boxes) {
  bool disjoint = true;
  for (size_t i = 0; i < boxes.size() && disjoint; ++i)
    for (size_t j = i + 1; j < boxes.size() && disjoint; ++j)
      disjoint = !boxes_overlap(boxes[i], boxes[j]);
  if (disjoint) {
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
      return a.lo[0] != b.lo[0] ? a.lo[0] < b.lo[0] : a.lo[1] < b.lo[1];
    });
    return boxes;
  }

  std::vector<double> xs;
  for (const auto& b : boxes) {
    xs.push_back(b.lo[0]);
    xs.push_back(b.hi[0]);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Box> out;
  for (size_t s = 0; s + 1 < xs.size(); ++s) {
    const double x0 = xs[s], x1 = xs[s + 1];
    if (x1 <= x0) continue;
    const double mid = 0.5 * (x0 + x1);
    std::vector<Box> ys;
    for (const auto& b : boxes)
      if (b.lo[0] <= mid && mid <= b.hi[0])
        ys.push_back(Box({b.lo[1]}, {b.hi[1]}));
    if (ys.empty()) continue;
    for (auto& iv : normalize_1d(std::move(ys)))
      out.push_back(Box({x0, iv.lo[0]}, {x1, iv.hi[0]}));
  }
  return out;
}

double sin_pi_abs(double t) { return std::fabs(std::sin(std::numbers::pi * t)); }

}  // namespace

WindowUnion WindowUnion::from_boxes(std::vector<Box> boxes, double eta) {
  for (const auto& b : boxes)
    if (!b.valid()) throw std::invalid_argument("window box is unbounded or inverted");
  if (!boxes.empty()) {
    const int dim = boxes.front().dim();
    if (dim < 1 || dim > 2) throw std::invalid_argument("window dimension must be 1 or 2");
    for (const auto& b : boxes)
      if (b.dim() != dim) throw std::invalid_argument("window boxes must share a dimension");
    boxes = dim == 1 ? normalize_1d(std::move(boxes)) : normalize_2d(std::move(boxes));
  }
  WindowUnion w;
  w.boxes = std::move(boxes);
  w.eta = eta;
  return w;
}

WindowUnion WindowUnion::interval(double lo, double hi, double eta) {
  return from_boxes({Box({lo}, {hi})}, eta);
}

Box WindowUnion::bounding_box() const {
  if (boxes.empty()) return Box(Vec{0.0}, Vec{-1.0});
  Box bb = boxes.front();
  for (const auto& b : boxes)
    for (int i = 0; i < b.dim(); ++i) {
      bb.lo[i] = std::min(bb.lo[i], b.lo[i]);
      bb.hi[i] = std::max(bb.hi[i], b.hi[i]);
    }
  return Box(bb.lo, bb.hi);
}

Membership WindowUnion::classify(const Vec& u) const { return classify(u, eta); }

Membership WindowUnion::classify(const Vec& u, double eta_) const {
  bool member = false;
  for (const auto& b : boxes) {
    if (eta_ > 0.0 ? b.contains(u, eta_) : b.contains_flagged(u)) {
      member = true;
      break;
    }
  }
  if (!member) return Membership::outside;
  if (eta_ <= 0.0) return Membership::member;
  for (const auto& b : boxes)
    if (b.contains_deflated(u, eta_)) return Membership::member;
  return Membership::member_boundary;
}

double volume(const WindowUnion& W) {
  double v = 0.0;
  for (const auto& b : W.boxes) v += b.volume();
  return v;
}

double covariogram(const WindowUnion& W, const Vec& t) {
  double v = 0.0;
  for (const auto& a : W.boxes) {
    for (const auto& b : W.boxes) {
      double piece = 1.0;
      for (int i = 0; i < a.dim() && piece > 0.0; ++i) {
        const double lo = std::max(a.lo[i], b.lo[i] + t[i]);
        const double hi = std::min(a.hi[i], b.hi[i] + t[i]);
        piece *= std::max(0.0, hi - lo);
      }
      v += piece;
    }
  }
  return v;
}

double covariogram_lipschitz(const WindowUnion& W) {
  // Per box pair, the overlap volume moves at most min cross-section per
  // unit sup-norm step; summing pairs gives a safe upper bound.
  double L = 0.0;
  const int dim = W.dim();
  for (const auto& a : W.boxes) {
    for (const auto& b : W.boxes) {
      double pair_slope = 0.0;
      for (int i = 0; i < dim; ++i) {
        double cross = 1.0;
        for (int j = 0; j < dim; ++j) {
          if (j == i) continue;
          cross *= std::min(a.width(j), b.width(j));
        }
        pair_slope += cross;
      }
      L += pair_slope;
    }
  }
  return L;
}

WindowUnion difference_window(const WindowUnion& W) {
  std::vector<Box> diffs;
  for (const auto& a : W.boxes) {
    for (const auto& b : W.boxes) {
      Vec lo(a.dim()), hi(a.dim());
      for (int i = 0; i < a.dim(); ++i) {
        lo[i] = a.lo[i] - b.hi[i];
        hi[i] = a.hi[i] - b.lo[i];
      }
      diffs.emplace_back(std::move(lo), std::move(hi));
    }
  }
  return WindowUnion::from_boxes(std::move(diffs), W.eta);
}

double char_deviation(const Vec& y, const WindowUnion& W) {
  double best = 0.0;
  for (const auto& b : W.boxes) {
    double a = 0.0, c = 0.0;  // closed range of y.w over the box
    for (int i = 0; i < b.dim(); ++i) {
      a += std::min(y[i] * b.lo[i], y[i] * b.hi[i]);
      c += std::max(y[i] * b.lo[i], y[i] * b.hi[i]);
    }
    if (c - a >= 1.0) return 2.0;
    double m = std::max(sin_pi_abs(a), sin_pi_abs(c));
    // At most one half-integer fits in a range shorter than 1.
    const double h = std::floor(a + 0.5) + 0.5;
    if (h >= a && h <= c) m = 1.0;
    best = std::max(best, 2.0 * m);
    if (best >= 2.0) return 2.0;
  }
  return best;
}

bool eps_dual_member(const Vec& y, const WindowUnion& W, double eps) {
  return char_deviation(y, W) < eps;
}

PredicateWindow eps_dual_window(const WindowUnion& W, double eps) {
  PredicateWindow p;
  p.member = [W, eps](const Vec& y) { return eps_dual_member(y, W, eps); };
  p.descriptor = "N(closure(W)," + std::to_string(eps) + ")";
  return p;
}

}  // namespace modelcomb
