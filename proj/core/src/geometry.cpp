#include "modelcomb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modelcomb {

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double sup_norm(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double euclid_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Box::Box(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo_closed.assign(lo.size(), true);
  hi_closed.assign(hi.size(), true);
}

Box::Box(Vec lo_, Vec hi_, std::vector<bool> lo_c, std::vector<bool> hi_c)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(std::move(lo_c)),
      hi_closed(std::move(hi_c)) {}

Box Box::centered(double radius, int dim) {
  return Box(Vec(dim, -radius), Vec(dim, radius));
}

double Box::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= std::max(0.0, hi[i] - lo[i]);
  return v;
}

bool Box::valid() const {
  if (lo.size() != hi.size() || lo.size() != lo_closed.size() || lo.size() != hi_closed.size())
    return false;
  for (int i = 0; i < dim(); ++i)
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || hi[i] < lo[i]) return false;
  return true;
}

bool Box::degenerate() const {
  for (int i = 0; i < dim(); ++i)
    if (hi[i] < lo[i]) return true;
  return false;
}

bool Box::contains(const Vec& x, double eta) const {
  for (int i = 0; i < dim(); ++i)
    if (x[i] < lo[i] - eta || x[i] > hi[i] + eta) return false;
  return true;
}

bool Box::contains_flagged(const Vec& x) const {
  for (int i = 0; i < dim(); ++i) {
    if (lo_closed[i] ? x[i] < lo[i] : x[i] <= lo[i]) return false;
    if (hi_closed[i] ? x[i] > hi[i] : x[i] >= hi[i]) return false;
  }
  return true;
}

bool Box::contains_deflated(const Vec& x, double eta) const {
  for (int i = 0; i < dim(); ++i)
    if (x[i] < lo[i] + eta || x[i] > hi[i] - eta) return false;
  return true;
}

Box Box::inflated(double eta) const {
  Box b = *this;
  for (int i = 0; i < dim(); ++i) {
    b.lo[i] -= eta;
    b.hi[i] += eta;
    b.lo_closed[i] = true;
    b.hi_closed[i] = true;
  }
  return b;
}

Box intersect_closed(const Box& a, const Box& b) {
  Vec lo(a.dim()), hi(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    lo[i] = std::max(a.lo[i], b.lo[i]);
    hi[i] = std::min(a.hi[i], b.hi[i]);
  }
  return Box(std::move(lo), std::move(hi));
}

}  // namespace modelcomb
