#include "modelcomb/comb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "modelcomb/errors.hpp"
#include "modelcomb/prng.hpp"

namespace modelcomb {

namespace {

double ramp(double x, double outer_lo, double inner_lo, double inner_hi, double outer_hi) {
  if (x >= inner_lo && x <= inner_hi) return 1.0;
  if (x <= outer_lo || x >= outer_hi) return 0.0;
  if (x < inner_lo) return (x - outer_lo) / (inner_lo - outer_lo);
  return (outer_hi - x) / (outer_hi - inner_hi);
}

double max_abs_weight(const std::vector<Complex>& w) {
  double b = 0.0;
  for (const auto& v : w) b = std::max(b, std::abs(v));
  return b;
}

}  // namespace

InternalWeight InternalWeight::indicator() { return InternalWeight{}; }

InternalWeight InternalWeight::tent(Vec center, Vec halfwidth) {
  InternalWeight g;
  g.kind = Kind::tent;
  g.center = std::move(center);
  g.halfwidth = std::move(halfwidth);
  return g;
}

InternalWeight InternalWeight::phase(Vec theta) {
  InternalWeight g;
  g.kind = Kind::phase;
  g.theta = std::move(theta);
  return g;
}

InternalWeight InternalWeight::trapezoid(std::vector<Box> inner, std::vector<Box> outer) {
  if (inner.size() != outer.size())
    throw std::invalid_argument("trapezoid weight: inner/outer box counts differ");
  InternalWeight g;
  g.kind = Kind::trapezoid;
  g.inner = std::move(inner);
  g.outer = std::move(outer);
  return g;
}

Complex InternalWeight::eval(const Vec& u) const {
  switch (kind) {
    case Kind::indicator:
      return 1.0;
    case Kind::tent: {
      double v = 1.0;
      for (size_t i = 0; i < u.size(); ++i) {
        const double h = halfwidth.size() == 1 ? halfwidth[0] : halfwidth[i];
        v *= std::max(0.0, 1.0 - std::fabs(u[i] - center[i]) / h);
      }
      return v;
    }
    case Kind::phase: {
      const double ph = 2.0 * std::numbers::pi * dot(theta, u);
      return Complex(std::cos(ph), std::sin(ph));
    }
    case Kind::trapezoid: {
      double v = 0.0;
      for (size_t b = 0; b < inner.size(); ++b) {
        double piece = 1.0;
        for (size_t i = 0; i < u.size(); ++i)
          piece *= ramp(u[i], outer[b].lo[i], inner[b].lo[i], inner[b].hi[i], outer[b].hi[i]);
        v = std::max(v, piece);
      }
      return v;
    }
  }
  return 0.0;
}

std::string InternalWeight::descriptor() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::indicator:
      os << "indicator";
      break;
    case Kind::tent:
      os << "tent(c=";
      for (double c : center) os << c << ",";
      os << " h=";
      for (double h : halfwidth) os << h << ",";
      os << ")";
      break;
    case Kind::phase:
      os << "phase(theta=";
      for (double t : theta) os << t << ",";
      os << ")";
      break;
    case Kind::trapezoid:
      os << "trapezoid(" << inner.size() << " ramps)";
      break;
  }
  return os.str();
}

WeightedComb comb_unit(std::shared_ptr<const PointSetPatch> patch) {
  WeightedComb c;
  c.weights.assign(patch->size(), Complex(1.0, 0.0));
  c.patch = std::move(patch);
  c.weight_model = "unit";
  c.weight_bound = c.weights.empty() ? 0.0 : 1.0;
  return c;
}

WeightedComb comb_from_internal_weight(std::shared_ptr<const PointSetPatch> patch,
                                       const InternalWeight& g) {
  WeightedComb c;
  c.weights.reserve(patch->size());
  for (const auto& z : patch->points) c.weights.push_back(g.eval(star(patch->scheme, z)));
  c.weight_model = "internal_function(" + g.descriptor() + ")";
  c.weight_bound = max_abs_weight(c.weights);
  c.patch = std::move(patch);
  return c;
}

WeightedComb comb_bernoulli(std::shared_ptr<const PointSetPatch> patch, double p,
                            std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("comb_bernoulli: p must be in [0,1]");
  Xorshift64Star rng(seed);
  WeightedComb c;
  c.weights.reserve(patch->size());
  for (size_t i = 0; i < patch->size(); ++i)
    c.weights.push_back(rng.next_unit() < p ? Complex(1.0, 0.0) : Complex(0.0, 0.0));
  c.weight_model = "bernoulli(p=" + std::to_string(p) + ",seed=" + std::to_string(seed) + ")";
  c.weight_bound = max_abs_weight(c.weights);
  c.patch = std::move(patch);
  return c;
}

WeightedComb comb_custom(std::shared_ptr<const PointSetPatch> patch, std::vector<Complex> weights,
                         std::string model) {
  if (weights.size() != patch->size())
    throw std::invalid_argument("comb_custom: weight count does not match patch size");
  WeightedComb c;
  c.weights = std::move(weights);
  c.weight_model = std::move(model);
  c.weight_bound = max_abs_weight(c.weights);
  c.patch = std::move(patch);
  return c;
}

WeightedComb conjugate(const WeightedComb& c) {
  WeightedComb out = c;
  for (auto& w : out.weights) w = std::conj(w);
  out.weight_model = "conj(" + c.weight_model + ")";
  return out;
}

WeightedComb re_part(const WeightedComb& c) {
  WeightedComb out = c;
  for (auto& w : out.weights) w = Complex(w.real(), 0.0);
  out.weight_model = "re(" + c.weight_model + ")";
  out.weight_bound = max_abs_weight(out.weights);
  return out;
}

WeightedComb im_part(const WeightedComb& c) {
  WeightedComb out = c;
  for (auto& w : out.weights) w = Complex(w.imag(), 0.0);
  out.weight_model = "im(" + c.weight_model + ")";
  out.weight_bound = max_abs_weight(out.weights);
  return out;
}

double translation_bound(const WeightedComb& c, double K_halfwidth, double stride) {
  const Box& region = c.patch->region;
  const int d = region.dim();
  for (int i = 0; i < d; ++i)
    if (2.0 * K_halfwidth > region.width(i))
      throw std::invalid_argument("translation_bound: K box does not fit in the region");
  if (c.size() == 0) return 0.0;

  std::vector<Vec> phys(c.size());
  for (size_t i = 0; i < c.size(); ++i) phys[i] = physical_part(c.scheme(), c.patch->points[i]);

  double best = 0.0;
  if (d == 1) {
    std::vector<std::pair<double, double>> pts(c.size());
    for (size_t i = 0; i < c.size(); ++i) pts[i] = {phys[i][0], std::abs(c.weights[i])};
    std::sort(pts.begin(), pts.end());
    for (double t = region.lo[0] + K_halfwidth; t <= region.hi[0] - K_halfwidth + 1e-12;
         t += stride) {
      auto lo = std::lower_bound(pts.begin(), pts.end(),
                                 std::make_pair(t - K_halfwidth, -1.0));
      double s = 0.0;
      for (auto it = lo; it != pts.end() && it->first <= t + K_halfwidth; ++it) s += it->second;
      best = std::max(best, s);
    }
  } else {
    for (double tx = region.lo[0] + K_halfwidth; tx <= region.hi[0] - K_halfwidth + 1e-12;
         tx += stride) {
      for (double ty = region.lo[1] + K_halfwidth; ty <= region.hi[1] - K_halfwidth + 1e-12;
           ty += stride) {
        double s = 0.0;
        for (size_t i = 0; i < c.size(); ++i)
          if (std::fabs(phys[i][0] - tx) <= K_halfwidth &&
              std::fabs(phys[i][1] - ty) <= K_halfwidth)
            s += std::abs(c.weights[i]);
        best = std::max(best, s);
      }
    }
  }
  return best;
}

WeightedComb dominating_comb(const PointSetPatch& lambda_w, const WindowUnion& U,
                             std::uint64_t candidate_budget) {
  const WindowUnion& W = lambda_w.window;
  const double margin = 2.0 * std::max(W.eta, U.eta);

  // Every W box must sit strictly inside a single U box.
  std::vector<Box> inner, outer;
  for (const auto& wb : W.boxes) {
    const Box* host = nullptr;
    for (const auto& ub : U.boxes) {
      bool ok = true;
      for (int i = 0; i < wb.dim() && ok; ++i)
        ok = ub.lo[i] < wb.lo[i] - margin && wb.hi[i] + margin < ub.hi[i];
      if (ok) {
        host = &ub;
        break;
      }
    }
    if (!host)
      throw MarginError("dominating_comb: window is not strictly inside the dominating window");
    inner.push_back(wb);
    outer.push_back(*host);
  }

  auto patch_u = std::make_shared<PointSetPatch>(
      model_set(lambda_w.scheme, U, lambda_w.region, candidate_budget));
  WeightedComb nu =
      comb_from_internal_weight(std::move(patch_u), InternalWeight::trapezoid(inner, outer));

  // Domination witness: weight >= 1 at every point of the Lambda(W) patch
  // (exactly 1 for solid members; eta-ambiguous members sit on the ramp).
  size_t j = 0;
  for (const auto& z : lambda_w.points) {
    while (j < nu.patch->size() && lex_less(nu.patch->points[j], z)) ++j;
    if (j >= nu.patch->size() || nu.patch->points[j] != z)
      throw MarginError("dominating_comb: Lambda(W) point missing from Lambda(U) patch");
    const bool solid = W.classify(star(lambda_w.scheme, z)) == Membership::member;
    const double floor = solid ? 1.0 : 1.0 - 1e-6;
    if (nu.weights[j].real() < floor)
      throw MarginError("dominating_comb: domination fails at a patch point");
  }
  return nu;
}

}  // namespace modelcomb
