#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modelcomb/pointset.hpp"

namespace modelcomb {

using Complex = std::complex<double>;

/// Weight function on internal space, evaluated at star(p) to weight a comb.
/// tent(center, halfwidth) is the per-coordinate product tent; phase(theta)
/// is w -> exp(2 pi i theta.w); trapezoid ramps from 0 on the outer box
/// boundary to 1 on the inner box (one ramp pair per inner box).
struct InternalWeight {
  enum class Kind { indicator, tent, phase, trapezoid };
  Kind kind = Kind::indicator;
  Vec center, halfwidth;            // tent
  Vec theta;                        // phase
  std::vector<Box> inner, outer;    // trapezoid: inner[i] ramps inside outer[i]

  static InternalWeight indicator();
  static InternalWeight tent(Vec center, Vec halfwidth);
  static InternalWeight phase(Vec theta);
  static InternalWeight trapezoid(std::vector<Box> inner, std::vector<Box> outer);

  Complex eval(const Vec& u) const;
  bool is_real() const { return kind != Kind::phase; }
  std::string descriptor() const;
};

struct WeightedComb {
  std::shared_ptr<const PointSetPatch> patch;
  std::vector<Complex> weights;  // aligned with patch->points
  std::string weight_model;
  double weight_bound = 0.0;  // max |weight|

  size_t size() const { return weights.size(); }
  const SchemeBasis& scheme() const { return patch->scheme; }
};

WeightedComb comb_unit(std::shared_ptr<const PointSetPatch> patch);
WeightedComb comb_from_internal_weight(std::shared_ptr<const PointSetPatch> patch,
                                       const InternalWeight& g);
/// i.i.d. weights in {0,1} with P(1)=p from xorshift64*(seed), drawn in
/// lexicographic point order.
WeightedComb comb_bernoulli(std::shared_ptr<const PointSetPatch> patch, double p,
                            std::uint64_t seed);
WeightedComb comb_custom(std::shared_ptr<const PointSetPatch> patch,
                         std::vector<Complex> weights, std::string model = "custom");

WeightedComb conjugate(const WeightedComb& c);
WeightedComb re_part(const WeightedComb& c);
WeightedComb im_part(const WeightedComb& c);

/// Empirical translation bound: max over box translates t (stride grid over
/// the region, K box kept inside) of sum_{x in t+K} |w(x)|.
double translation_bound(const WeightedComb& c, double K_halfwidth, double stride);

/// Internal-function comb on Λ(U) over the same region whose trapezoid
/// profile is 1 on W and 0 outside U; checks pointwise domination of the
/// unit comb on the Λ(W) patch. Throws MarginError unless every W box sits
/// inside some U box with margin > 2 eta.
WeightedComb dominating_comb(const PointSetPatch& lambda_w, const WindowUnion& U,
                             std::uint64_t candidate_budget = 100000000ull);

}  // namespace modelcomb
