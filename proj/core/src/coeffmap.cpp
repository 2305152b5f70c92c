#include "modelcomb/coeffmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modelcomb/errors.hpp"

namespace modelcomb {

CoefficientMap CoefficientMap::from_entries(int d,
                                            std::vector<std::pair<Vec, std::complex<double>>> e) {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  // Merge atoms at identical positions.
  std::vector<std::pair<Vec, std::complex<double>>> merged;
  merged.reserve(e.size());
  for (auto& entry : e) {
    if (!merged.empty() && merged.back().first == entry.first)
      merged.back().second += entry.second;
    else
      merged.push_back(std::move(entry));
  }
  CoefficientMap map;
  map.d = d;
  map.entries = std::move(merged);
  return map;
}

std::complex<double> CoefficientMap::lookup(const Vec& pos, double match_tol) const {
  const Vec probe0 = [&] {
    Vec p = pos;
    p[0] -= match_tol;
    return p;
  }();
  auto it = std::lower_bound(entries.begin(), entries.end(), probe0,
                             [](const auto& a, const Vec& b) { return lex_less(a.first, b); });
  std::complex<double> best(0.0, 0.0);
  double best_dist = std::numeric_limits<double>::infinity();
  for (; it != entries.end() && it->first[0] <= pos[0] + match_tol; ++it) {
    double dist = 0.0;
    for (int k = 0; k < d; ++k) dist = std::max(dist, std::fabs(it->first[k] - pos[k]));
    if (dist <= match_tol && dist < best_dist) {
      best_dist = dist;
      best = it->second;
    }
  }
  return best;
}

double CoefficientMap::max_abs() const {
  double m = 0.0;
  for (const auto& [z, v] : entries) m = std::max(m, std::abs(v));
  return m;
}

VanHoveSequence::VanHoveSequence(int d_, std::vector<double> radii_)
    : d(d_), radii(std::move(radii_)) {
  if (radii.size() < 3) throw std::invalid_argument("van Hove sequence needs >= 3 radii");
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw std::invalid_argument("van Hove radii must be strictly increasing");
  if (radii.front() <= 0.0) throw std::invalid_argument("van Hove radii must be positive");
}

VanHoveSequence VanHoveSequence::geometric(double first, int count, double factor, int d) {
  std::vector<double> radii(count);
  double r = first;
  for (int i = 0; i < count; ++i) {
    radii[i] = r;
    r *= factor;
  }
  return VanHoveSequence(d, std::move(radii));
}

double VanHoveSequence::volume(size_t n) const { return std::pow(2.0 * radii[n], d); }

std::vector<double> null_mean(const CoefficientMap& coeffs, const VanHoveSequence& seq) {
  std::vector<double> out(seq.size(), 0.0);
  for (size_t n = 0; n < seq.size(); ++n) {
    const double R = seq.radii[n];
    double mass = 0.0;
    for (const auto& [z, v] : coeffs.entries)
      if (sup_norm(z) <= R) mass += std::abs(v);
    out[n] = mass / seq.volume(n);
  }
  return out;
}

double norm_ap_defect(const CoefficientMap& coeffs, const Vec& t, double patch_radius,
                      double match_tol) {
  const double margin = patch_radius - sup_norm(t);
  double defect = 0.0;
  for (const auto& [z, v] : coeffs.entries) {
    if (sup_norm(z) <= margin) {
      defect = std::max(defect, std::abs(v - coeffs.lookup(sub(z, t), match_tol)));
    }
    // Also probe z + t so one-sided mass (value vs missing atom) is seen
    // from both directions.
    const Vec zt = add(z, t);
    if (sup_norm(zt) <= margin) {
      defect = std::max(defect, std::abs(coeffs.lookup(zt, match_tol) - v));
    }
  }
  return defect;
}

UniquenessReport uniqueness_check(const CoefficientMap& mu, const CoefficientMap& candidate_S,
                                  const CoefficientMap& candidate_0, const VanHoveSequence& seq,
                                  const UniquenessOptions& opts) {
  // Precondition: candidate_S + candidate_0 = mu atom by atom.
  {
    double worst = 0.0;
    for (const auto& [z, v] : mu.entries)
      worst = std::max(worst, std::abs(candidate_S.lookup(z, opts.match_tol) +
                                       candidate_0.lookup(z, opts.match_tol) - v));
    for (const auto& [z, v] : candidate_S.entries)
      worst = std::max(worst,
                       std::abs(v + candidate_0.lookup(z, opts.match_tol) -
                                mu.lookup(z, opts.match_tol)));
    if (worst > 1e-12)
      throw SumMismatch("uniqueness_check: candidate_S + candidate_0 != mu (max error " +
                        std::to_string(worst) + ")");
  }
  if (opts.periods.size() < 3)
    throw std::invalid_argument("uniqueness_check: need >= 3 candidate almost-periods");

  UniquenessReport rep;
  rep.defect_tol = opts.defect_tol > 0.0 ? opts.defect_tol : 0.2 * mu.max_abs();

  rep.max_defect = 0.0;
  for (const auto& t : opts.periods)
    rep.max_defect = std::max(
        rep.max_defect, norm_ap_defect(candidate_S, t, opts.patch_radius, opts.match_tol));
  rep.defect_ok = rep.max_defect < rep.defect_tol;

  rep.null_means = null_mean(candidate_0, seq);
  if (opts.null_tol > 0.0) {
    rep.null_tol = opts.null_tol;
  } else {
    const auto mu_means = null_mean(mu, seq);
    rep.null_tol = 0.05 * mu_means.front();
  }
  bool decreasing = true;
  for (size_t i = 1; i + 1 < rep.null_means.size(); ++i)
    decreasing = decreasing && rep.null_means[i + 1] <= rep.null_means[i] * (1.0 + 1e-12);
  rep.null_ok = decreasing && rep.null_means.back() < rep.null_tol;

  rep.accepted = rep.defect_ok && rep.null_ok;
  return rep;
}

}  // namespace modelcomb
