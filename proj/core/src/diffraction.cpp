#include "modelcomb/diffraction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "modelcomb/errors.hpp"

namespace modelcomb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NeumaierSum {
  double s = 0.0, c = 0.0;
  void add(double v) {
    const double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// k.x mod 1 with compensated products and sums (fma-based TwoProd), so the
// certified character deviation 2|sin(pi r)| is accurate to ~1e-15 even for
// |k.x| ~ 1e6.
double frac_dot(const Vec& k, const Vec& x) {
  double hi_sum = 0.0, lo_sum = 0.0;
  for (size_t i = 0; i < k.size(); ++i) {
    const double p = k[i] * x[i];
    const double e = std::fma(k[i], x[i], -p);
    // Reduce the high part immediately to keep the running sum small.
    hi_sum += std::remainder(p, 1.0);
    lo_sum += e;
  }
  return std::remainder(hi_sum + lo_sum, 1.0);
}

std::vector<size_t> points_inside(const WeightedComb& c, double R, std::vector<Vec>& phys) {
  const int d = c.scheme().d;
  const Box& region = c.patch->region;
  for (int i = 0; i < d; ++i)
    if (region.lo[i] > -R || region.hi[i] < R)
      throw RegionTooSmall("fourier_bohr: [-R,R]^d is not inside the comb region");
  std::vector<size_t> idx;
  for (size_t i = 0; i < c.size(); ++i) {
    Vec x = physical_part(c.scheme(), c.patch->points[i]);
    bool inside = true;
    for (int kk = 0; kk < d; ++kk) inside = inside && std::fabs(x[kk]) <= R;
    if (!inside) continue;
    idx.push_back(i);
    phys.push_back(std::move(x));
  }
  return idx;
}

Complex bohr_sum(const WeightedComb& c, const std::vector<size_t>& idx,
                 const std::vector<Vec>& phys, const Vec& k, double vol) {
  NeumaierSum re, im;
  for (size_t a = 0; a < idx.size(); ++a) {
    const Complex w = c.weights[idx[a]];
    if (w == Complex(0.0, 0.0)) continue;
    const double ph = -kTwoPi * dot(k, phys[a]);
    const double cs = std::cos(ph), sn = std::sin(ph);
    re.add(w.real() * cs - w.imag() * sn);
    im.add(w.real() * sn + w.imag() * cs);
  }
  return Complex(re.value() / vol, im.value() / vol);
}

}  // namespace

Complex fourier_bohr(const WeightedComb& c, const Vec& k, double R) {
  std::vector<Vec> phys;
  const auto idx = points_inside(c, R, phys);
  return bohr_sum(c, idx, phys, k, std::pow(2.0 * R, c.scheme().d));
}

std::vector<Complex> fourier_bohr_sweep(const WeightedComb& c, const std::vector<Vec>& ks,
                                        double R, int threads) {
  std::vector<Vec> phys;
  const auto idx = points_inside(c, R, phys);
  const double vol = std::pow(2.0 * R, c.scheme().d);
  std::vector<Complex> out(ks.size());
  if (threads <= 1 || ks.size() < 4) {
    for (size_t i = 0; i < ks.size(); ++i) out[i] = bohr_sum(c, idx, phys, ks[i], vol);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic_size_t next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= ks.size()) break;
        out[i] = bohr_sum(c, idx, phys, ks[i], vol);
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

IntensityEstimate intensity_via_autocorr(const Autocorrelation& gamma, const Vec& k,
                                         double inner_radius) {
  if (inner_radius > gamma.R / 2.0 + 1e-12)
    throw InnerTooLarge("intensity_via_autocorr: inner_radius must be <= R/2");
  const int d = gamma.scheme.d;
  NeumaierSum re, im;
  for (const auto& [z, v] : gamma.coeffs) {
    const Vec x = physical_part(gamma.scheme, z);
    if (sup_norm(x) > inner_radius) continue;
    const double ph = -kTwoPi * dot(k, x);
    const double cs = std::cos(ph), sn = std::sin(ph);
    re.add(v.real() * cs - v.imag() * sn);
    im.add(v.real() * sn + v.imag() * cs);
  }
  const double vol = std::pow(2.0 * inner_radius, d);
  IntensityEstimate est;
  est.value = re.value() / vol;
  est.imag_abs = std::fabs(im.value() / vol);
  est.hermitian_ok = est.imag_abs < 1e-6 * std::max(std::fabs(est.value), 1e-300);
  return est;
}

std::vector<std::pair<Vec, IntVec>> bragg_candidates(const DualSchemeBasis& dual,
                                                     const Box& freq_box, const Box& internal_box,
                                                     std::uint64_t candidate_budget) {
  auto keys = enumerate_lattice(dual, freq_box, internal_box, candidate_budget);
  std::vector<std::pair<Vec, IntVec>> out;
  out.reserve(keys.size());
  for (auto& w : keys) out.emplace_back(physical_part(dual, w), std::move(w));
  return out;
}

EpsDualSet eps_dual_characters(const DualSchemeBasis& dual, const WindowUnion& W, double eps,
                               const Box& freq_box, const PointSetPatch& primal_patch,
                               std::uint64_t candidate_budget, double fallback_internal_cutoff) {
  if (eps <= 0.0) throw std::invalid_argument("eps_dual_characters: eps must be positive");

  // For eps < 2 the deviation is 2 as soon as y.w sweeps a full period, so
  // members live in a bounded internal box; otherwise fall back to the
  // caller's cutoff.
  Box internal_box = Box::centered(fallback_internal_cutoff, dual.m);
  if (eps < 2.0 && !W.empty()) {
    const Box bb = W.bounding_box();
    for (int i = 0; i < dual.m; ++i) {
      const double extent = std::max(std::fabs(bb.lo[i]), std::fabs(bb.hi[i]));
      if (extent > 0.0) {
        internal_box.lo[i] = -1.0 / extent;
        internal_box.hi[i] = 1.0 / extent;
      }
    }
  }

  EpsDualSet set;
  set.eps = eps;
  set.window_descriptor = eps_dual_window(W, eps).descriptor;
  for (auto& [k, w] : bragg_candidates(dual, freq_box, internal_box, candidate_budget)) {
    const Vec y = star(dual, w);
    if (!eps_dual_member(y, W, eps)) continue;
    set.frequencies.emplace_back(k, w);
  }

  // Lemma-style certification against the primal patch: every member must
  // move every patch character by at most eps.
  for (const auto& [k, w] : set.frequencies) {
    for (const auto& z : primal_patch.points) {
      const Vec x = physical_part(primal_patch.scheme, z);
      const double dev = 2.0 * std::fabs(std::sin(std::numbers::pi * frac_dot(k, x)));
      if (dev > eps + 1e-12)
        throw CertificationFailure("eps_dual_characters: member failed the patch bound (dev=" +
                                   std::to_string(dev) + ", eps=" + std::to_string(eps) + ")");
    }
  }
  return set;
}

LipschitzReport lipschitz_bound_check(const WeightedComb& c, const Autocorrelation& gamma,
                                      const EpsDualSet& eps_set, const std::vector<Vec>& psis,
                                      const VanHoveSequence& seq, double R, int threads) {
  LipschitzReport rep;
  rep.eps = eps_set.eps;

  // C estimate: max over the van Hove boxes of sum |gamma| / Vol, with 10%
  // headroom for the asymptotic limsup.
  double cmax = 0.0;
  for (size_t n = 0; n < seq.size(); ++n) {
    if (seq.radii[n] > 2.0 * gamma.R) break;
    double mass = 0.0;
    for (const auto& [z, v] : gamma.coeffs)
      if (sup_norm(physical_part(gamma.scheme, z)) <= seq.radii[n]) mass += std::abs(v);
    cmax = std::max(cmax, mass / seq.volume(n));
  }
  rep.C_est = 1.1 * cmax;

  // Frequencies needed: psi and psi+chi for every pair.
  std::vector<Vec> freqs;
  freqs.reserve(psis.size() * (1 + eps_set.frequencies.size()));
  for (const auto& psi : psis) {
    freqs.push_back(psi);
    for (const auto& [chi, w] : eps_set.frequencies) freqs.push_back(add(psi, chi));
  }
  const auto S_R = fourier_bohr_sweep(c, freqs, R, threads);
  const auto S_2R = fourier_bohr_sweep(c, freqs, 2.0 * R, threads);

  // Finite-size slack: two-scale discrepancy of the intensity estimates.
  for (size_t i = 0; i < freqs.size(); ++i)
    rep.slack = std::max(rep.slack, std::fabs(std::norm(S_R[i]) - std::norm(S_2R[i])));

  const double bound = rep.C_est * eps_set.eps + rep.slack;
  size_t pos = 0;
  for (const auto& psi : psis) {
    const double base = std::norm(S_R[pos]);
    ++pos;
    for (const auto& [chi, w] : eps_set.frequencies) {
      const double shifted = std::norm(S_R[pos]);
      ++pos;
      LipschitzRow row;
      row.psi = psi;
      row.chi = chi;
      row.base_intensity = base;
      row.shifted_intensity = shifted;
      row.difference = std::fabs(shifted - base);
      row.bound = bound;
      row.violation = row.difference > bound;
      if (row.violation) ++rep.violations;
      if (bound > 0.0) rep.max_ratio = std::max(rep.max_ratio, row.difference / bound);
      rep.table.push_back(std::move(row));
    }
  }
  return rep;
}

double covering_radius(const std::vector<Vec>& freqs, const Box& box) {
  if (freqs.empty()) throw EmptySet("covering_radius: empty frequency list");
  const int d = box.dim();
  const int steps = 1000;

  std::vector<Vec> sorted = freqs;
  std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
  auto nearest = [&](const Vec& g) {
    double best = std::numeric_limits<double>::infinity();
    auto cmp = [](const Vec& a, double x) { return a[0] < x; };
    auto it = std::lower_bound(sorted.begin(), sorted.end(), g[0], cmp);
    auto probe = [&](std::ptrdiff_t i) {
      if (i < 0 || i >= static_cast<std::ptrdiff_t>(sorted.size())) return;
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += (sorted[i][k] - g[k]) * (sorted[i][k] - g[k]);
      best = std::min(best, std::sqrt(s));
    };
    const std::ptrdiff_t at = it - sorted.begin();
    for (std::ptrdiff_t r = at; r < static_cast<std::ptrdiff_t>(sorted.size()); ++r) {
      if (sorted[r][0] - g[0] > best) break;
      probe(r);
    }
    for (std::ptrdiff_t l = at - 1; l >= 0; --l) {
      if (g[0] - sorted[l][0] > best) break;
      probe(l);
    }
    return best;
  };

  double cover = 0.0;
  if (d == 1) {
    const double step = box.width(0) / steps;
    for (int i = 1; i < steps; ++i) cover = std::max(cover, nearest(Vec{box.lo[0] + i * step}));
  } else {
    const double sx = box.width(0) / steps;
    const double sy = box.width(1) / steps;
    for (int i = 1; i < steps; ++i)
      for (int j = 1; j < steps; ++j)
        cover = std::max(cover, nearest(Vec{box.lo[0] + i * sx, box.lo[1] + j * sy}));
  }
  return cover;
}

std::vector<ResidualBin> continuous_residual(const WeightedComb& c, const std::vector<Vec>& grid,
                                             double R, const std::vector<Vec>& peak_list,
                                             double guard, int bins, int threads) {
  const int d = c.scheme().d;
  const double vol = std::pow(2.0 * R, d);
  if (guard <= 0.0) guard = 10.0 / std::pow(vol, 1.0 / d);

  std::vector<Vec> kept;
  for (const auto& k : grid) {
    bool ok = true;
    for (const auto& p : peak_list) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += (k[i] - p[i]) * (k[i] - p[i]);
      if (std::sqrt(s) < guard) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(k);
  }

  std::vector<ResidualBin> out(static_cast<size_t>(bins));
  if (kept.empty()) return out;

  auto coord = [&](const Vec& k) { return d == 1 ? k[0] : euclid_norm(k); };
  double lo = coord(kept.front()), hi = lo;
  for (const auto& k : kept) {
    lo = std::min(lo, coord(k));
    hi = std::max(hi, coord(k));
  }
  const double span = std::max(hi - lo, 1e-12);

  const auto values = fourier_bohr_sweep(c, kept, R, threads);
  std::vector<double> sums(bins, 0.0);
  std::vector<int> counts(bins, 0);
  for (size_t i = 0; i < kept.size(); ++i) {
    int b = static_cast<int>((coord(kept[i]) - lo) / span * bins);
    b = std::clamp(b, 0, bins - 1);
    sums[b] += std::norm(values[i]) * vol;
    counts[b] += 1;
  }
  for (int b = 0; b < bins; ++b) {
    out[b].bin_center = lo + (b + 0.5) * span / bins;
    out[b].count = counts[b];
    out[b].level = counts[b] > 0 ? sums[b] / counts[b] : 0.0;
  }
  return out;
}

}  // namespace modelcomb
