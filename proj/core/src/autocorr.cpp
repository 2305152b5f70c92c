#include "modelcomb/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <unordered_map>

#include "modelcomb/errors.hpp"

namespace modelcomb {

namespace {

struct KeyHash {
  size_t operator()(const IntVec& z) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto v : z) {
      std::uint64_t u = static_cast<std::uint64_t>(v);
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xffull;
        h *= 1099511628211ull;
      }
    }
    return static_cast<size_t>(h);
  }
};

using KeyMap = std::unordered_map<IntVec, Complex, KeyHash>;

// Correlation int g(u+s) conj(g(u)) du for g restricted to the box union W.
Complex weight_correlation(const WindowUnion& W, const InternalWeight& g, const Vec& s) {
  switch (g.kind) {
    case InternalWeight::Kind::indicator:
      return covariogram(W, s);
    case InternalWeight::Kind::phase: {
      // g = e^{2 pi i theta.u} on W: the phase factors out of the overlap.
      const double ph = 2.0 * std::numbers::pi * dot(g.theta, s);
      return Complex(std::cos(ph), std::sin(ph)) * covariogram(W, s);
    }
    case InternalWeight::Kind::tent: {
      // Closed form when the tent support sits inside W: the correlation of
      // two unit tents is the cubic B-spline, h*B3(s/h) per axis.
      Box support(Vec(g.center), Vec(g.center));
      for (size_t i = 0; i < g.center.size(); ++i) {
        const double h = g.halfwidth.size() == 1 ? g.halfwidth[0] : g.halfwidth[i];
        support.lo[i] -= h;
        support.hi[i] += h;
      }
      bool contained = false;
      for (const auto& b : W.boxes)
        if (b.contains(support.lo, 1e-12) && b.contains(support.hi, 1e-12)) contained = true;
      if (contained) {
        double v = 1.0;
        for (size_t i = 0; i < s.size(); ++i) {
          const double h = g.halfwidth.size() == 1 ? g.halfwidth[0] : g.halfwidth[i];
          const double t = std::fabs(s[i]) / h;
          double b3;
          if (t >= 2.0)
            b3 = 0.0;
          else if (t >= 1.0)
            b3 = (2.0 - t) * (2.0 - t) * (2.0 - t) / 6.0;
          else
            b3 = 2.0 / 3.0 - t * t + 0.5 * t * t * t;
          v *= h * b3;
        }
        return v;
      }
      break;  // fall through to quadrature
    }
    case InternalWeight::Kind::trapezoid:
      break;
  }

  // Quadrature fallback over u in W (midpoint rule, step 1e-5 in 1D); the
  // weight is restricted to the window, so u+s outside W contributes 0.
  if (W.dim() == 1) {
    const double step = 1e-5;
    Complex acc(0.0, 0.0);
    for (const auto& b : W.boxes) {
      const long nsteps = std::lround(std::ceil(b.width(0) / step));
      const double h = b.width(0) / static_cast<double>(nsteps);
      for (long i = 0; i < nsteps; ++i) {
        const double u = b.lo[0] + (static_cast<double>(i) + 0.5) * h;
        const Vec us{u + s[0]};
        if (!W.contains(us, 0.0)) continue;
        acc += g.eval(us) * std::conj(g.eval(Vec{u})) * h;
      }
    }
    return acc;
  }
  const double step = 1e-3;
  Complex acc(0.0, 0.0);
  for (const auto& b : W.boxes) {
    const long nx = std::lround(std::ceil(b.width(0) / step));
    const long ny = std::lround(std::ceil(b.width(1) / step));
    const double hx = b.width(0) / static_cast<double>(nx);
    const double hy = b.width(1) / static_cast<double>(ny);
    for (long i = 0; i < nx; ++i)
      for (long j = 0; j < ny; ++j) {
        const Vec u{b.lo[0] + (i + 0.5) * hx, b.lo[1] + (j + 0.5) * hy};
        const Vec us{u[0] + s[0], u[1] + s[1]};
        if (!W.contains(us, 0.0)) continue;
        acc += g.eval(us) * std::conj(g.eval(u)) * (hx * hy);
      }
  }
  return acc;
}

}  // namespace

Complex Autocorrelation::at(const IntVec& z) const {
  auto it = std::lower_bound(coeffs.begin(), coeffs.end(), z,
                             [](const auto& a, const IntVec& b) { return lex_less(a.first, b); });
  if (it != coeffs.end() && it->first == z) return it->second;
  return Complex(0.0, 0.0);
}

Complex Autocorrelation::at_zero() const { return at(IntVec(scheme.n(), 0)); }

CoefficientMap Autocorrelation::to_coefficient_map() const {
  std::vector<std::pair<Vec, Complex>> entries;
  entries.reserve(coeffs.size());
  for (const auto& [z, v] : coeffs) entries.emplace_back(physical_part(scheme, z), v);
  return CoefficientMap::from_entries(scheme.d, std::move(entries));
}

Autocorrelation autocorrelation(const WeightedComb& c, double R, int threads) {
  const PointSetPatch& patch = *c.patch;
  const int d = patch.scheme.d;
  const int n = patch.scheme.n();
  for (int i = 0; i < d; ++i)
    if (patch.region.lo[i] > -R || patch.region.hi[i] < R)
      throw RegionTooSmall("autocorrelation: [-R,R]^d is not inside the comb region");

  // Points inside A_R with nonzero weight (zero weights contribute nothing).
  std::vector<size_t> idx;
  std::vector<Vec> phys;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c.weights[i] == Complex(0.0, 0.0)) continue;
    Vec x = physical_part(patch.scheme, patch.points[i]);
    bool inside = true;
    for (int k = 0; k < d; ++k) inside = inside && std::fabs(x[k]) <= R;
    if (!inside) continue;
    idx.push_back(i);
    phys.push_back(std::move(x));
  }

  const double vol = std::pow(2.0 * R, d);
  auto accumulate_block = [&](size_t lo, size_t hi, KeyMap& map) {
    IntVec key(n);
    for (size_t a = lo; a < hi; ++a) {
      const IntVec& za = patch.points[idx[a]];
      const Complex wa = c.weights[idx[a]];
      for (size_t b = 0; b < idx.size(); ++b) {
        const IntVec& zb = patch.points[idx[b]];
        for (int k = 0; k < n; ++k) key[k] = za[k] - zb[k];
        map[key] += wa * std::conj(c.weights[idx[b]]);
      }
    }
  };

  KeyMap total;
  total.reserve(idx.size() * 8 + 16);
  if (threads <= 1 || idx.size() < 256) {
    accumulate_block(0, idx.size(), total);
  } else {
    const size_t T = static_cast<size_t>(threads);
    std::vector<KeyMap> partial(T);
    std::vector<std::thread> pool;
    const size_t chunk = (idx.size() + T - 1) / T;
    for (size_t t = 0; t < T; ++t) {
      const size_t lo = t * chunk;
      const size_t hi = std::min(idx.size(), lo + chunk);
      pool.emplace_back([&, lo, hi, t] { accumulate_block(lo, hi, partial[t]); });
    }
    for (auto& th : pool) th.join();
    // Fixed merge order: per-key sums differ from sequential only by
    // reassociation across block boundaries.
    for (size_t t = 0; t < T; ++t)
      for (const auto& [k, v] : partial[t]) total[k] += v;
  }

  Autocorrelation gamma;
  gamma.scheme = patch.scheme;
  gamma.R = R;
  gamma.volume = vol;
  gamma.comb_ref = c.weight_model;
  gamma.coeffs.reserve(total.size());
  for (auto& [k, v] : total) gamma.coeffs.emplace_back(k, v / vol);
  std::sort(gamma.coeffs.begin(), gamma.coeffs.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return gamma;
}

SupportReport support_check(const Autocorrelation& gamma, const SchemeBasis& scheme,
                            const WindowUnion& W) {
  const WindowUnion diff = difference_window(W);
  SupportReport report;
  report.min_boundary_distance = std::numeric_limits<double>::infinity();

  auto boundary_distance = [&](const Vec& u, bool member) {
    // Box-wise distance diagnostic: inside, distance to the containing box
    // face; outside, distance to the nearest box.
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : diff.boxes) {
      if (member && b.contains(u, diff.eta)) {
        double margin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < b.dim(); ++i)
          margin = std::min({margin, u[i] - b.lo[i], b.hi[i] - u[i]});
        best = std::min(best, std::fabs(margin));
      } else if (!member) {
        double dist = 0.0;
        for (int i = 0; i < b.dim(); ++i) {
          const double excess = std::max({b.lo[i] - u[i], u[i] - b.hi[i], 0.0});
          dist += excess * excess;
        }
        best = std::min(best, std::sqrt(dist));
      }
    }
    return best;
  };

  for (const auto& [z, v] : gamma.coeffs) {
    if (v == Complex(0.0, 0.0)) continue;
    ++report.checked;
    const Vec u = star(scheme, z);
    if (diff.contains(u, diff.eta)) {
      report.min_boundary_distance =
          std::min(report.min_boundary_distance, boundary_distance(u, true));
    } else {
      ++report.violations;
      report.max_violation_distance =
          std::max(report.max_violation_distance, boundary_distance(u, false));
    }
  }
  if (report.checked == 0) report.min_boundary_distance = 0.0;
  return report;
}

GammaSOracle GammaSOracle::full_modelset() { return GammaSOracle{}; }

GammaSOracle GammaSOracle::bernoulli(double p) {
  GammaSOracle o;
  o.kind = OracleKind::bernoulli;
  o.p = p;
  return o;
}

GammaSOracle GammaSOracle::internal_function(InternalWeight g) {
  GammaSOracle o;
  o.kind = OracleKind::internal_function;
  o.g = std::move(g);
  return o;
}

Complex GammaSOracle::eval(const SchemeBasis& scheme, const WindowUnion& W,
                           const IntVec& z) const {
  const Vec s = star(scheme, z);
  const double dens = density(scheme);
  switch (kind) {
    case OracleKind::full_modelset:
      return dens * covariogram(W, s);
    case OracleKind::bernoulli:
      return p * p * dens * covariogram(W, s);
    case OracleKind::internal_function:
      return dens * weight_correlation(W, g, s);
  }
  throw UnknownKind("gamma_S oracle: unknown kind");
}

std::string GammaSOracle::descriptor() const {
  switch (kind) {
    case OracleKind::full_modelset:
      return "full_modelset";
    case OracleKind::bernoulli:
      return "bernoulli(p=" + std::to_string(p) + ")";
    case OracleKind::internal_function:
      return "internal_function(" + g.descriptor() + ")";
  }
  return "unknown";
}

CoefficientMap Decomposition::gamma_S_map(const SchemeBasis& scheme) const {
  std::vector<std::pair<Vec, Complex>> entries;
  entries.reserve(gamma_S.size());
  for (const auto& [z, v] : gamma_S) entries.emplace_back(physical_part(scheme, z), v);
  return CoefficientMap::from_entries(scheme.d, std::move(entries));
}

CoefficientMap Decomposition::gamma_0_map(const SchemeBasis& scheme) const {
  std::vector<std::pair<Vec, Complex>> entries;
  entries.reserve(gamma_0.size());
  for (const auto& [z, v] : gamma_0) entries.emplace_back(physical_part(scheme, z), v);
  return CoefficientMap::from_entries(scheme.d, std::move(entries));
}

Complex Decomposition::gamma_0_at(const IntVec& z) const {
  auto it = std::lower_bound(gamma_0.begin(), gamma_0.end(), z,
                             [](const auto& a, const IntVec& b) { return lex_less(a.first, b); });
  if (it != gamma_0.end() && it->first == z) return it->second;
  return Complex(0.0, 0.0);
}

Decomposition decompose(const Autocorrelation& gamma, const GammaSOracle& oracle,
                        const WindowUnion& W, std::uint64_t candidate_budget) {
  const SchemeBasis& scheme = gamma.scheme;

  // Oracle support within reach of gamma: all lattice keys in
  // [-2R, 2R]^d whose star lies in the (inflated) difference window.
  const WindowUnion diff = difference_window(W);
  const Box key_box = Box::centered(2.0 * gamma.R, scheme.d);
  const Box internal_box = diff.bounding_box().inflated(diff.eta);
  auto keys = enumerate_lattice(scheme, key_box, internal_box, candidate_budget);

  std::vector<std::pair<IntVec, Complex>> gamma_S;
  gamma_S.reserve(keys.size());
  for (auto& z : keys) {
    const Complex v = oracle.eval(scheme, W, z);
    if (v != Complex(0.0, 0.0)) gamma_S.emplace_back(std::move(z), v);
  }

  // gamma_0 = gamma - gamma_S on the union of both key sets (sorted merge).
  Decomposition dec;
  dec.oracle = oracle.descriptor();
  dec.gamma_S = std::move(gamma_S);
  dec.gamma_0.reserve(dec.gamma_S.size() + gamma.coeffs.size());
  size_t i = 0, j = 0;
  while (i < gamma.coeffs.size() || j < dec.gamma_S.size()) {
    if (j >= dec.gamma_S.size() ||
        (i < gamma.coeffs.size() && lex_less(gamma.coeffs[i].first, dec.gamma_S[j].first))) {
      dec.gamma_0.emplace_back(gamma.coeffs[i].first, gamma.coeffs[i].second);
      ++i;
    } else if (i >= gamma.coeffs.size() || lex_less(dec.gamma_S[j].first, gamma.coeffs[i].first)) {
      dec.gamma_0.emplace_back(dec.gamma_S[j].first, -dec.gamma_S[j].second);
      ++j;
    } else {
      dec.gamma_0.emplace_back(gamma.coeffs[i].first,
                               gamma.coeffs[i].second - dec.gamma_S[j].second);
      ++i;
      ++j;
    }
  }

  // Exact-sum invariant.
  {
    size_t a = 0, b = 0;
    for (const auto& [z, v0] : dec.gamma_0) {
      while (a < dec.gamma_S.size() && lex_less(dec.gamma_S[a].first, z)) ++a;
      while (b < gamma.coeffs.size() && lex_less(gamma.coeffs[b].first, z)) ++b;
      const Complex vs =
          (a < dec.gamma_S.size() && dec.gamma_S[a].first == z) ? dec.gamma_S[a].second : 0.0;
      const Complex vg =
          (b < gamma.coeffs.size() && gamma.coeffs[b].first == z) ? gamma.coeffs[b].second : 0.0;
      dec.max_sum_error = std::max(dec.max_sum_error, std::abs(vs + v0 - vg));
    }
    if (dec.max_sum_error > 1e-12)
      throw SumMismatch("decompose: gamma_S + gamma_0 deviates from gamma by " +
                        std::to_string(dec.max_sum_error));
  }
  return dec;
}

}  // namespace modelcomb
