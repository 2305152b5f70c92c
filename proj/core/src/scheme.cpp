#include "modelcomb/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modelcomb/errors.hpp"

namespace modelcomb {

namespace {

// Partial-pivot Gauss inverse for n <= 4. Returns det; throws BasisError on
// a (near-)singular matrix.
double invert(int n, const std::vector<double>& A, std::vector<double>& out) {
  std::vector<double> a = A;          // working copy, row-major
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) throw BasisError("scheme basis: zero matrix");

  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    if (std::fabs(a[piv * n + col]) < 1e-14 * scale)
      throw BasisError("scheme basis: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
      det = -det;
    }
    const double p = a[col * n + col];
    det *= p;
    const double pinv = 1.0 / p;
    for (int j = 0; j < n; ++j) {
      a[col * n + j] *= pinv;
      inv[col * n + j] *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  out = std::move(inv);
  return det;
}

}  // namespace

SchemeBasis::SchemeBasis(int d_, int m_, std::vector<double> B_rowmajor, std::string name_)
    : d(d_), m(m_), B(std::move(B_rowmajor)), name(std::move(name_)) {
  if (d < 1 || d > 2 || m < 1 || m > 2)
    throw BasisError("scheme basis: physical and internal dimensions must be 1 or 2");
  if (B.size() != static_cast<size_t>(n()) * n())
    throw BasisError("scheme basis: matrix must be (d+m)x(d+m)");
  det = invert(n(), B, Binv);
}

EmbeddedPoint embed(const SchemeBasis& basis, const IntVec& p) {
  const int n = basis.n();
  EmbeddedPoint e;
  e.physical.resize(basis.d);
  e.internal.resize(basis.m);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += basis.B[i * n + j] * static_cast<double>(p[j]);
    if (i < basis.d)
      e.physical[i] = s;
    else
      e.internal[i - basis.d] = s;
  }
  return e;
}

Vec physical_part(const SchemeBasis& basis, const IntVec& p) {
  const int n = basis.n();
  Vec x(basis.d);
  for (int i = 0; i < basis.d; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += basis.B[i * n + j] * static_cast<double>(p[j]);
    x[i] = s;
  }
  return x;
}

Vec star(const SchemeBasis& basis, const IntVec& p) {
  const int n = basis.n();
  Vec u(basis.m);
  for (int i = 0; i < basis.m; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += basis.B[(basis.d + i) * n + j] * static_cast<double>(p[j]);
    u[i] = s;
  }
  return u;
}

double density(const SchemeBasis& basis) { return 1.0 / std::fabs(basis.det); }

DualSchemeBasis dual_basis(const SchemeBasis& basis) {
  const int n = basis.n();
  // (B^T)^{-1} = (B^{-1})^T
  std::vector<double> Bt(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Bt[i * n + j] = basis.Binv[j * n + i];
  return SchemeBasis(basis.d, basis.m, std::move(Bt),
                     basis.name.empty() ? "dual" : basis.name + "_dual");
}

std::vector<IntVec> enumerate_lattice(const SchemeBasis& basis, const Box& physical_box,
                                      const Box& internal_box, std::uint64_t candidate_budget) {
  const int n = basis.n();
  if (physical_box.dim() != basis.d || internal_box.dim() != basis.m)
    throw BasisError("enumerate_lattice: box dimensions do not match the scheme");
  if (physical_box.degenerate() || internal_box.degenerate()) return {};

  Vec ylo(n), yhi(n);
  for (int i = 0; i < basis.d; ++i) {
    ylo[i] = physical_box.lo[i];
    yhi[i] = physical_box.hi[i];
  }
  for (int i = 0; i < basis.m; ++i) {
    ylo[basis.d + i] = internal_box.lo[i];
    yhi[basis.d + i] = internal_box.hi[i];
  }

  // Interval image of the product box under Binv, rounded out to integers.
  std::vector<std::int64_t> zlo(n), zhi(n);
  double count = 1.0;
  for (int i = 0; i < n; ++i) {
    double a = 0.0, b = 0.0;
    for (int j = 0; j < n; ++j) {
      const double c = basis.Binv[i * n + j];
      a += std::min(c * ylo[j], c * yhi[j]);
      b += std::max(c * ylo[j], c * yhi[j]);
    }
    zlo[i] = static_cast<std::int64_t>(std::ceil(a - 1e-9));
    zhi[i] = static_cast<std::int64_t>(std::floor(b + 1e-9));
    if (zhi[i] < zlo[i]) return {};
    count *= static_cast<double>(zhi[i] - zlo[i] + 1);
  }
  if (count > static_cast<double>(candidate_budget))
    throw OversizeError("enumerate_lattice: candidate box of " + std::to_string(count) +
                        " integer points exceeds the budget of " +
                        std::to_string(candidate_budget));

  // Odometer scan in ascending lexicographic order; the embedding is updated
  // incrementally (one basis column add per step).
  std::vector<IntVec> result;
  IntVec z(zlo.begin(), zlo.end());
  Vec y(n, 0.0);
  auto recompute = [&](int from) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += basis.B[i * n + j] * static_cast<double>(z[j]);
      y[i] = s;
    }
    (void)from;
  };
  recompute(0);

  const int last = n - 1;
  while (true) {
    bool inside = true;
    for (int i = 0; i < basis.d && inside; ++i)
      inside = y[i] >= physical_box.lo[i] && y[i] <= physical_box.hi[i];
    for (int i = 0; i < basis.m && inside; ++i)
      inside = y[basis.d + i] >= internal_box.lo[i] && y[basis.d + i] <= internal_box.hi[i];
    if (inside) result.push_back(z);

    int axis = last;
    while (axis >= 0 && z[axis] == zhi[axis]) --axis;
    if (axis < 0) break;
    ++z[axis];
    for (int i = axis + 1; i < n; ++i) z[i] = zlo[i];
    if (axis == last) {
      for (int i = 0; i < n; ++i) y[i] += basis.B[i * n + last];
    } else {
      recompute(axis);
    }
  }
  return result;
}

InjectivityProbe injectivity_probe(const SchemeBasis& basis, std::int64_t probe_radius) {
  const int n = basis.n();
  InjectivityProbe probe{std::numeric_limits<double>::infinity(), IntVec(n, 0)};
  IntVec z(n, -probe_radius);
  while (true) {
    bool zero = true;
    for (int i = 0; i < n; ++i) zero = zero && z[i] == 0;
    if (!zero) {
      double s = 0.0;
      for (int i = 0; i < basis.d; ++i) {
        double c = 0.0;
        for (int j = 0; j < n; ++j) c += basis.B[i * n + j] * static_cast<double>(z[j]);
        s += c * c;
      }
      s = std::sqrt(s);
      if (s < probe.min_nonzero_physical_norm) {
        probe.min_nonzero_physical_norm = s;
        probe.witness = z;
      }
    }
    int axis = n - 1;
    while (axis >= 0 && z[axis] == probe_radius) --axis;
    if (axis < 0) break;
    ++z[axis];
    for (int i = axis + 1; i < n; ++i) z[i] = -probe_radius;
  }
  return probe;
}

}  // namespace modelcomb
