#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modelcomb/geometry.hpp"

namespace modelcomb {

/// Euclidean cut-and-project scheme: physical space R^d, internal space
/// R^m, lattice = B * Z^(d+m). The first d rows of B are the physical
/// coordinates, the last m rows the internal ones. Immutable after
/// construction.
struct SchemeBasis {
  int d = 1;
  int m = 1;
  std::vector<double> B;     // (d+m)x(d+m), row-major
  std::vector<double> Binv;  // cached inverse
  double det = 0.0;
  std::string name;

  SchemeBasis() = default;
  SchemeBasis(int d_, int m_, std::vector<double> B_rowmajor, std::string name_ = "");

  int n() const { return d + m; }
  double entry(int i, int j) const { return B[static_cast<size_t>(i) * n() + j]; }
};

/// The dual scheme carries the transposed-inverse basis; it has the same
/// shape as a primal scheme, so operations apply unchanged.
using DualSchemeBasis = SchemeBasis;

struct EmbeddedPoint {
  Vec physical;  // length d
  Vec internal;  // length m
};

EmbeddedPoint embed(const SchemeBasis& basis, const IntVec& p);
Vec physical_part(const SchemeBasis& basis, const IntVec& p);
/// Internal part of the embedded lattice point (the star map).
Vec star(const SchemeBasis& basis, const IntVec& p);

/// Lattice point density 1/|det B|.
double density(const SchemeBasis& basis);

/// Dual scheme with basis (B^T)^{-1}; dual pairing (B z)·(B' w) is an
/// integer for all integer z, w.
DualSchemeBasis dual_basis(const SchemeBasis& basis);

/// All integer points whose embedding lands in physical_box x internal_box.
/// Maps the product box through Binv, takes the integer bounding box and
/// filters; deterministic lexicographic order, no duplicates.
/// Throws OversizeError if the bounding box exceeds candidate_budget.
std::vector<IntVec> enumerate_lattice(const SchemeBasis& basis, const Box& physical_box,
                                      const Box& internal_box,
                                      std::uint64_t candidate_budget = 100000000ull);

struct InjectivityProbe {
  double min_nonzero_physical_norm;
  IntVec witness;
};

/// Diagnostic for injectivity of the physical projection: scans the integer
/// box |z|_inf <= probe_radius for nonzero lattice vectors with small
/// physical part. Cannot prove injectivity, only exhibit near-failures.
InjectivityProbe injectivity_probe(const SchemeBasis& basis, std::int64_t probe_radius);

}  // namespace modelcomb
