#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "modelcomb/coeffmap.hpp"
#include "modelcomb/comb.hpp"

namespace modelcomb {

/// Finite-volume autocorrelation of a weighted comb over A_R = [-R,R]^d:
/// gamma_R(z) = (1/Vol(A_R)) sum over ordered point pairs (x,y) inside A_R
/// with integer difference z of w(x) conj(w(y)). Keys are exact integer
/// lattice vectors, stored in lexicographic order.
struct Autocorrelation {
  SchemeBasis scheme;
  double R = 0.0;
  double volume = 0.0;  // (2R)^d
  std::vector<std::pair<IntVec, Complex>> coeffs;
  std::string comb_ref;

  Complex at(const IntVec& z) const;  // 0 if the key is absent
  Complex at_zero() const;
  CoefficientMap to_coefficient_map() const;
};

/// threads > 1 partitions the outer point loop with a fixed merge order;
/// per-key sums then differ from sequential mode only by reassociation
/// (<= 1e-12 relative). Default is sequential and bit-reproducible.
Autocorrelation autocorrelation(const WeightedComb& c, double R, int threads = 1);

struct SupportReport {
  int checked = 0;
  int violations = 0;
  double min_boundary_distance = 0.0;  // tightest margin of a compliant key
  double max_violation_distance = 0.0;
};

/// Verifies every nonzero key's star lies in the closed difference window
/// of W (eta-tolerant).
SupportReport support_check(const Autocorrelation& gamma, const SchemeBasis& scheme,
                            const WindowUnion& W);

enum class OracleKind { full_modelset, internal_function, bernoulli };

/// Infinite-volume strongly-almost-periodic coefficient oracle, per comb
/// construction family:
///   full_modelset:       dens * cvg(W, star(z))
///   bernoulli(p):        p^2  * dens * cvg(W, star(z))
///   internal_function g: dens * int g(u + star(z)) conj(g(u)) du, closed
///                        form for indicator/phase/contained tents,
///                        quadrature otherwise.
struct GammaSOracle {
  OracleKind kind = OracleKind::full_modelset;
  double p = 1.0;
  InternalWeight g;

  static GammaSOracle full_modelset();
  static GammaSOracle bernoulli(double p);
  static GammaSOracle internal_function(InternalWeight g);

  Complex eval(const SchemeBasis& scheme, const WindowUnion& W, const IntVec& z) const;
  std::string descriptor() const;
};

struct Decomposition {
  std::vector<std::pair<IntVec, Complex>> gamma_S;
  std::vector<std::pair<IntVec, Complex>> gamma_0;
  std::string oracle;
  double max_sum_error = 0.0;  // max |gamma_S + gamma_0 - gamma| over keys

  CoefficientMap gamma_S_map(const SchemeBasis& scheme) const;
  CoefficientMap gamma_0_map(const SchemeBasis& scheme) const;
  Complex gamma_0_at(const IntVec& z) const;
};

/// gamma_S = oracle on every gamma key plus all lattice keys within reach
/// ([-2R,2R]^d physical) where the oracle is nonzero; gamma_0 keeps the
/// exact difference. Enforces gamma_S + gamma_0 = gamma to 1e-12.
Decomposition decompose(const Autocorrelation& gamma, const GammaSOracle& oracle,
                        const WindowUnion& W, std::uint64_t candidate_budget = 100000000ull);

}  // namespace modelcomb
