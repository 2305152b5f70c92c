#pragma once

#include <complex>
#include <vector>

#include "modelcomb/geometry.hpp"

namespace modelcomb {

/// Coefficient map on exact physical positions: a finite pure point measure
/// sum_z c(z) delta_z. Entries are sorted lexicographically by position;
/// atoms at identical positions are merged.
struct CoefficientMap {
  int d = 1;
  std::vector<std::pair<Vec, std::complex<double>>> entries;

  static CoefficientMap from_entries(int d, std::vector<std::pair<Vec, std::complex<double>>> e);

  size_t size() const { return entries.size(); }
  /// Value at the entry whose position is within match_tol (sup norm) of
  /// pos; 0 if none.
  std::complex<double> lookup(const Vec& pos, double match_tol = 1e-9) const;
  double max_abs() const;
};

struct VanHoveSequence {
  int d = 1;
  std::vector<double> radii;  // strictly increasing, N >= 3

  VanHoveSequence() = default;
  VanHoveSequence(int d_, std::vector<double> radii_);
  static VanHoveSequence geometric(double first, int count, double factor, int d);

  double volume(size_t n) const;
  size_t size() const { return radii.size(); }
};

/// For each n: sum of |c(z)| over positions in A_n = [-R_n, R_n]^d divided
/// by Vol(A_n).
std::vector<double> null_mean(const CoefficientMap& coeffs, const VanHoveSequence& seq);

/// sup over positions z (of the map and its t-translate) with
/// |z|_inf <= patch_radius - |t|_inf of |c(z) - c(z - t)|, missing
/// positions read as 0.
double norm_ap_defect(const CoefficientMap& coeffs, const Vec& t, double patch_radius,
                      double match_tol = 1e-9);

struct UniquenessOptions {
  std::vector<Vec> periods;  // candidate almost-periods, >= 3 required
  double patch_radius = 0.0;
  double defect_tol = 0.0;   // <= 0: default 0.2 * max|mu|
  double null_tol = 0.0;     // <= 0: default 0.05 * |mu|(A_1)/Vol(A_1)
  double match_tol = 1e-9;
};

struct UniquenessReport {
  bool accepted = false;
  bool defect_ok = false;
  bool null_ok = false;
  double max_defect = 0.0;
  double defect_tol = 0.0;
  double null_tol = 0.0;
  std::vector<double> null_means;
};

/// Screens (candidate_S, candidate_0) as the almost-periodic/null splitting
/// of mu: candidate_S must have small translation defect for every candidate
/// almost-period, and null_mean(candidate_0) must decrease (from n=1) to
/// below tolerance. Throws SumMismatch unless candidate_S + candidate_0
/// equals mu within 1e-12 per atom.
UniquenessReport uniqueness_check(const CoefficientMap& mu, const CoefficientMap& candidate_S,
                                  const CoefficientMap& candidate_0, const VanHoveSequence& seq,
                                  const UniquenessOptions& opts);

}  // namespace modelcomb
