#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modelcomb/autocorr.hpp"
#include "modelcomb/comb.hpp"

namespace modelcomb {

/// Volume-normalized exponential sum S_R(k) = (1/Vol(A_R)) sum_{x in A_R}
/// w(x) exp(-2 pi i k.x), compensated summation in lexicographic point
/// order. |S_R(k)|^2 estimates the diffraction intensity at k.
Complex fourier_bohr(const WeightedComb& c, const Vec& k, double R);

/// Parallel sweep over frequencies; results are merged by input order and
/// bit-identical for any thread count.
std::vector<Complex> fourier_bohr_sweep(const WeightedComb& c, const std::vector<Vec>& ks,
                                        double R, int threads = 1);

struct IntensityEstimate {
  double value = 0.0;      // real part of the averaged sum
  double imag_abs = 0.0;
  bool hermitian_ok = true;  // |imag| < 1e-6 |value|
};

/// Intensity at k from the autocorrelation average:
/// sum_{|phys(z)|_inf <= inner_radius} gamma(z) exp(-2 pi i k.phys(z)) /
/// Vol(inner box). Requires inner_radius <= R/2.
IntensityEstimate intensity_via_autocorr(const Autocorrelation& gamma, const Vec& k,
                                         double inner_radius);

struct SpectrumEntry {
  Vec frequency;
  std::optional<IntVec> dual_key;
  double intensity = 0.0;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;
  double R = 0.0;
  std::string method;  // bohr_sum | via_autocorr
};

/// Candidate Bragg positions: dual lattice points with physical part in
/// freq_box and internal part in internal_box (frequencies of bounded dual
/// internal norm).
std::vector<std::pair<Vec, IntVec>> bragg_candidates(const DualSchemeBasis& dual,
                                                     const Box& freq_box, const Box& internal_box,
                                                     std::uint64_t candidate_budget = 100000000ull);

struct EpsDualSet {
  double eps = 0.0;
  std::vector<std::pair<Vec, IntVec>> frequencies;  // (physical, dual key)
  std::string window_descriptor;
};

/// Dual lattice points whose internal part satisfies char_deviation < eps,
/// each certified against the primal patch: max_x |exp(2 pi i k.x) - 1|
/// <= eps + 1e-12 must hold over the patch or CertificationFailure is
/// thrown (a failure indicates a bug, not data).
EpsDualSet eps_dual_characters(const DualSchemeBasis& dual, const WindowUnion& W, double eps,
                               const Box& freq_box, const PointSetPatch& primal_patch,
                               std::uint64_t candidate_budget = 100000000ull,
                               double fallback_internal_cutoff = 30.0);

struct LipschitzRow {
  Vec psi, chi;
  double base_intensity = 0.0;
  double shifted_intensity = 0.0;
  double difference = 0.0;
  double bound = 0.0;
  bool violation = false;
};

struct LipschitzReport {
  double C_est = 0.0;   // 1.1 * max_n sum_{A_n} |gamma| / Vol(A_n)
  double slack = 0.0;   // max two-scale discrepancy of |S|^2 at (R, 2R)
  double eps = 0.0;
  int violations = 0;
  double max_ratio = 0.0;  // max difference / bound
  std::vector<LipschitzRow> table;
};

/// Checks ||S_R(psi+chi)|^2 - |S_R(psi)|^2| <= C_est * eps + slack for every
/// psi in psis and chi in eps_set. The comb region must cover [-2R, 2R]^d
/// (slack is measured at (R, 2R)).
LipschitzReport lipschitz_bound_check(const WeightedComb& c, const Autocorrelation& gamma,
                                      const EpsDualSet& eps_set, const std::vector<Vec>& psis,
                                      const VanHoveSequence& seq, double R, int threads = 1);

/// Max over a grid (10^3 per axis, one-step interior margin) of the
/// distance to the nearest listed frequency. Throws EmptySet.
double covering_radius(const std::vector<Vec>& freqs, const Box& box);

struct ResidualBin {
  double bin_center = 0.0;  // first coordinate (d=1) or radius (d=2)
  double level = 0.0;       // mean |S_R|^2 * Vol(A_R) over the bin
  int count = 0;
};

/// |S_R(k)|^2 * Vol(A_R) averaged per bin over grid points at least
/// guard away from every listed peak; estimates the absolutely continuous
/// diffraction level (noise floor for pure point combs). guard <= 0 uses
/// the default 10 / Vol(A_R)^(1/d).
std::vector<ResidualBin> continuous_residual(const WeightedComb& c, const std::vector<Vec>& grid,
                                             double R, const std::vector<Vec>& peak_list,
                                             double guard = 0.0, int bins = 10, int threads = 1);

}  // namespace modelcomb
