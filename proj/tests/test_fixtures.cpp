#include <cmath>

#include "doctest.h"
#include "modelcomb/autocorr.hpp"
#include "modelcomb/coeffmap.hpp"
#include "modelcomb/errors.hpp"
#include "modelcomb/fixtures.hpp"
#include "modelcomb/prng.hpp"
#include "common.hpp"

using namespace modelcomb;
using testutil::fib_patch;

TEST_CASE("null_mean: single atom and zero map") {
  const auto seq = VanHoveSequence::geometric(10.0, 4, 2.0, 1);
  CoefficientMap atom = CoefficientMap::from_entries(1, {{Vec{0.0}, 3.0}});
  const auto vals = null_mean(atom, seq);
  for (size_t n = 0; n < vals.size(); ++n) CHECK(vals[n] == doctest::Approx(3.0 / seq.volume(n)));
  for (size_t n = 1; n < vals.size(); ++n) CHECK(vals[n] < vals[n - 1]);

  CoefficientMap zero;
  zero.d = 1;
  for (double v : null_mean(zero, seq)) CHECK(v == 0.0);
}

TEST_CASE("perturbed grid fixture: null mean tends to 2") {
  const double R = 1e4;
  const auto nu = perturbed_grid_measure(R);
  const auto seq = VanHoveSequence(1, {2500.0, 5000.0, 10000.0});
  const auto vals = null_mean(nu, seq);
  CHECK(std::fabs(vals.back() - 2.0) < 0.05 * 2.0);
  // The atom at 0 merged to weight -1.
  CHECK(nu.lookup({0.0}) == std::complex<double>(-1.0, 0.0));
}

TEST_CASE("two grid fixture: defect >= 1 for 50 sampled nonzero almost-periods") {
  const double R = 200.0;
  const auto mu = two_grid_measure(R);
  Xorshift64Star rng(17);
  int tested = 0;
  while (tested < 50) {
    const auto& a = mu.entries[rng.next() % mu.entries.size()].first;
    const auto& b = mu.entries[rng.next() % mu.entries.size()].first;
    const Vec t{a[0] - b[0]};
    if (std::fabs(t[0]) < 1e-9 || std::fabs(t[0]) > 50.0) continue;
    ++tested;
    CHECK(norm_ap_defect(mu, t, R) >= 1.0 - 1e-9);
  }
}

TEST_CASE("norm_ap_defect: zero shift and covariogram modulus of continuity") {
  const auto mu = two_grid_measure(100.0);
  CHECK(norm_ap_defect(mu, {0.0}, 100.0) == 0.0);

  // Full-model-set gamma_S map: defect bounded by dens * Lip(cvg) * |star(t)|.
  const auto patch = fib_patch(300.0);
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto gamma = autocorrelation(comb_unit(patch), 300.0);
  const auto dec = decompose(gamma, GammaSOracle::full_modelset(), W);
  const auto gs = dec.gamma_S_map(gamma.scheme);

  // Lattice vector with small star: (34, 55)... physical 34+55*tau ~ 123,
  // star 89 - 55*tau ~ 0.00813 < 0.01.
  const IntVec zt{34, 55};
  const Vec t = physical_part(gamma.scheme, zt);
  REQUIRE(std::fabs(star(gamma.scheme, zt)[0]) < 0.01);
  const double bound =
      density(gamma.scheme) * covariogram_lipschitz(W) * 0.01 + 1e-9;
  CHECK(norm_ap_defect(gs, t, 280.0) <= bound);
}

TEST_CASE("uniqueness_check: accepts the constructed pair, rejects swaps and fixtures") {
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto patch = fib_patch(250.0);
  const auto bern = comb_bernoulli(patch, 0.5, 42);
  const auto gamma = autocorrelation(bern, 250.0);
  const auto dec = decompose(gamma, GammaSOracle::bernoulli(0.5), W);

  const auto mu = gamma.to_coefficient_map();
  const auto gs = dec.gamma_S_map(gamma.scheme);
  const auto g0 = dec.gamma_0_map(gamma.scheme);
  const auto seq = VanHoveSequence::geometric(250.0, 6, 2.0, 1);

  UniquenessOptions opts;
  opts.patch_radius = 250.0;
  // Lattice almost-period candidates with small star.
  for (const IntVec z : {IntVec{5, 8}, IntVec{8, 13}, IntVec{13, 21}, IntVec{21, 34}})
    opts.periods.push_back(physical_part(gamma.scheme, z));

  const auto good = uniqueness_check(mu, gs, g0, seq, opts);
  CHECK(good.accepted);

  const auto swapped = uniqueness_check(mu, g0, gs, seq, opts);
  CHECK(!swapped.accepted);
  CHECK(!swapped.defect_ok);  // gamma_0's atom at the origin breaks the defect screen

  // (mu, 0) with mu = the perturbed grid fixture.
  const auto nu = perturbed_grid_measure(1000.0);
  CoefficientMap zero;
  zero.d = 1;
  UniquenessOptions fop;
  fop.patch_radius = 1000.0;
  fop.periods = {Vec{1.0}, Vec{2.0}, Vec{3.0}};
  const auto fseq = VanHoveSequence(1, {125.0, 250.0, 500.0, 1000.0});
  const auto fix = uniqueness_check(nu, nu, zero, fseq, fop);
  CHECK(!fix.accepted);
  CHECK(!fix.defect_ok);

  // Mismatched pair is a precondition violation.
  CHECK_THROWS_AS(uniqueness_check(mu, gs, gs, seq, opts), SumMismatch);
}

TEST_CASE("null_mean of the bernoulli gamma_0 decays along the van Hove sequence") {
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto bern = comb_bernoulli(fib_patch(250.0), 0.5, 42);
  const auto gamma = autocorrelation(bern, 250.0);
  const auto dec = decompose(gamma, GammaSOracle::bernoulli(0.5), W);
  const auto seq = VanHoveSequence::geometric(250.0, 6, 2.0, 1);
  const auto vals = null_mean(dec.gamma_0_map(gamma.scheme), seq);
  for (size_t n = 1; n + 1 < vals.size(); ++n) CHECK(vals[n + 1] <= vals[n]);
  CHECK(vals.back() < 0.15 * vals.front());
}
