#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "modelcomb/diffraction.hpp"
#include "modelcomb/errors.hpp"
#include "modelcomb/prng.hpp"
#include "common.hpp"

using namespace modelcomb;
using testutil::fib_patch;
using testutil::fibonacci_scheme;
using testutil::identity_scheme;

namespace {

std::shared_ptr<const PointSetPatch> integer_patch(double radius) {
  return std::make_shared<PointSetPatch>(model_set(
      identity_scheme(), WindowUnion::interval(-0.5, 0.5), Box::centered(radius, 1)));
}

}  // namespace

TEST_CASE("fourier_bohr: density at k=0, Bragg at integers, destructive at half") {
  const auto c = comb_unit(integer_patch(100.5));
  const double vol = 201.0;
  const Complex s0 = fourier_bohr(c, {0.0}, 100.5);
  CHECK(s0.real() == doctest::Approx(201.0 / vol));
  CHECK(s0.imag() == doctest::Approx(0.0).epsilon(1e-12));

  const Complex s1 = fourier_bohr(c, {1.0}, 100.5);
  CHECK(std::abs(s1) == doctest::Approx(201.0 / vol).epsilon(1e-9));

  const Complex shalf = fourier_bohr(c, {0.5}, 100.5);
  CHECK(std::norm(shalf) <= 1e-3);
}

TEST_CASE("fourier_bohr: conjugation symmetry and |S(0)|^2 for real combs") {
  const auto c = comb_unit(fib_patch(500.0));
  int inside = 0;
  for (const auto& z : c.patch->points)
    if (std::fabs(physical_part(c.scheme(), z)[0]) <= 500.0) ++inside;
  const Complex s0 = fourier_bohr(c, {0.0}, 500.0);
  CHECK(std::norm(s0) == doctest::Approx(std::pow(inside / 1000.0, 2)));

  Xorshift64Star rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vec k{-3.0 + 6.0 * rng.next_unit()};
    const Complex plus = fourier_bohr(c, k, 500.0);
    const Complex minus = fourier_bohr(c, {-k[0]}, 500.0);
    CHECK(std::abs(minus - std::conj(plus)) < 1e-12);
  }
}

TEST_CASE("fourier_bohr sweep: parallel results bit-identical") {
  const auto c = comb_unit(fib_patch(400.0));
  std::vector<Vec> ks;
  for (int i = 0; i < 37; ++i) ks.push_back({0.1 * i});
  const auto seq = fourier_bohr_sweep(c, ks, 400.0, 1);
  const auto par = fourier_bohr_sweep(c, ks, 400.0, 4);
  for (size_t i = 0; i < ks.size(); ++i) {
    CHECK(seq[i].real() == par[i].real());
    CHECK(seq[i].imag() == par[i].imag());
  }
}

TEST_CASE("bragg_candidates") {
  const auto id_dual = dual_basis(identity_scheme());
  const auto ints = bragg_candidates(id_dual, Box({-3.2}, {3.2}), Box({-0.5}, {0.5}));
  CHECK(ints.size() == 7);  // integers -3..3

  const auto dual = dual_basis(fibonacci_scheme());
  const auto cands = bragg_candidates(dual, Box({0.0}, {3.0}), Box({-5.0}, {5.0}));
  CHECK(!cands.empty());

  CHECK(bragg_candidates(dual, Box({1.0}, {0.5}), Box({-5.0}, {5.0})).empty());
}

TEST_CASE("bragg candidates carry intensity above the off-module floor") {
  const double R = 2000.0;
  const auto c = comb_unit(fib_patch(R));
  const auto dual = dual_basis(fibonacci_scheme());
  auto cands = bragg_candidates(dual, Box({0.05}, {3.0}), Box({-5.0}, {5.0}));

  std::vector<Vec> freqs;
  for (const auto& [k, w] : cands) freqs.push_back(k);
  const auto values = fourier_bohr_sweep(c, freqs, R);

  // Off-module probes away from all module points of moderate internal norm.
  const auto guard_list = bragg_candidates(dual, Box({0.0}, {3.5}), Box({-30.0}, {30.0}));
  Xorshift64Star rng(31);
  double floor_level = 0.0;
  int probes = 0;
  while (probes < 200) {
    const Vec k{0.05 + 2.9 * rng.next_unit()};
    bool clear = true;
    for (const auto& [q, w] : guard_list)
      if (std::fabs(q[0] - k[0]) < 0.01) clear = false;
    if (!clear) continue;
    ++probes;
    floor_level = std::max(floor_level, std::norm(fourier_bohr(c, k, R)));
  }

  // Top candidates (by intensity) dominate the floor by 10x.
  std::vector<double> intens;
  for (const auto& v : values) intens.push_back(std::norm(v));
  std::sort(intens.rbegin(), intens.rend());
  REQUIRE(intens.size() >= 10);
  for (int i = 0; i < 10; ++i) CHECK(intens[i] > 10.0 * floor_level);
}

TEST_CASE("intensity_via_autocorr: positivity at zero and Bragg cross-validation") {
  const double R = 4000.0;
  const auto c = comb_unit(fib_patch(R));
  const auto gamma = autocorrelation(c, R);

  const auto at0 = intensity_via_autocorr(gamma, {0.0}, R / 16.0);
  CHECK(at0.value >= 0.0);
  CHECK(at0.hermitian_ok);

  CHECK_THROWS_AS(intensity_via_autocorr(gamma, {0.0}, R), InnerTooLarge);

  // Cross-validate both estimators on strong Bragg candidates.
  const auto dual = dual_basis(fibonacci_scheme());
  auto cands = bragg_candidates(dual, Box({0.05}, {10.0}), Box({-3.0}, {3.0}));
  std::vector<std::pair<double, Vec>> strong;
  for (const auto& [k, w] : cands) {
    const double inten = std::norm(fourier_bohr(c, k, R));
    if (inten > 1e-3) strong.push_back({inten, k});
  }
  std::sort(strong.begin(), strong.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  REQUIRE(strong.size() >= 5);
  for (size_t i = 0; i < std::min<size_t>(strong.size(), 10); ++i) {
    const auto est = intensity_via_autocorr(gamma, strong[i].second, R / 16.0);
    CHECK(est.value == doctest::Approx(strong[i].first).epsilon(0.05));
  }

  // Off-module frequencies decay as the inner window doubles.
  Xorshift64Star rng(12);
  int decays = 0, tried = 0;
  while (tried < 5) {
    const Vec k{0.1 + 5.0 * rng.next_unit()};
    bool clear = true;
    const auto guard_list = bragg_candidates(dual, Box({0.0}, {6.0}), Box({-30.0}, {30.0}));
    for (const auto& [q, w] : guard_list)
      if (std::fabs(q[0] - k[0]) < 0.02) clear = false;
    if (!clear) continue;
    ++tried;
    const double v1 = std::fabs(intensity_via_autocorr(gamma, k, 250.0).value);
    const double v2 = std::fabs(intensity_via_autocorr(gamma, k, 500.0).value);
    if (v1 >= 1.5 * v2) ++decays;
  }
  CHECK(decays >= 3);  // statistical: most off-module probes halve
}

TEST_CASE("eps_dual_characters: trivial memberships and certification") {
  const auto dual = dual_basis(fibonacci_scheme());
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto patch = model_set(fibonacci_scheme(), W, Box::centered(500.0, 1));

  // eps >= 2: every enumerated dual point qualifies.
  const auto all = eps_dual_characters(dual, W, 2.5, Box({-3.0}, {3.0}), patch, 1e8, 3.0);
  const auto raw = bragg_candidates(dual, Box({-3.0}, {3.0}), Box::centered(3.0, 1));
  CHECK(all.frequencies.size() == raw.size());

  // k = 0 is always a member.
  const auto small = eps_dual_characters(dual, W, 0.5, Box({-10.0}, {10.0}), patch);
  bool has_zero = false;
  for (const auto& [k, w] : small.frequencies)
    if (w == IntVec{0, 0}) has_zero = true;
  CHECK(has_zero);
  CHECK(!small.frequencies.empty());

  // Every member passes the strict membership predicate.
  for (const auto& [k, w] : small.frequencies)
    CHECK(eps_dual_member(star(dual, w), W, 0.5));
}

TEST_CASE("eps_dual_characters: covering radius in the base box is stable under enumeration growth") {
  const auto dual = dual_basis(fibonacci_scheme());
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto patch = model_set(fibonacci_scheme(), W, Box::centered(300.0, 1));
  const Box base({-10.0}, {10.0});

  const auto g1 = eps_dual_characters(dual, W, 0.5, base, patch);
  const auto g2 = eps_dual_characters(dual, W, 0.5, Box({-20.0}, {20.0}), patch);
  std::vector<Vec> f1, f2;
  for (const auto& [k, w] : g1.frequencies) f1.push_back(k);
  for (const auto& [k, w] : g2.frequencies) f2.push_back(k);
  const double c1 = covering_radius(f1, base);
  const double c2 = covering_radius(f2, base);
  CHECK(std::isfinite(c1));
  CHECK(std::fabs(c2 - c1) <= 0.2 * std::max(c1, c2));
}

TEST_CASE("covering_radius") {
  std::vector<Vec> ints;
  for (int i = 0; i <= 10; ++i) ints.push_back({static_cast<double>(i)});
  CHECK(covering_radius(ints, Box({0.0}, {10.0})) == doctest::Approx(0.5).epsilon(0.01));

  CHECK(covering_radius({Vec{5.0}}, Box({0.0}, {10.0})) == doctest::Approx(5.0).epsilon(0.01));

  CHECK_THROWS_AS(covering_radius({}, Box({0.0}, {1.0})), EmptySet);
}

TEST_CASE("lipschitz_bound_check: zero shift is free, eps-dual shifts bounded") {
  const double R = 1000.0;
  const auto c = comb_unit(fib_patch(2.0 * R));
  const auto gamma = autocorrelation(c, R);
  const auto dual = dual_basis(fibonacci_scheme());
  const auto W = WindowUnion::interval(0.0, 1.0);
  const auto diffW = difference_window(W);
  const auto patch = model_set(fibonacci_scheme(), W, Box::centered(400.0, 1));

  const auto eps_set = eps_dual_characters(dual, diffW, 0.5, Box({-30.0}, {30.0}), patch);
  REQUIRE(eps_set.frequencies.size() >= 3);

  // psi: a few strong Bragg candidates.
  std::vector<Vec> psis;
  for (const auto& [k, w] :
       bragg_candidates(dual, Box({0.0}, {5.0}), Box({-1.0}, {1.0})))
    psis.push_back(k);
  REQUIRE(psis.size() >= 2);

  const auto seq = VanHoveSequence(1, {125.0, 250.0, 500.0, 1000.0});
  const auto rep = lipschitz_bound_check(c, gamma, eps_set, psis, seq, R);
  CHECK(rep.violations == 0);
  CHECK(rep.C_est > 0.0);

  // chi = 0 rows have exactly zero difference.
  for (const auto& row : rep.table)
    if (euclid_norm(row.chi) == 0.0) CHECK(row.difference == 0.0);
}

TEST_CASE("lipschitz_bound_check: random frequencies are not almost-periods (negative control)") {
  const double R = 1000.0;
  const auto c = comb_unit(fib_patch(2.0 * R));
  const auto gamma = autocorrelation(c, R);
  const auto dual = dual_basis(fibonacci_scheme());

  EpsDualSet fake;
  fake.eps = 0.1;
  Xorshift64Star rng(77);
  for (int i = 0; i < 8; ++i)
    fake.frequencies.push_back({Vec{0.21 + 3.0 * rng.next_unit()}, IntVec{0, 0}});

  std::vector<Vec> psis;
  for (const auto& [k, w] : bragg_candidates(dual, Box({0.0}, {5.0}), Box({-1.0}, {1.0})))
    psis.push_back(k);

  const auto seq = VanHoveSequence(1, {125.0, 250.0, 500.0, 1000.0});
  const auto rep = lipschitz_bound_check(c, gamma, fake, psis, seq, R);
  CHECK(rep.violations > 0);
}

TEST_CASE("continuous_residual: pure point comb decays, zero comb is zero") {
  const auto c = comb_unit(fib_patch(4000.0));
  const auto dual = dual_basis(fibonacci_scheme());
  const auto peaks_all = bragg_candidates(dual, Box({0.0}, {3.0}), Box({-30.0}, {30.0}));
  std::vector<Vec> peaks;
  for (const auto& [k, w] : peaks_all) peaks.push_back(k);

  std::vector<Vec> grid;
  for (int i = 0; i < 400; ++i) grid.push_back({0.05 + 2.9 * i / 400.0});

  auto level = [](const std::vector<ResidualBin>& bins) {
    double s = 0.0;
    int n = 0;
    for (const auto& b : bins)
      if (b.count > 0) {
        s += b.level * b.count;
        n += b.count;
      }
    return s / n;
  };
  const auto l1 = level(continuous_residual(c, grid, 2000.0, peaks, 0.01));
  const auto l2 = level(continuous_residual(c, grid, 4000.0, peaks, 0.01));
  CHECK(l1 >= 1.5 * l2);

  const auto zero = comb_bernoulli(fib_patch(500.0), 0.0, 1);
  for (const auto& b : continuous_residual(zero, grid, 500.0, peaks, 0.01))
    CHECK(b.level == 0.0);
}
