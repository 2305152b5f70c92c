#include <cmath>
#include <set>

#include "doctest.h"
#include "modelcomb/comb.hpp"
#include "modelcomb/errors.hpp"
#include "modelcomb/pointset.hpp"
#include "modelcomb/prng.hpp"
#include "common.hpp"

using namespace modelcomb;
using testutil::fib_patch;
using testutil::fibonacci_scheme;
using testutil::identity_scheme;
using testutil::tau;

TEST_CASE("model_set: integer lattice") {
  const auto patch = model_set(identity_scheme(), WindowUnion::interval(-0.5, 0.5),
                               Box({-2.5}, {2.5}));
  REQUIRE(patch.size() == 5);
  std::set<double> xs;
  for (const auto& z : patch.points) xs.insert(physical_part(patch.scheme, z)[0]);
  CHECK(xs == std::set<double>{-2.0, -1.0, 0.0, 1.0, 2.0});
  CHECK(patch.boundary_ambiguous_count == 0);
}

TEST_CASE("model_set: Fibonacci example") {
  const auto patch = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                               Box({-0.1}, {2.7}));
  REQUIRE(patch.size() == 3);
  CHECK(physical_part(patch.scheme, patch.points[0])[0] == doctest::Approx(0.0));
  CHECK(physical_part(patch.scheme, patch.points[1])[0] == doctest::Approx(1.0));
  CHECK(physical_part(patch.scheme, patch.points[2])[0] == doctest::Approx(1.0 + tau()));
}

TEST_CASE("model_set: degenerate window") {
  const auto patch = model_set(fibonacci_scheme(), WindowUnion::interval(0.3, 0.3),
                               Box({-10.0}, {10.0}));
  CHECK(patch.size() <= 1);  // a single-point window catches at most measure-zero hits
}

TEST_CASE("model_set: monotone in the window") {
  const auto small = model_set(fibonacci_scheme(), WindowUnion::interval(0.1, 0.6),
                               Box({-40.0}, {40.0}));
  const auto large = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                               Box({-40.0}, {40.0}));
  const std::set<IntVec> big(large.points.begin(), large.points.end());
  for (const auto& z : small.points) CHECK(big.count(z) == 1);
  CHECK(small.size() < large.size());
}

TEST_CASE("model_set: support exactness at patch scale") {
  const auto patch = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                               Box({-200.0}, {200.0}));
  for (const auto& z : patch.points) CHECK(patch.window.contains(star(patch.scheme, z)));
  CHECK(patch.boundary_ambiguous_count == 0);
}

TEST_CASE("delone_radii") {
  const auto zpatch = model_set(identity_scheme(), WindowUnion::interval(-0.5, 0.5),
                                Box({-2.5}, {2.5}));
  const auto r = delone_radii(zpatch);
  CHECK(r.packing == doctest::Approx(0.5));
  CHECK(r.covering == doctest::Approx(0.5).epsilon(0.02));

  const auto fib = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                             Box({-50.0}, {50.0}));
  const auto rf = delone_radii(fib);
  CHECK(rf.packing > 0.4);
  CHECK(rf.covering < 2.7);
  // Brute-force gap scan oracle for the packing radius.
  double min_gap = 1e300;
  for (size_t i = 0; i < fib.size(); ++i)
    for (size_t j = i + 1; j < fib.size(); ++j)
      min_gap = std::min(min_gap, std::fabs(physical_part(fib.scheme, fib.points[i])[0] -
                                            physical_part(fib.scheme, fib.points[j])[0]));
  CHECK(rf.packing == doctest::Approx(min_gap / 2.0));
}

TEST_CASE("delone_radii: two points") {
  auto patch = model_set(identity_scheme(), WindowUnion::interval(-0.25, 0.25), Box({0.0}, {5.0}));
  // {0, 5} only: thin out the window so only multiples of 5 remain? Use a
  // custom two-point patch instead.
  PointSetPatch two;
  two.scheme = identity_scheme();
  two.window = WindowUnion::interval(-0.5, 0.5);
  two.region = Box({0.0}, {5.0});
  two.points = {{0, 0}, {5, 0}};
  const auto r = delone_radii(two);
  CHECK(r.packing == doctest::Approx(2.5));
  CHECK(r.covering == doctest::Approx(2.5).epsilon(0.01));
}

TEST_CASE("delone_radii: too few points") {
  PointSetPatch one;
  one.scheme = identity_scheme();
  one.window = WindowUnion::interval(-0.5, 0.5);
  one.region = Box({0.0}, {1.0});
  one.points = {{0, 0}};
  CHECK_THROWS_AS(delone_radii(one), TooFewPoints);
}

TEST_CASE("meyer_defect") {
  const auto zpatch = model_set(identity_scheme(), WindowUnion::interval(-0.5, 0.5),
                                Box({-10.0}, {10.0}));
  CHECK(meyer_defect(zpatch) == doctest::Approx(1.0));

  const auto fib1 = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                              Box({-60.0}, {60.0}));
  const auto fib2 = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                              Box({-120.0}, {120.0}));
  const double d1 = meyer_defect(fib1);
  const double d2 = meyer_defect(fib2);
  CHECK(d1 > 0.0);
  CHECK(std::fabs(d1 - d2) < 1e-9);  // stable when the region doubles
}

TEST_CASE("comb_from_internal_weight") {
  const auto patch = fib_patch(30.0);
  const auto unit = comb_from_internal_weight(patch, InternalWeight::indicator());
  for (const auto& w : unit.weights) CHECK(w == Complex(1.0, 0.0));

  // Point (1,1) has star 2 - tau ~ 0.382.
  const auto tent = comb_from_internal_weight(patch, InternalWeight::tent({0.5}, {0.5}));
  bool found = false;
  for (size_t i = 0; i < patch->size(); ++i) {
    if (patch->points[i] == IntVec{1, 1}) {
      found = true;
      const double s = star(patch->scheme, patch->points[i])[0];
      CHECK(tent.weights[i].real() == doctest::Approx(1.0 - std::fabs(s - 0.5) / 0.5));
      CHECK(tent.weights[i].real() == doctest::Approx(0.764).epsilon(1e-3));
    }
  }
  CHECK(found);

  // Unit-circle weight at internal coordinate 0.25.
  const auto phase = InternalWeight::phase({1.0});
  const Complex w = phase.eval({0.25});
  CHECK(w.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.imag() == doctest::Approx(1.0));
}

TEST_CASE("comb_bernoulli") {
  const auto patch = fib_patch(400.0);
  const auto zero = comb_bernoulli(patch, 0.0, 5);
  for (const auto& w : zero.weights) CHECK(w == Complex(0.0, 0.0));
  const auto one = comb_bernoulli(patch, 1.0, 5);
  for (const auto& w : one.weights) CHECK(w == Complex(1.0, 0.0));

  const auto half = comb_bernoulli(patch, 0.5, 42);
  double mean = 0.0;
  for (const auto& w : half.weights) mean += w.real();
  mean /= static_cast<double>(half.size());
  CHECK(std::fabs(mean - 0.5) < 3.0 / std::sqrt(static_cast<double>(half.size())));

  // Reproducible across runs.
  const auto again = comb_bernoulli(patch, 0.5, 42);
  CHECK(again.weights == half.weights);
}

TEST_CASE("conjugation algebra") {
  const auto patch = fib_patch(40.0);
  std::vector<Complex> ws(patch->size());
  Xorshift64Star rng(11);
  for (auto& w : ws) w = Complex(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
  const auto c = comb_custom(patch, ws);

  const auto cc = conjugate(conjugate(c));
  CHECK(cc.weights == c.weights);  // involution, exact

  const auto re = re_part(c);
  const auto im = im_part(c);
  for (size_t i = 0; i < c.size(); ++i) {
    CHECK(im.weights[i].imag() == 0.0);
    CHECK(re.weights[i].real() + 0.0 == c.weights[i].real());
    // Exact recomposition c = re + i*im.
    CHECK(re.weights[i] + Complex(0.0, 1.0) * im.weights[i] == c.weights[i]);
    // Conjugation is an isometry of weight magnitudes.
    CHECK(std::abs(conjugate(c).weights[i]) == std::abs(c.weights[i]));
  }

  // 3+4i splits into re 3, im 4.
  auto single = comb_custom(patch, std::vector<Complex>(patch->size(), Complex(3.0, 4.0)));
  CHECK(re_part(single).weights[0] == Complex(3.0, 0.0));
  CHECK(im_part(single).weights[0] == Complex(4.0, 0.0));
}

TEST_CASE("translation_bound") {
  const auto zpatch = std::make_shared<PointSetPatch>(model_set(
      identity_scheme(), WindowUnion::interval(-0.5, 0.5), Box({-10.5}, {10.5})));
  const auto unit = comb_unit(zpatch);
  CHECK(translation_bound(unit, 2.5, 0.1) == doctest::Approx(6.0));

  PointSetPatch empty;
  empty.scheme = identity_scheme();
  empty.window = WindowUnion::interval(0.0, 0.5);
  empty.region = Box({-10.0}, {10.0});
  const auto none = comb_unit(std::make_shared<PointSetPatch>(empty));
  CHECK(translation_bound(none, 2.0, 0.5) == 0.0);

  const auto fpatch = fib_patch(60.0);
  const auto full = comb_unit(fpatch);
  const auto bern = comb_bernoulli(fpatch, 0.5, 9);
  CHECK(translation_bound(bern, 10.0, 0.5) <= translation_bound(full, 10.0, 0.5));
}

TEST_CASE("dominating_comb") {
  const auto lw = model_set(fibonacci_scheme(), WindowUnion::interval(0.0, 1.0),
                            Box({-60.0}, {60.0}));
  const auto nu = dominating_comb(lw, WindowUnion::interval(-0.5, 1.5));
  // Every Lambda(W) point is dominated with weight exactly 1 on W.
  std::set<IntVec> support(nu.patch->points.begin(), nu.patch->points.end());
  for (const auto& z : lw.points) CHECK(support.count(z) == 1);

  CHECK_THROWS_AS(dominating_comb(lw, WindowUnion::interval(0.0, 1.0)), MarginError);

  const auto nu2 = dominating_comb(lw, WindowUnion::interval(-0.25, 1.25));
  size_t j = 0;
  for (const auto& z : lw.points) {
    while (j < nu2.patch->size() && lex_less(nu2.patch->points[j], z)) ++j;
    REQUIRE(nu2.patch->points[j] == z);
    CHECK(nu2.weights[j].real() >= 1.0);
  }
}
