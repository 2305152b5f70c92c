#pragma once

#include <cmath>
#include <memory>

#include "modelcomb/comb.hpp"
#include "modelcomb/pointset.hpp"
#include "modelcomb/scheme.hpp"
#include "modelcomb/window.hpp"

namespace testutil {

inline double tau() { return (1.0 + std::sqrt(5.0)) / 2.0; }

inline modelcomb::SchemeBasis fibonacci_scheme() {
  const double t = tau();
  return modelcomb::SchemeBasis(1, 1, {1.0, t, 1.0, 1.0 - t}, "fibonacci");
}

inline modelcomb::SchemeBasis identity_scheme() {
  return modelcomb::SchemeBasis(1, 1, {1.0, 0.0, 0.0, 1.0}, "identity");
}

inline modelcomb::SchemeBasis silver_mean_scheme() {
  const double s = std::sqrt(2.0);
  return modelcomb::SchemeBasis(1, 1, {1.0, 1.0 + s, 1.0, 1.0 - s}, "silver_mean");
}

// d=2, m=2 product of two Fibonacci chains; coordinates ordered
// (x1, x2, u1, u2) for integer columns (m1, n1, m2, n2).
inline modelcomb::SchemeBasis box2d_scheme() {
  const double t = tau();
  return modelcomb::SchemeBasis(2, 2,
                                {1.0, t, 0.0, 0.0,        //
                                 0.0, 0.0, 1.0, t,        //
                                 1.0, 1.0 - t, 0.0, 0.0,  //
                                 0.0, 0.0, 1.0, 1.0 - t},
                                "box2d");
}

inline std::shared_ptr<const modelcomb::PointSetPatch> fib_patch(double radius,
                                                                 double wlo = 0.0,
                                                                 double whi = 1.0) {
  return std::make_shared<modelcomb::PointSetPatch>(
      modelcomb::model_set(fibonacci_scheme(), modelcomb::WindowUnion::interval(wlo, whi),
                           modelcomb::Box::centered(radius, 1)));
}

}  // namespace testutil
