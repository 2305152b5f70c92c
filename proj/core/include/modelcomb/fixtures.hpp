#pragma once

#include "modelcomb/coeffmap.hpp"

namespace modelcomb {

/// delta_Z + delta_{sqrt(2) Z + 1/2} restricted to [-radius, radius]:
/// strongly almost periodic but with translation defect >= 1 for every
/// nonzero almost-period candidate.
CoefficientMap two_grid_measure(double radius);

/// delta_Z - sum_{n != 0} delta_{n - 1/n} restricted to [-radius, radius]:
/// null mean along growing boxes tends to 2, not 0 (atoms at coinciding
/// positions are merged, so the atom at 0 has weight -1).
CoefficientMap perturbed_grid_measure(double radius);

}  // namespace modelcomb
