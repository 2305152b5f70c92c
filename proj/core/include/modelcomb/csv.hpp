#pragma once

#include <string>
#include <vector>

#include "modelcomb/autocorr.hpp"
#include "modelcomb/coeffmap.hpp"
#include "modelcomb/comb.hpp"
#include "modelcomb/diffraction.hpp"

namespace modelcomb {

/// Doubles are printed with %.17g so identical runs produce byte-identical
/// files.
std::string format_double(double v);

void write_patch_csv(const std::string& path, const WeightedComb& comb);
void write_coeffs_csv(const std::string& path, const SchemeBasis& scheme,
                      const std::vector<std::pair<IntVec, Complex>>& coeffs);
void write_coeffmap_csv(const std::string& path, const CoefficientMap& map);
void write_nullmean_csv(const std::string& path, const VanHoveSequence& seq,
                        const std::vector<double>& values);
void write_spectrum_csv(const std::string& path, const Spectrum& spectrum);

}  // namespace modelcomb
