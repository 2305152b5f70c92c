#pragma once

#include <string>

#include "modelcomb/diffraction.hpp"

namespace modelcomb::cli {

/// Stick plot of a 1D spectrum (frequency vs intensity).
void write_stick_plot(const std::string& path, const Spectrum& spectrum,
                      bool log_scale = false);

}  // namespace modelcomb::cli
