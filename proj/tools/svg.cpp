#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace modelcomb::cli {

void write_stick_plot(const std::string& path, const Spectrum& spectrum, bool log_scale) {
  const double width = 900, height = 360, mx = 50, my = 20;
  std::ofstream out(path, std::ios::binary);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!spectrum.entries.empty()) {
    double klo = spectrum.entries.front().frequency[0], khi = klo, imax = 0.0;
    for (const auto& e : spectrum.entries) {
      klo = std::min(klo, e.frequency[0]);
      khi = std::max(khi, e.frequency[0]);
      imax = std::max(imax, e.intensity);
    }
    const double span = std::max(khi - klo, 1e-12);
    const double ifloor = log_scale ? imax * 1e-8 : 0.0;
    auto sy = [&](double v) {
      if (log_scale) {
        const double t = std::log10(std::max(v, ifloor) / ifloor) / 8.0;
        return height - my - t * (height - 2 * my);
      }
      return height - my - (imax > 0 ? v / imax : 0.0) * (height - 2 * my);
    };
    for (const auto& e : spectrum.entries) {
      const double x = mx + (e.frequency[0] - klo) / span * (width - 2 * mx);
      out << "<line x1=\"" << x << "\" y1=\"" << height - my << "\" x2=\"" << x << "\" y2=\""
          << sy(e.intensity) << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }
    out << "<line x1=\"" << mx << "\" y1=\"" << height - my << "\" x2=\"" << width - mx
        << "\" y2=\"" << height - my << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << mx << "\" y=\"14\" font-size=\"12\">" << spectrum.method
        << " R=" << spectrum.R << " max=" << imax << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace modelcomb::cli
