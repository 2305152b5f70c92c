#include "modelcomb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace modelcomb {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void write_header(std::ofstream& out, const std::string& prefix, int count,
                  bool trailing_comma = true) {
  for (int i = 0; i < count; ++i) {
    out << prefix << i;
    if (i + 1 < count || trailing_comma) out << ",";
  }
}

}  // namespace

void write_patch_csv(const std::string& path, const WeightedComb& comb) {
  auto out = open_out(path);
  const SchemeBasis& scheme = comb.scheme();
  write_header(out, "z", scheme.n());
  write_header(out, "x", scheme.d);
  write_header(out, "u", scheme.m);
  out << "weight_re,weight_im\n";
  for (size_t i = 0; i < comb.size(); ++i) {
    const auto& z = comb.patch->points[i];
    const auto e = embed(scheme, z);
    for (int k = 0; k < scheme.n(); ++k) out << z[k] << ",";
    for (double x : e.physical) out << format_double(x) << ",";
    for (double u : e.internal) out << format_double(u) << ",";
    out << format_double(comb.weights[i].real()) << "," << format_double(comb.weights[i].imag())
        << "\n";
  }
}

void write_coeffs_csv(const std::string& path, const SchemeBasis& scheme,
                      const std::vector<std::pair<IntVec, Complex>>& coeffs) {
  auto out = open_out(path);
  write_header(out, "z", scheme.n());
  write_header(out, "x", scheme.d);
  write_header(out, "u", scheme.m);
  out << "re,im,abs\n";
  for (const auto& [z, v] : coeffs) {
    const auto e = embed(scheme, z);
    for (int k = 0; k < scheme.n(); ++k) out << z[k] << ",";
    for (double x : e.physical) out << format_double(x) << ",";
    for (double u : e.internal) out << format_double(u) << ",";
    out << format_double(v.real()) << "," << format_double(v.imag()) << ","
        << format_double(std::abs(v)) << "\n";
  }
}

void write_coeffmap_csv(const std::string& path, const CoefficientMap& map) {
  auto out = open_out(path);
  write_header(out, "x", map.d);
  out << "re,im,abs\n";
  for (const auto& [z, v] : map.entries) {
    for (double x : z) out << format_double(x) << ",";
    out << format_double(v.real()) << "," << format_double(v.imag()) << ","
        << format_double(std::abs(v)) << "\n";
  }
}

void write_nullmean_csv(const std::string& path, const VanHoveSequence& seq,
                        const std::vector<double>& values) {
  auto out = open_out(path);
  out << "n,R_n,value\n";
  for (size_t n = 0; n < seq.size() && n < values.size(); ++n)
    out << n << "," << format_double(seq.radii[n]) << "," << format_double(values[n]) << "\n";
}

void write_spectrum_csv(const std::string& path, const Spectrum& spectrum) {
  auto out = open_out(path);
  int d = spectrum.entries.empty() ? 1 : static_cast<int>(spectrum.entries.front().frequency.size());
  write_header(out, "k", d);
  out << "intensity,method,R\n";
  for (const auto& e : spectrum.entries) {
    for (double k : e.frequency) out << format_double(k) << ",";
    out << format_double(e.intensity) << "," << spectrum.method << ","
        << format_double(spectrum.R) << "\n";
  }
}

}  // namespace modelcomb
