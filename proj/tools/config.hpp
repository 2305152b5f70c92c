#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modelcomb/comb.hpp"
#include "modelcomb/geometry.hpp"
#include "modelcomb/scheme.hpp"
#include "modelcomb/window.hpp"

namespace modelcomb::cli {

struct CombSpec {
  enum class Model { unit, internal_function, bernoulli };
  Model model = Model::unit;
  InternalWeight g;
  double p = 0.5;
  std::optional<std::uint64_t> seed;  // falls back to the experiment seed
};

struct Thresholds {
  double eta = 1e-9;
  std::vector<double> eps_list{0.5};
  double intensity_floor_factor = 10.0;
  std::uint64_t candidate_budget = 100000000ull;
  double bragg_internal_cutoff = 2.0;
  double guard_internal_cutoff = 30.0;
  double freq_lo = 0.0, freq_hi = 20.0;
  double inner_radius_factor = 1.0 / 16.0;  // inner_radius = factor * R
  int residual_grid = 400;
  double residual_guard = 0.01;
  double defect_tol = 0.0;  // 0: library default
  double null_tol = 0.0;
};

struct ExperimentConfig {
  std::string name;
  SchemeBasis scheme;
  WindowUnion window;
  double region_radius = 0.0;
  double autocorr_radius = 0.0;
  std::vector<double> radii;  // van Hove radii
  CombSpec comb;
  std::vector<std::string> tasks;
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  Thresholds thresholds;
  bool fixtures_only = false;
  double fixture_radius = 10000.0;
};

/// Parses and validates a JSON experiment config. Matrix entries may be
/// numbers or expressions over the symbolic constants "tau" and "sqrt2"
/// (e.g. "1-tau", "2*sqrt2+1"), expanded to doubles at parse time.
/// Throws ConfigError naming the offending field.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

/// Expression evaluator for matrix/window entries ("tau", "sqrt2",
/// "1-tau", "0.5*sqrt2", ...).
double parse_symbolic(const std::string& text);

struct ExampleRow {
  std::string name;
  int d, m;
  std::string window;
  std::string note;
};
std::vector<ExampleRow> bundled_examples();

/// Built-in scheme presets: fibonacci, silver_mean, box2d, identity.
SchemeBasis preset_scheme(const std::string& name);
WindowUnion preset_window(const std::string& name, double eta);

}  // namespace modelcomb::cli
