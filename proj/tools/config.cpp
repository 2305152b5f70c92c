#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modelcomb/errors.hpp"

namespace modelcomb::cli {

using nlohmann::json;

namespace {

double symbolic_token(const std::string& tok) {
  if (tok == "tau") return (1.0 + std::sqrt(5.0)) / 2.0;
  if (tok == "sqrt2") return std::sqrt(2.0);
  throw ConfigError("unknown symbolic constant '" + tok + "'");
}

}  // namespace

// Grammar: expr := term (('+'|'-') term)*, term := number ['*' ident] | ident.
double parse_symbolic(const std::string& text) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_term = [&]() -> double {
    skip();
    if (pos >= text.size()) throw ConfigError("empty term in expression '" + text + "'");
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
      return symbolic_token(text.substr(start, pos - start));
    }
    size_t consumed = 0;
    double value;
    try {
      value = std::stod(text.substr(pos), &consumed);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse number in expression '" + text + "'");
    }
    pos += consumed;
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      size_t start = pos;
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
      value *= symbolic_token(text.substr(start, pos - start));
    }
    return value;
  };

  double value = parse_term();
  skip();
  while (pos < text.size()) {
    const char op = text[pos];
    if (op != '+' && op != '-')
      throw ConfigError("unexpected character '" + std::string(1, op) + "' in expression '" +
                        text + "'");
    ++pos;
    const double rhs = parse_term();
    value = op == '+' ? value + rhs : value - rhs;
    skip();
  }
  return value;
}

namespace {

double number_or_symbolic(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_symbolic(v.get<std::string>());
  throw ConfigError(field + ": entries must be numbers or symbolic strings");
}

Vec vec_field(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field + ": expected an array");
  Vec out;
  for (const auto& e : v) out.push_back(number_or_symbolic(e, field));
  return out;
}

}  // namespace

SchemeBasis preset_scheme(const std::string& name) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = std::sqrt(2.0);
  if (name == "fibonacci") return SchemeBasis(1, 1, {1.0, t, 1.0, 1.0 - t}, name);
  if (name == "silver_mean") return SchemeBasis(1, 1, {1.0, 1.0 + s, 1.0, 1.0 - s}, name);
  if (name == "identity") return SchemeBasis(1, 1, {1.0, 0.0, 0.0, 1.0}, name);
  if (name == "box2d")
    return SchemeBasis(2, 2,
                       {1.0, t, 0.0, 0.0,        //
                        0.0, 0.0, 1.0, t,        //
                        1.0, 1.0 - t, 0.0, 0.0,  //
                        0.0, 0.0, 1.0, 1.0 - t},
                       name);
  throw ConfigError("scheme: unknown preset '" + name + "'");
}

WindowUnion preset_window(const std::string& name, double eta) {
  if (name == "fibonacci" || name == "silver_mean" || name == "identity")
    return WindowUnion::interval(0.0, 1.0, eta);
  if (name == "box2d")
    return WindowUnion::from_boxes({Box({0.0, 0.0}, {1.0, 1.0})}, eta);
  throw ConfigError("window: no default for scheme '" + name + "'");
}

std::vector<ExampleRow> bundled_examples() {
  return {
      {"fibonacci", 1, 1, "[0,1]", "golden-ratio chain (tau)"},
      {"silver_mean", 1, 1, "[0,1]", "silver-mean chain (sqrt2)"},
      {"box2d", 2, 2, "[0,1]^2", "product of two golden chains (d=2, m=2)"},
      {"fixtures", 1, 0, "-", "counterexample measures on explicit positions"},
  };
}

ExperimentConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }

  ExperimentConfig cfg;
  cfg.name = root.value("name", "experiment");

  if (root.contains("thresholds")) {
    const auto& t = root["thresholds"];
    Thresholds& th = cfg.thresholds;
    th.eta = t.value("eta", th.eta);
    if (t.contains("eps_list")) {
      th.eps_list.clear();
      for (const auto& e : t["eps_list"]) th.eps_list.push_back(e.get<double>());
      for (double e : th.eps_list)
        if (e <= 0.0) throw ConfigError("thresholds.eps_list: entries must be positive");
    }
    th.intensity_floor_factor = t.value("intensity_floor_factor", th.intensity_floor_factor);
    th.candidate_budget = t.value("candidate_budget", th.candidate_budget);
    th.bragg_internal_cutoff = t.value("bragg_internal_cutoff", th.bragg_internal_cutoff);
    th.guard_internal_cutoff = t.value("guard_internal_cutoff", th.guard_internal_cutoff);
    th.freq_lo = t.value("freq_lo", th.freq_lo);
    th.freq_hi = t.value("freq_hi", th.freq_hi);
    th.inner_radius_factor = t.value("inner_radius_factor", th.inner_radius_factor);
    th.residual_grid = t.value("residual_grid", th.residual_grid);
    th.residual_guard = t.value("residual_guard", th.residual_guard);
    th.defect_tol = t.value("defect_tol", th.defect_tol);
    th.null_tol = t.value("null_tol", th.null_tol);
  }

  if (!root.contains("tasks") || !root["tasks"].is_array() || root["tasks"].empty())
    throw ConfigError("tasks: a nonempty task list is required");
  for (const auto& t : root["tasks"]) {
    const std::string task = t.get<std::string>();
    if (task != "points" && task != "autocorr" && task != "decompose" && task != "diffract" &&
        task != "verify" && task != "fixtures")
      throw ConfigError("tasks: unknown task '" + task + "'");
    cfg.tasks.push_back(task);
  }

  cfg.out_dir = root.value("out_dir", cfg.out_dir);
  cfg.seed = root.value("seed", cfg.seed);
  cfg.fixture_radius = root.value("fixture_radius", cfg.fixture_radius);

  const bool only_fixtures =
      cfg.tasks.size() == 1 && cfg.tasks.front() == "fixtures" && !root.contains("scheme");
  cfg.fixtures_only = only_fixtures;
  if (only_fixtures) return cfg;

  // Scheme block.
  if (!root.contains("scheme")) throw ConfigError("scheme: block is required");
  const auto& s = root["scheme"];
  if (s.is_string()) {
    cfg.scheme = preset_scheme(s.get<std::string>());
  } else {
    const int d = s.value("d", 0);
    const int m = s.value("m", 0);
    if (s.contains("preset")) {
      cfg.scheme = preset_scheme(s["preset"].get<std::string>());
    } else {
      if (d < 1 || d > 2 || m < 1 || m > 2)
        throw ConfigError("scheme.d/scheme.m: dimensions must be 1 or 2");
      if (!s.contains("matrix")) throw ConfigError("scheme.matrix: row-major matrix is required");
      std::vector<double> entries;
      for (const auto& row : s["matrix"]) {
        if (!row.is_array()) throw ConfigError("scheme.matrix: expected an array of rows");
        for (const auto& e : row) entries.push_back(number_or_symbolic(e, "scheme.matrix"));
      }
      if (entries.size() != static_cast<size_t>(d + m) * (d + m))
        throw ConfigError("scheme.matrix: expected a (d+m)x(d+m) matrix");
      try {
        cfg.scheme = SchemeBasis(d, m, std::move(entries), s.value("name", "custom"));
      } catch (const BasisError& e) {
        throw ConfigError(std::string("scheme.matrix: ") + e.what());
      }
    }
  }

  // Window block.
  if (root.contains("window")) {
    const auto& w = root["window"];
    std::vector<Box> boxes;
    if (!w.contains("boxes")) throw ConfigError("window.boxes: box list is required");
    for (const auto& b : w["boxes"]) {
      Vec lo = vec_field(b.at("lo"), "window.boxes.lo");
      Vec hi = vec_field(b.at("hi"), "window.boxes.hi");
      if (lo.size() != static_cast<size_t>(cfg.scheme.m) || hi.size() != lo.size())
        throw ConfigError("window.boxes: lo/hi must have length m");
      std::vector<bool> lo_c(lo.size(), true), hi_c(lo.size(), true);
      if (b.contains("lo_open"))
        for (size_t i = 0; i < lo.size(); ++i) lo_c[i] = !b["lo_open"][i].get<bool>();
      if (b.contains("hi_open"))
        for (size_t i = 0; i < lo.size(); ++i) hi_c[i] = !b["hi_open"][i].get<bool>();
      boxes.emplace_back(std::move(lo), std::move(hi), std::move(lo_c), std::move(hi_c));
    }
    try {
      cfg.window = WindowUnion::from_boxes(std::move(boxes), cfg.thresholds.eta);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("window.boxes: ") + e.what());
    }
  } else {
    cfg.window = preset_window(cfg.scheme.name, cfg.thresholds.eta);
  }

  // Radii.
  if (root.contains("radii")) {
    const auto& r = root["radii"];
    if (r.is_array()) {
      for (const auto& v : r) cfg.radii.push_back(v.get<double>());
    } else {
      const double first = r.value("first", 250.0);
      const int count = r.value("count", 6);
      const double factor = r.value("factor", 2.0);
      double x = first;
      for (int i = 0; i < count; ++i) {
        cfg.radii.push_back(x);
        x *= factor;
      }
    }
  } else {
    cfg.radii = {250.0, 500.0, 1000.0, 2000.0, 4000.0, 8000.0};
  }
  if (cfg.radii.size() < 3) throw ConfigError("radii: need at least 3 van Hove radii");
  for (size_t i = 0; i + 1 < cfg.radii.size(); ++i)
    if (!(cfg.radii[i] < cfg.radii[i + 1]))
      throw ConfigError("radii: must be strictly increasing");
  if (cfg.radii.front() <= 0.0) throw ConfigError("radii: must be positive");

  cfg.autocorr_radius = root.value("autocorr_radius", cfg.radii.front());
  cfg.region_radius = root.value("region_radius", 2.0 * cfg.autocorr_radius);
  if (cfg.region_radius < cfg.autocorr_radius)
    throw ConfigError("region_radius: must be >= autocorr_radius");

  // Comb block.
  if (root.contains("comb")) {
    const auto& c = root["comb"];
    const std::string model = c.value("model", "unit");
    if (model == "unit") {
      cfg.comb.model = CombSpec::Model::unit;
    } else if (model == "bernoulli") {
      cfg.comb.model = CombSpec::Model::bernoulli;
      cfg.comb.p = c.value("p", 0.5);
      if (cfg.comb.p < 0.0 || cfg.comb.p > 1.0)
        throw ConfigError("comb.p: probability must be in [0,1]");
      if (c.contains("seed")) cfg.comb.seed = c["seed"].get<std::uint64_t>();
    } else if (model == "internal") {
      cfg.comb.model = CombSpec::Model::internal_function;
      const auto& g = c.at("g");
      const std::string kind = g.value("kind", "indicator");
      if (kind == "indicator") {
        cfg.comb.g = InternalWeight::indicator();
      } else if (kind == "tent") {
        cfg.comb.g = InternalWeight::tent(vec_field(g.at("center"), "comb.g.center"),
                                          vec_field(g.at("halfwidth"), "comb.g.halfwidth"));
      } else if (kind == "phase") {
        cfg.comb.g = InternalWeight::phase(vec_field(g.at("theta"), "comb.g.theta"));
      } else {
        throw ConfigError("comb.g.kind: unknown internal weight '" + kind + "'");
      }
    } else {
      throw ConfigError("comb.model: unknown model '" + model + "'");
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace modelcomb::cli
