#include <cstdio>
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "config.hpp"
#include "modelcomb/errors.hpp"
#include "runner.hpp"

using namespace modelcomb;
using namespace modelcomb::cli;

int main(int argc, char** argv) {
  CLI::App app{"model set construction, autocorrelation and diffraction toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_override;
  int threads = 1;
  std::uint64_t seed_override = 0;
  bool seed_set = false, svg = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "experiment config (JSON)")->required();
    cmd->add_option("--out", out_override, "output directory override");
    cmd->add_option("--threads", threads, "worker cap for parallel kernels")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed_override, "seed override")->each([&](const std::string&) {
      seed_set = true;
    });
    cmd->add_flag("--svg", svg, "emit SVG stick plots");
  };

  auto* run_cmd = app.add_subcommand("run", "run the tasks listed in a config");
  add_common(run_cmd);
  auto* verify_cmd =
      app.add_subcommand("verify", "run with tasks=[verify] regardless of the config's list");
  add_common(verify_cmd);
  auto* list_cmd = app.add_subcommand("list-examples", "print the bundled example schemes");

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    std::printf("%-12s %-3s %-3s %-10s %s\n", "name", "d", "m", "window", "note");
    for (const auto& row : bundled_examples())
      std::printf("%-12s %-3d %-3d %-10s %s\n", row.name.c_str(), row.d, row.m,
                  row.window.c_str(), row.note.c_str());
    return 0;
  }

  try {
    ExperimentConfig cfg = parse_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (seed_set) cfg.seed = seed_override;
    if (verify_cmd->parsed()) cfg.tasks = {"verify"};

    const auto result = run_experiment(cfg, threads, svg);
    for (const auto& line : result.task_log) std::cout << "TASK " << line << "\n";
    for (const auto& c : result.claims) std::cout << format_claim(c) << "\n";
    std::cout << "report: " << cfg.out_dir << "/verify_report.txt\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
