#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "radarrm/commands.hpp"

namespace {

radarrm::ExperimentConfig load_or_default(const std::string& path) {
  if (path.empty()) return radarrm::ExperimentConfig{};
  return radarrm::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-RAM style radar resource manager with interference-aware allocation"};
  app.require_subcommand(1);

  CLI::App* example = app.add_subcommand("example", "run the built-in three-task instance");

  std::string run_config;
  std::string run_out = "out";
  std::uint64_t run_seed = 1;
  CLI::App* run = app.add_subcommand("run", "evaluate all four strategies on one scenario");
  run->add_option("--config", run_config, "experiment config JSON");
  run->add_option("--seed", run_seed, "scenario seed");
  run->add_option("--out", run_out, "output directory");

  std::string mc_config;
  std::string mc_out = "out";
  int mc_workers = 0;
  CLI::App* mc = app.add_subcommand("montecarlo", "Monte-Carlo strategy comparison");
  mc->add_option("--config", mc_config, "experiment config JSON");
  mc->add_option("--out", mc_out, "output directory");
  mc->add_option("--workers", mc_workers, "parallel scenario workers (default: from config)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (example->parsed()) return radarrm::cmd_example(std::cout);
    if (run->parsed()) {
      const radarrm::ExperimentConfig config = load_or_default(run_config);
      return radarrm::cmd_run(config, run_seed, run_out, std::cout);
    }
    if (mc->parsed()) {
      const radarrm::ExperimentConfig config = load_or_default(mc_config);
      const int workers = mc_workers > 0 ? mc_workers : config.workers;
      return radarrm::cmd_montecarlo(config, mc_out, workers, std::cout);
    }
  } catch (const radarrm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
