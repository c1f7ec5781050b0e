#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "radarrm/experiment.hpp"
#include "radarrm/model.hpp"

namespace radarrm {

/// The built-in three-task demonstration instance: two interference-prone
/// tasks with alternative configurations, one clear task, a jammer active
/// 60% of the time.
std::vector<Task> example_tasks();
InterferencePattern example_pattern();

/// Run the built-in instance, print the upgrade log and the resulting
/// utilities, and verify them against their known values.
/// Returns 0 on match, 1 with a diff otherwise.
int cmd_example(std::ostream& out);

/// Generate one scenario from (config, seed), evaluate all four strategies,
/// and write per-strategy allocation/schedule JSON plus a per-run CSV and a
/// metadata record into out_dir. Returns 0 on success.
int cmd_run(const ExperimentConfig& config, std::uint64_t seed,
            const std::filesystem::path& out_dir, std::ostream& out);

/// Monte-Carlo sweep over config.n_runs scenarios: writes runs.csv,
/// summary.csv and metadata.json into out_dir and prints the summary table.
int cmd_montecarlo(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                   int workers, std::ostream& out);

}  // namespace radarrm
