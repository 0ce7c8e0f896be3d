#pragma once

#include <filesystem>

#include "banditlab/config.hpp"
#include "banditlab/simulator.hpp"

namespace banditlab {

struct RunArtifacts {
  std::filesystem::path aggregate_csv;
  std::filesystem::path runs_csv;
  std::filesystem::path svg;
  ExperimentResult result;
};

// Runs the experiment and writes aggregate.csv, runs.csv and regret.svg
// into config.out_dir (created if missing). Identical configs produce
// byte-identical files.
RunArtifacts run_and_write(const ExperimentConfig& config);

}  // namespace banditlab
