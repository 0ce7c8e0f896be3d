#include "banditlab/runner.hpp"

#include "banditlab/csv.hpp"
#include "banditlab/svg.hpp"

namespace banditlab {

RunArtifacts run_and_write(const ExperimentConfig& config) {
  RunArtifacts artifacts;
  artifacts.result = run_experiment(config, /*keep_traces=*/true);

  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  artifacts.aggregate_csv = dir / "aggregate.csv";
  artifacts.runs_csv = dir / "runs.csv";
  artifacts.svg = dir / "regret.svg";

  const CsvMetadata meta{config.preset_name, config.master_seed};
  write_aggregate_csv(artifacts.result.curves, meta, artifacts.aggregate_csv);

  std::vector<PolicyTraces> runs;
  runs.reserve(config.policies.size());
  for (std::size_t i = 0; i < config.policies.size(); ++i) {
    runs.push_back({config.policies[i].id, std::move(artifacts.result.traces[i])});
  }
  write_runs_csv(runs, meta, artifacts.runs_csv);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    artifacts.result.traces[i] = std::move(runs[i].traces);
  }

  write_regret_svg(artifacts.result.curves, artifacts.svg, config.log_x);
  return artifacts;
}

}  // namespace banditlab
