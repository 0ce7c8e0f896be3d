#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "banditlab/simulator.hpp"
#include "banditlab/trace.hpp"

namespace banditlab {

struct CsvMetadata {
  std::string preset;
  std::uint64_t master_seed = 0;
};

struct PolicyTraces {
  std::string policy;
  std::vector<EpisodeTrace> traces;  // run order
};

// Shortest round-trip decimal rendering; the reason identical runs produce
// byte-identical files.
std::string format_number(double v);

// Header: one metadata comment line (seed, generator identity, version),
// then `preset,policy,round,mean_regret,stderr,runs`.
void write_aggregate_csv(const std::vector<AggregateCurve>& curves,
                         const CsvMetadata& meta, const std::filesystem::path& path);

// Long per-run format `preset,policy,run,round,cum_reward,cum_pseudo_regret`.
void write_runs_csv(const std::vector<PolicyTraces>& runs, const CsvMetadata& meta,
                    const std::filesystem::path& path);

}  // namespace banditlab
