#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "banditlab/policy.hpp"
#include "banditlab/schedule.hpp"

namespace banditlab {

struct PolicyRunSpec {
  std::string id;
  PolicyParams params;
};

struct ExperimentConfig {
  std::string preset_name = "custom";
  std::vector<double> raw_means;
  QualitySchedule schedule = QualitySchedule::constant(1.0);
  std::vector<PolicyRunSpec> policies;
  long long horizon = 100000;
  int runs = 100;
  std::uint64_t master_seed = 1;
  long long checkpoint_stride = 100;
  std::string out_dir = "out";
  int workers = 0;  // 0 = hardware concurrency
  bool log_x = false;

  // Throws on out-of-range values, unknown/duplicate policies, etc.
  void validate() const;
};

// Flat key = value text, '#' comments, bracketed lists, schedules written
// as constant(..) / cold_start(..) / targeted_zero(..) / custom_sequence([..]),
// and per-policy overrides as <policy>.<param> = value. A `preset` key
// expands first; remaining keys override it. Unknown keys are rejected with
// file/line context.
ExperimentConfig parse_config_file(const std::filesystem::path& path);

// Same grammar, for tests and for embedding.
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);

}  // namespace banditlab
