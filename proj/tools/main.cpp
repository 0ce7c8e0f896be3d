#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "banditlab/csv.hpp"
#include "banditlab/presets.hpp"
#include "banditlab/runner.hpp"
#include "banditlab/version.hpp"

namespace {

using namespace banditlab;

std::string means_to_string(const std::vector<double>& means) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < means.size(); ++i) {
    if (i > 0) os << ", ";
    os << format_number(means[i]);
  }
  os << ']';
  return os.str();
}

std::string policies_to_string(const std::vector<PolicyRunSpec>& policies) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < policies.size(); ++i) {
    if (i > 0) os << ", ";
    os << policies[i].id;
  }
  os << ']';
  return os.str();
}

void print_describe(const Preset& p) {
  const auto mark = [&](const char* field) {
    return std::find(p.defaulted.begin(), p.defaulted.end(), field) != p.defaulted.end()
               ? "   (default)"
               : "";
  };
  const ExperimentConfig& c = p.config;
  std::cout << "preset " << p.name << "\n"
            << "  theta    = " << means_to_string(c.raw_means) << "\n"
            << "  schedule = " << c.schedule.describe() << mark("schedule") << "\n"
            << "  horizon  = " << c.horizon << mark("horizon") << "\n"
            << "  runs     = " << c.runs << "\n"
            << "  stride   = " << c.checkpoint_stride << mark("stride") << "\n"
            << "  seed     = " << c.master_seed << mark("seed") << "\n"
            << "  policies = " << policies_to_string(c.policies) << "\n";
}

std::vector<PolicyRunSpec> parse_policy_list(const std::string& csv,
                                             const std::vector<PolicyRunSpec>& previous) {
  std::vector<PolicyRunSpec> out;
  std::istringstream in(csv);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (id.empty()) continue;
    PolicyRunSpec spec{id, {}};
    // keep parameter overrides already attached to this id (from a config file)
    for (const PolicyRunSpec& prev : previous) {
      if (prev.id == id) {
        spec.params = prev.params;
      }
    }
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandit simulation lab for adversarially scaled rewards"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- run ----
  auto* run = app.add_subcommand("run", "run an experiment and write CSV/SVG output");
  std::string preset_name;
  std::string config_path;
  std::string policies_csv;
  std::string out_dir;
  std::uint64_t seed = 0;
  long long horizon = 0;
  int runs = 0;
  int workers = 0;
  bool log_x = false;
  auto* preset_opt = run->add_option("--preset", preset_name, "preset name (fig1..fig4)");
  auto* config_opt = run->add_option("--config", config_path, "config file path");
  preset_opt->excludes(config_opt);
  run->add_option("--seed", seed, "master seed");
  run->add_option("--runs", runs, "number of runs per policy");
  run->add_option("--horizon", horizon, "rounds per run");
  run->add_option("--policies", policies_csv, "comma-separated policy ids");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--workers", workers, "worker threads (0 = all cores)");
  run->add_flag("--log-x", log_x, "log-scale the round axis in the SVG");

  // ---- describe ----
  auto* describe = app.add_subcommand("describe", "print a preset's full configuration");
  std::string describe_name;
  describe->add_option("--preset", describe_name, "preset name (fig1..fig4)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) {
      print_describe(preset(describe_name));
      return 0;
    }

    ExperimentConfig config;
    if (!config_path.empty()) {
      config = parse_config_file(config_path);
    } else if (!preset_name.empty()) {
      config = preset(preset_name).config;
    } else {
      std::cerr << "error: run needs --preset or --config\n";
      return 1;
    }
    if (run->count("--seed") > 0) config.master_seed = seed;
    if (run->count("--runs") > 0) config.runs = runs;
    if (run->count("--horizon") > 0) config.horizon = horizon;
    if (run->count("--workers") > 0) config.workers = workers;
    if (run->count("--out") > 0) config.out_dir = out_dir;
    if (log_x) config.log_x = true;
    if (!policies_csv.empty()) {
      config.policies = parse_policy_list(policies_csv, config.policies);
    }
    config.validate();

    const RunArtifacts artifacts = run_and_write(config);
    std::cout << "wrote " << artifacts.aggregate_csv.string() << "\n"
              << "wrote " << artifacts.runs_csv.string() << "\n"
              << "wrote " << artifacts.svg.string() << "\n";
    std::cout << "final mean cumulative pseudo-regret (T=" << config.horizon << "):\n";
    for (const AggregateCurve& curve : artifacts.result.curves) {
      std::cout << "  " << curve.policy << " = "
                << format_number(curve.mean_regret.back()) << " +/- "
                << format_number(2.0 * curve.stderr_regret.back()) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
