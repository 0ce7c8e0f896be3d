#include "banditlab/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "banditlab/version.hpp"

namespace banditlab {

std::string format_number(double v) {
  char buffer[64];
  const auto res = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return out;
}

void write_metadata(std::ofstream& out, const CsvMetadata& meta) {
  out << "# master_seed=" << meta.master_seed << " rng=" << kRngName
      << " version=" << kVersion << "\n";
}

}  // namespace

void write_aggregate_csv(const std::vector<AggregateCurve>& curves,
                         const CsvMetadata& meta, const std::filesystem::path& path) {
  if (curves.empty()) {
    throw std::invalid_argument("write_aggregate_csv: no curves");
  }
  std::ofstream out = open_out(path);
  write_metadata(out, meta);
  out << "preset,policy,round,mean_regret,stderr,runs\n";
  for (const AggregateCurve& curve : curves) {
    for (std::size_t c = 0; c < curve.rounds.size(); ++c) {
      out << meta.preset << ',' << curve.policy << ',' << curve.rounds[c] << ','
          << format_number(curve.mean_regret[c]) << ','
          << format_number(curve.stderr_regret[c]) << ',' << curve.runs << "\n";
    }
  }
}

void write_runs_csv(const std::vector<PolicyTraces>& runs, const CsvMetadata& meta,
                    const std::filesystem::path& path) {
  if (runs.empty()) {
    throw std::invalid_argument("write_runs_csv: no traces");
  }
  std::ofstream out = open_out(path);
  write_metadata(out, meta);
  out << "preset,policy,run,round,cum_reward,cum_pseudo_regret\n";
  for (const PolicyTraces& per_policy : runs) {
    for (std::size_t run = 0; run < per_policy.traces.size(); ++run) {
      for (const Checkpoint& c : per_policy.traces[run].checkpoints()) {
        out << meta.preset << ',' << per_policy.policy << ',' << run << ',' << c.round
            << ',' << format_number(c.cum_reward) << ','
            << format_number(c.cum_pseudo_regret) << "\n";
      }
    }
  }
}

}  // namespace banditlab
