#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "banditlab/csv.hpp"
#include "banditlab/runner.hpp"
#include "banditlab/rng.hpp"
#include "banditlab/svg.hpp"

using namespace banditlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("banditlab_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

ExperimentConfig tiny_config(const std::string& out) {
  ExperimentConfig config;
  config.preset_name = "custom";
  config.raw_means = {0.5, 0.8};
  config.schedule = QualitySchedule::constant(1.0);
  config.policies = {{"ucb", {}}, {"thompson", {}}};
  config.horizon = 100;
  config.runs = 1;
  config.master_seed = 4;
  config.checkpoint_stride = 100;
  config.out_dir = out;
  config.workers = 2;
  return config;
}

// Minimal well-formedness scan: tags balance and nest properly.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    const std::size_t close = text.find('>', i);
    if (close == std::string::npos) {
      return false;
    }
    std::string tag = text.substr(i + 1, close - i - 1);
    if (!tag.empty() && tag.front() == '?') {  // declaration
      i = close + 1;
      continue;
    }
    const bool closing = !tag.empty() && tag.front() == '/';
    const bool self_closing = !tag.empty() && tag.back() == '/';
    if (closing) {
      tag = tag.substr(1);
    }
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
    if (name.empty()) {
      return false;
    }
    if (closing) {
      if (stack.empty() || stack.back() != name) {
        return false;
      }
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
    i = close + 1;
  }
  return stack.empty();
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("format_number round-trips doubles exactly") {
  Rng rng(64);
  for (int i = 0; i < 2000; ++i) {
    const double v = (rng.uniform01() - 0.5) * std::pow(10.0, static_cast<double>(i % 19) - 6.0);
    const std::string s = format_number(v);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(res.ec == std::errc());
    CHECK(back == v);
  }
}

TEST_CASE("single run, single checkpoint: one aggregate row per policy, stderr 0") {
  const auto dir = temp_dir("rows");
  const RunArtifacts artifacts = run_and_write(tiny_config(dir.string()));
  const std::string csv = slurp(artifacts.aggregate_csv);

  std::istringstream lines(csv);
  std::string line;
  int data_rows = 0;
  int header_rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("preset,", 0) == 0) {
      ++header_rows;
      continue;
    }
    ++data_rows;
    // columns: preset,policy,round,mean,stderr,runs
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    REQUIRE(cols.size() == 6);
    CHECK(cols[2] == "100");
    CHECK(cols[4] == "0");
    CHECK(cols[5] == "1");
  }
  CHECK(header_rows == 1);
  CHECK(data_rows == 2);

  const std::string runs_csv = slurp(artifacts.runs_csv);
  CHECK(count_occurrences(runs_csv, "custom,ucb,0,100,") == 1);
  CHECK(runs_csv.find("# master_seed=4 rng=mt19937_64 version=") != std::string::npos);
}

TEST_CASE("identical configs emit byte-identical files") {
  const auto dir_a = temp_dir("bytes_a");
  const auto dir_b = temp_dir("bytes_b");
  ExperimentConfig a = tiny_config(dir_a.string());
  a.runs = 4;
  a.horizon = 500;
  a.checkpoint_stride = 100;
  ExperimentConfig b = a;
  b.out_dir = dir_b.string();
  b.workers = 1;  // worker count must not leak into the bytes

  const RunArtifacts ra = run_and_write(a);
  const RunArtifacts rb = run_and_write(b);
  CHECK(slurp(ra.aggregate_csv) == slurp(rb.aggregate_csv));
  CHECK(slurp(ra.runs_csv) == slurp(rb.runs_csv));
  CHECK(slurp(ra.svg) == slurp(rb.svg));
}

TEST_CASE("svg: one polyline per policy with one point per checkpoint") {
  AggregateCurve curve;
  curve.policy = "ucb";
  curve.rounds = {100, 200};
  curve.mean_regret = {3.5, 7.25};
  curve.stderr_regret = {0.5, 0.75};
  curve.runs = 10;

  const auto dir = temp_dir("svg");
  const auto path = dir / "one.svg";
  write_regret_svg({curve}, path);
  const std::string svg = slurp(path);
  CHECK(xml_well_formed(svg));
  CHECK(count_occurrences(svg, "<polyline") == 1);

  const std::size_t points = svg.find("points=\"");
  REQUIRE(points != std::string::npos);
  const std::size_t end = svg.find('"', points + 8);
  const std::string coords = svg.substr(points + 8, end - points - 8);
  CHECK(count_occurrences(coords, ",") == 2);  // two x,y pairs
  CHECK(svg.find(">ucb<") != std::string::npos);  // legend entry
}

TEST_CASE("svg output is deterministic and log-x changes only the axis") {
  AggregateCurve curve;
  curve.policy = "broad";
  curve.rounds = {10, 100, 1000};
  curve.mean_regret = {1.0, 2.0, 4.0};
  curve.stderr_regret = {0.1, 0.2, 0.3};
  curve.runs = 3;

  const auto dir = temp_dir("svg_det");
  write_regret_svg({curve}, dir / "a.svg");
  write_regret_svg({curve}, dir / "b.svg");
  write_regret_svg({curve}, dir / "log.svg", true);
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
  CHECK(slurp(dir / "a.svg") != slurp(dir / "log.svg"));
  CHECK(xml_well_formed(slurp(dir / "log.svg")));
  CHECK(slurp(dir / "log.svg").find("1e2") != std::string::npos);
}

TEST_CASE("empty outputs are rejected") {
  const auto dir = temp_dir("empty");
  CHECK_THROWS_AS(write_aggregate_csv({}, CsvMetadata{}, dir / "x.csv"),
                  std::invalid_argument);
  CHECK_THROWS_AS(write_runs_csv({}, CsvMetadata{}, dir / "x.csv"), std::invalid_argument);
  CHECK_THROWS_AS(write_regret_svg({}, dir / "x.svg"), std::invalid_argument);
}
