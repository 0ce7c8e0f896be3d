#include "banditlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "banditlab/instance.hpp"
#include "banditlab/presets.hpp"

namespace banditlab {

void ExperimentConfig::validate() const {
  if (raw_means.empty()) {
    throw std::invalid_argument("config: no arm means given");
  }
  for (double m : raw_means) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument("config: arm means must lie in [0,1]");
    }
  }
  if (*std::max_element(raw_means.begin(), raw_means.end()) <= 0.0) {
    throw std::invalid_argument("config: at least one arm mean must be positive");
  }
  if (horizon < 1) {
    throw std::invalid_argument("config: horizon must be at least 1");
  }
  if (runs < 1) {
    throw std::invalid_argument("config: runs must be at least 1");
  }
  if (checkpoint_stride < 1) {
    throw std::invalid_argument("config: checkpoint stride must be at least 1");
  }
  if (policies.empty()) {
    throw std::invalid_argument("config: no policies selected");
  }
  std::set<std::string> seen;
  const auto& known = known_policy_ids();
  for (const PolicyRunSpec& spec : policies) {
    if (std::find(known.begin(), known.end(), spec.id) == known.end()) {
      throw std::invalid_argument("config: unknown policy '" + spec.id + "'");
    }
    if (!seen.insert(spec.id).second) {
      throw std::invalid_argument("config: duplicate policy '" + spec.id + "'");
    }
  }
}

namespace {

struct Line {
  int number;
  std::string key;
  std::string value;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& s, const std::string& origin, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) {
      fail(origin, line, "trailing characters after number '" + s + "'");
    }
    return v;
  } catch (const std::invalid_argument&) {
    fail(origin, line, "expected a number, got '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(origin, line, "number out of range: '" + s + "'");
  }
}

long long parse_integer(const std::string& s, const std::string& origin, int line) {
  const double v = parse_number(s, origin, line);
  const long long n = static_cast<long long>(v);
  if (static_cast<double>(n) != v) {
    fail(origin, line, "expected an integer, got '" + s + "'");
  }
  return n;
}

// Splits "a, b, c" at top level (no nested brackets needed beyond one list).
std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  const std::string last = trim(cur);
  if (!last.empty()) {
    items.push_back(last);
  }
  return items;
}

std::vector<std::string> parse_bracket_list(const std::string& s, const std::string& origin,
                                            int line) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    fail(origin, line, "expected a bracketed list, got '" + s + "'");
  }
  return split_list(s.substr(1, s.size() - 2));
}

QualitySchedule parse_schedule(const std::string& s, const std::string& origin, int line) {
  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    fail(origin, line, "expected schedule like constant(1.0), got '" + s + "'");
  }
  const std::string name = trim(s.substr(0, open));
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  const std::vector<std::string> args = split_list(body);
  try {
    if (name == "constant") {
      if (args.size() != 1) fail(origin, line, "constant(q0) takes one argument");
      return QualitySchedule::constant(parse_number(args[0], origin, line));
    }
    if (name == "cold_start") {
      if (args.size() != 2) fail(origin, line, "cold_start(t0, q_after) takes two arguments");
      return QualitySchedule::cold_start(parse_integer(args[0], origin, line),
                                         parse_number(args[1], origin, line));
    }
    if (name == "targeted_zero") {
      if (args.size() != 2) {
        fail(origin, line, "targeted_zero(threshold, q_otherwise) takes two arguments");
      }
      return QualitySchedule::targeted_zero(parse_number(args[0], origin, line),
                                            parse_number(args[1], origin, line));
    }
    if (name == "custom_sequence") {
      if (args.size() != 1) {
        fail(origin, line, "custom_sequence([..]) takes one list argument");
      }
      std::vector<double> qs;
      for (const std::string& item : parse_bracket_list(args[0], origin, line)) {
        qs.push_back(parse_number(item, origin, line));
      }
      return QualitySchedule::custom_sequence(std::move(qs));
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, line, e.what());
  }
  fail(origin, line, "unknown schedule kind '" + name + "'");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      const std::size_t hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.resize(hash);
      }
      const std::string stripped = trim(raw);
      if (stripped.empty()) {
        continue;
      }
      const std::size_t eq = stripped.find('=');
      if (eq == std::string::npos) {
        fail(origin, number, "expected key = value");
      }
      lines.push_back(
          {number, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1))});
      if (lines.back().key.empty() || lines.back().value.empty()) {
        fail(origin, number, "expected key = value");
      }
    }
  }

  ExperimentConfig config;
  bool have_preset = false;
  for (const Line& l : lines) {
    if (l.key == "preset") {
      if (have_preset) {
        fail(origin, l.number, "duplicate preset key");
      }
      try {
        config = preset(l.value).config;
      } catch (const std::invalid_argument& e) {
        fail(origin, l.number, e.what());
      }
      have_preset = true;
    }
  }
  if (!have_preset) {
    config.policies.clear();
    for (const std::string& id : known_policy_ids()) {
      config.policies.push_back({id, {}});
    }
  }

  const auto& known = known_policy_ids();
  for (const Line& l : lines) {
    if (l.key == "preset") {
      continue;
    } else if (l.key == "theta") {
      config.raw_means.clear();
      for (const std::string& item : parse_bracket_list(l.value, origin, l.number)) {
        const double m = parse_number(item, origin, l.number);
        if (!(m >= 0.0 && m <= 1.0)) {
          fail(origin, l.number, "arm mean " + item + " outside [0,1]");
        }
        config.raw_means.push_back(m);
      }
    } else if (l.key == "schedule") {
      config.schedule = parse_schedule(l.value, origin, l.number);
    } else if (l.key == "horizon") {
      config.horizon = parse_integer(l.value, origin, l.number);
    } else if (l.key == "runs") {
      config.runs = static_cast<int>(parse_integer(l.value, origin, l.number));
    } else if (l.key == "seed") {
      config.master_seed = static_cast<std::uint64_t>(parse_integer(l.value, origin, l.number));
    } else if (l.key == "stride") {
      config.checkpoint_stride = parse_integer(l.value, origin, l.number);
    } else if (l.key == "out") {
      config.out_dir = l.value;
    } else if (l.key == "workers") {
      config.workers = static_cast<int>(parse_integer(l.value, origin, l.number));
    } else if (l.key == "policies") {
      config.policies.clear();
      for (const std::string& id : parse_bracket_list(l.value, origin, l.number)) {
        config.policies.push_back({id, {}});
      }
    } else {
      const std::size_t dot = l.key.find('.');
      if (dot == std::string::npos) {
        fail(origin, l.number, "unknown key '" + l.key + "'");
      }
      const std::string policy_id = l.key.substr(0, dot);
      const std::string param = l.key.substr(dot + 1);
      if (std::find(known.begin(), known.end(), policy_id) == known.end()) {
        fail(origin, l.number, "unknown policy '" + policy_id + "' in key '" + l.key + "'");
      }
      if (param.empty()) {
        fail(origin, l.number, "empty parameter name in key '" + l.key + "'");
      }
      const double value = parse_number(l.value, origin, l.number);
      bool applied = false;
      for (PolicyRunSpec& spec : config.policies) {
        if (spec.id == policy_id) {
          spec.params[param] = value;
          applied = true;
        }
      }
      if (!applied) {
        fail(origin, l.number,
             "policy '" + policy_id + "' is not in the selected policy list");
      }
    }
  }

  try {
    config.validate();
    // Surface unknown parameter names now, with file context.
    const Instance probe = normalize_instance(config.raw_means);
    for (const PolicyRunSpec& spec : config.policies) {
      make_policy(spec.id, probe.k, config.horizon, spec.params);
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }
  return config;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path.string());
}

}  // namespace banditlab
