#include "wayex/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "wayex/errors.hpp"

namespace wayex {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

long parse_int(const std::string& key, const std::string& value) {
  long out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("config key '" + key + "': '" + value +
                      "' is not an integer");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': '" + value +
                      "' is not a number");
  }
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("config key '" + key + "': empty list element");
    out.push_back(static_cast<int>(parse_int(key, item)));
  }
  if (out.empty())
    throw ConfigError("config key '" + key + "': list must not be empty");
  return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string& key,
                                  const std::string& value)>;

const std::map<std::string, Setter>& schema() {
  auto choice = [](std::string ExperimentConfig::* field,
                   std::vector<std::string> allowed) {
    return Setter([field, allowed = std::move(allowed)](
                      ExperimentConfig& c, const std::string& key,
                      const std::string& value) {
      if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
        std::string msg = "config key '" + key + "': '" + value +
                          "' is not one of {";
        for (std::size_t i = 0; i < allowed.size(); ++i)
          msg += (i ? ", " : "") + allowed[i];
        throw ConfigError(msg + "}");
      }
      c.*field = value;
    });
  };
  auto text = [](std::string ExperimentConfig::* field) {
    return Setter([field](ExperimentConfig& c, const std::string&,
                          const std::string& value) { c.*field = value; });
  };
  auto integer = [](auto ExperimentConfig::* field, long lo, long hi) {
    return Setter([field, lo, hi](ExperimentConfig& c, const std::string& key,
                                  const std::string& value) {
      const long v = parse_int(key, value);
      if (v < lo || v > hi)
        throw ConfigError("config key '" + key + "': " + value +
                          " is outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
      c.*field = static_cast<std::remove_reference_t<decltype(c.*field)>>(v);
    });
  };
  auto real = [](double ExperimentConfig::* field, double lo, double hi,
                 bool lo_open, bool hi_open) {
    return Setter([field, lo, hi, lo_open, hi_open](
                      ExperimentConfig& c, const std::string& key,
                      const std::string& value) {
      const double v = parse_real(key, value);
      const bool ok = (lo_open ? v > lo : v >= lo) &&
                      (hi_open ? v < hi : v <= hi);
      if (!ok)
        throw ConfigError("config key '" + key + "': " + value +
                          " is out of range " + (lo_open ? "(" : "[") +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          (hi_open ? ")" : "]"));
      c.*field = v;
    });
  };
  auto int_list = [](std::vector<int> ExperimentConfig::* field, long lo) {
    return Setter([field, lo](ExperimentConfig& c, const std::string& key,
                              const std::string& value) {
      auto v = parse_int_list(key, value);
      for (int item : v) {
        if (item < lo)
          throw ConfigError("config key '" + key + "': element " +
                            std::to_string(item) + " is below " +
                            std::to_string(lo));
      }
      c.*field = std::move(v);
    });
  };

  static const std::map<std::string, Setter> table{
      {"env", choice(&ExperimentConfig::env, {"grid", "reach", "picklift"})},
      {"map_file", text(&ExperimentConfig::map_file)},
      {"reward_mode",
       choice(&ExperimentConfig::reward_mode, {"sparse", "dense", "wayex"})},
      {"demo_file", text(&ExperimentConfig::demo_file)},
      {"seeds", int_list(&ExperimentConfig::seeds, 0)},
      {"total_steps", integer(&ExperimentConfig::total_steps, 1, 1000000000)},
      {"epoch_steps", integer(&ExperimentConfig::epoch_steps, 1, 1000000000)},
      {"eval_episodes", integer(&ExperimentConfig::eval_episodes, 1, 100000)},
      {"eval_noise", real(&ExperimentConfig::eval_noise, 0.0, 1e9, false, false)},
      {"gamma", real(&ExperimentConfig::gamma, 0.0, 1.0, true, true)},
      {"threshold_epsilon",
       real(&ExperimentConfig::threshold_epsilon, 0.0, 1e9, true, false)},
      {"failure_limit", integer(&ExperimentConfig::failure_limit, 1, 1000000)},
      {"warmup_steps", integer(&ExperimentConfig::warmup_steps, 0, 1000000000)},
      {"expansion_cadence",
       integer(&ExperimentConfig::expansion_cadence, 1, 1000000)},
      {"expansion_increment",
       real(&ExperimentConfig::expansion_increment, 0.0, 1e9, false, false)},
      {"expansion_success_threshold",
       real(&ExperimentConfig::expansion_success_threshold, 0.0, 1.0, false,
            false)},
      {"action_noise",
       real(&ExperimentConfig::action_noise, 0.0, 1e9, false, false)},
      {"hidden_sizes", int_list(&ExperimentConfig::hidden_sizes, 1)},
      {"actor_lr", real(&ExperimentConfig::actor_lr, 0.0, 1e9, true, false)},
      {"critic_lr", real(&ExperimentConfig::critic_lr, 0.0, 1e9, true, false)},
      {"tau", real(&ExperimentConfig::tau, 0.0, 1.0, true, false)},
      {"batch_size", integer(&ExperimentConfig::batch_size, 1, 1000000)},
      {"replay_capacity",
       integer(&ExperimentConfig::replay_capacity, 1, 1000000000)},
      {"learn_start", integer(&ExperimentConfig::learn_start, 1, 1000000000)},
      {"update_every", integer(&ExperimentConfig::update_every, 1, 1000000)},
      {"tabular_lr", real(&ExperimentConfig::tabular_lr, 0.0, 1.0, true, false)},
      {"tabular_epsilon",
       real(&ExperimentConfig::tabular_epsilon, 0.0, 1.0, false, false)},
      {"out_dir", text(&ExperimentConfig::out_dir)},
  };
  return table;
}

void apply(ExperimentConfig& cfg, const std::string& key,
           const std::string& value, const std::string& where) {
  const auto& table = schema();
  const auto it = table.find(key);
  if (it == table.end())
    throw ConfigError(where + ": unknown config key '" + key + "'");
  it->second(cfg, key, value);
}

void apply_line(ExperimentConfig& cfg, const std::string& raw,
                const std::string& where) {
  const auto eq = raw.find('=');
  if (eq == std::string::npos)
    throw ConfigError(where + ": expected 'key = value', got '" + raw + "'");
  const std::string key = trim(raw.substr(0, eq));
  const std::string value = trim(raw.substr(eq + 1));
  if (key.empty()) throw ConfigError(where + ": empty key");
  if (value.empty())
    throw ConfigError(where + ": empty value for key '" + key + "'");
  apply(cfg, key, value, where);
}

}  // namespace

ExperimentConfig ExperimentConfig::load(
    const std::filesystem::path& path,
    const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    apply_line(cfg, line, path.string() + ":" + std::to_string(lineno));
  }
  for (const auto& ov : overrides) apply_line(cfg, ov, "override");
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_overrides(
    const std::vector<std::string>& overrides) {
  ExperimentConfig cfg;
  for (const auto& ov : overrides) apply_line(cfg, ov, "override");
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (env == "grid" && map_file.empty())
    throw ConfigError("env 'grid' requires map_file");
  if (epoch_steps > total_steps)
    throw ConfigError("epoch_steps must not exceed total_steps");
  // demo_file existence is checked at training time so that record-demo can
  // run in between.
}

void ExperimentConfig::print_effective(std::ostream& out) const {
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  out << "env = " << env << '\n'
      << "map_file = " << map_file << '\n'
      << "reward_mode = " << reward_mode << '\n'
      << "demo_file = " << demo_file << '\n'
      << "seeds = " << list(seeds) << '\n'
      << "total_steps = " << total_steps << '\n'
      << "epoch_steps = " << epoch_steps << '\n'
      << "eval_episodes = " << eval_episodes << '\n'
      << "eval_noise = " << eval_noise << '\n'
      << "gamma = " << gamma << '\n'
      << "threshold_epsilon = " << threshold_epsilon << '\n'
      << "failure_limit = " << failure_limit << '\n'
      << "warmup_steps = " << warmup_steps << '\n'
      << "expansion_cadence = " << expansion_cadence << '\n'
      << "expansion_increment = " << expansion_increment << '\n'
      << "expansion_success_threshold = " << expansion_success_threshold << '\n'
      << "action_noise = " << action_noise << '\n'
      << "hidden_sizes = " << list(hidden_sizes) << '\n'
      << "actor_lr = " << actor_lr << '\n'
      << "critic_lr = " << critic_lr << '\n'
      << "tau = " << tau << '\n'
      << "batch_size = " << batch_size << '\n'
      << "replay_capacity = " << replay_capacity << '\n'
      << "learn_start = " << learn_start << '\n'
      << "update_every = " << update_every << '\n'
      << "tabular_lr = " << tabular_lr << '\n'
      << "tabular_epsilon = " << tabular_epsilon << '\n'
      << "out_dir = " << out_dir << '\n';
}

RewardConfig ExperimentConfig::reward_config(int env_horizon) const {
  RewardConfig rc;
  rc.gamma = gamma;
  rc.l_max = env_horizon;
  rc.epsilon = threshold_epsilon;
  rc.warmup_steps = warmup_steps;
  rc.failure_limit = failure_limit;
  rc.validate();
  return rc;
}

}  // namespace wayex
