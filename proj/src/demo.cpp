#include "wayex/demo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "wayex/errors.hpp"

namespace wayex {

namespace {

constexpr int kFormatVersion = 1;
constexpr double kThresholdFloor = 0.005;

void init_thresholds(Demonstration& demo) {
  const std::size_t k = demo.param_dim();
  const std::size_t n = demo.waypoints.size();
  demo.thresholds.assign(n, std::vector<double>(k, kThresholdFloor));
  demo.failure_counts.assign(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    // Half the per-step motion; waypoint 0 has no predecessor and borrows
    // the motion of the first step.
    const std::size_t prev = (t == 0) ? 0 : t - 1;
    const std::size_t next = (t == 0) ? std::min<std::size_t>(1, n - 1) : t;
    for (std::size_t i = 0; i < k; ++i) {
      const double motion = std::abs(demo.waypoints[next].params[i] -
                                     demo.waypoints[prev].params[i]);
      demo.thresholds[t][i] = std::max(0.5 * motion, kThresholdFloor);
    }
  }
}

void require_keys(const nlohmann::json& obj,
                  const std::vector<std::string>& keys,
                  const std::string& where) {
  for (const auto& key : keys) {
    if (!obj.contains(key))
      throw ParseError(where + ": missing key '" + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(where + ": unexpected key '" + key +
                       "' (demonstrations are state-only)");
  }
}

std::vector<double> to_doubles(const nlohmann::json& arr,
                               const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw ParseError(where + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Demonstration record_demo(Env& env) {
  const EpisodeTrajectory traj = env.scripted_expert();
  Demonstration demo;
  demo.env_name = env.name();
  demo.waypoints.reserve(traj.transitions.size() + 1);
  demo.waypoints.push_back(traj.transitions.front().state);
  for (const auto& t : traj.transitions) demo.waypoints.push_back(t.next_state);
  demo.goal = demo.waypoints.back().goal;
  init_thresholds(demo);
  return demo;
}

void save_demo(const Demonstration& demo, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path.string());
  nlohmann::json header{{"format", "wayex-demo"},
                        {"version", kFormatVersion},
                        {"env", demo.env_name},
                        {"k", demo.param_dim()},
                        {"l_d", demo.l_d()},
                        {"goal", demo.goal}};
  out << header.dump() << '\n';
  for (std::size_t t = 0; t < demo.waypoints.size(); ++t) {
    nlohmann::json line{{"t", t},
                        {"params", demo.waypoints[t].params},
                        {"threshold", demo.thresholds[t]},
                        {"failures", demo.failure_counts[t]}};
    out << line.dump() << '\n';
  }
  if (!out) throw ParseError("write failed: " + path.string());
}

Demonstration load_demo(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open demo file: " + path.string());

  auto parse_line = [&](const std::string& text, const std::string& where) {
    nlohmann::json obj = nlohmann::json::parse(text, nullptr, false);
    if (obj.is_discarded())
      throw ParseError(where + ": not valid JSON");
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    return obj;
  };

  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path.string() + ": empty file");
  const nlohmann::json header = parse_line(line, path.string() + ": header");
  require_keys(header, {"format", "version", "env", "k", "l_d", "goal"},
               path.string() + ": header");
  if (header["format"] != "wayex-demo")
    throw ParseError(path.string() + ": header: not a demo file");
  if (header["version"] != kFormatVersion)
    throw ParseError(path.string() + ": header: unsupported version");

  Demonstration demo;
  demo.env_name = header["env"].get<std::string>();
  demo.goal = to_doubles(header["goal"], path.string() + ": header goal");
  const std::size_t k = header["k"].get<std::size_t>();
  const std::size_t l_d = header["l_d"].get<std::size_t>();

  for (std::size_t t = 0; t <= l_d; ++t) {
    const std::string where =
        path.string() + ": waypoint line " + std::to_string(t);
    if (!std::getline(in, line))
      throw ParseError(where + ": file truncated (expected " +
                       std::to_string(l_d + 1) + " waypoints)");
    const nlohmann::json obj = parse_line(line, where);
    require_keys(obj, {"t", "params", "threshold", "failures"}, where);
    if (obj["t"].get<std::size_t>() != t)
      throw ParseError(where + ": waypoint index out of order");
    StateVector s;
    s.params = to_doubles(obj["params"], where + " params");
    s.goal = demo.goal;
    if (s.params.size() != k)
      throw ParseError(where + ": expected " + std::to_string(k) +
                       " params, found " + std::to_string(s.params.size()));
    if (!is_finite(s)) throw ParseError(where + ": non-finite parameter");
    auto threshold = to_doubles(obj["threshold"], where + " threshold");
    if (threshold.size() != k)
      throw ParseError(where + ": threshold size mismatch");
    for (double d : threshold) {
      if (!(d > 0.0)) throw ParseError(where + ": threshold must be > 0");
    }
    const int failures = obj["failures"].get<int>();
    if (failures < 0) throw ParseError(where + ": negative failure count");
    demo.waypoints.push_back(std::move(s));
    demo.thresholds.push_back(std::move(threshold));
    demo.failure_counts.push_back(failures);
  }
  if (std::getline(in, line) && !line.empty())
    throw ParseError(path.string() + ": trailing data after last waypoint");
  return demo;
}

}  // namespace wayex
