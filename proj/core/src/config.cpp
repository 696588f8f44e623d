#include "hog/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hog/errors.hpp"

namespace hog {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value, int line) {
  if (value.empty()) throw config_error("empty value for key '" + key + "'", line);
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + value.size())
    throw config_error("cannot parse number '" + value + "' for key '" + key + "'", line);
  if (!std::isfinite(v))
    throw config_error("value for key '" + key + "' must be finite", line);
  return v;
}

long parse_integer(const std::string& key, const std::string& value, int line) {
  const double v = parse_number(key, value, line);
  if (v != std::floor(v) || std::abs(v) > 1e15)
    throw config_error("value for key '" + key + "' must be an integer", line);
  return static_cast<long>(v);
}

bool is_scalar_key(const std::string& key) {
  static const std::set<std::string> kKeys = {"sigma", "gamma", "rho",     "beta",
                                              "h0",    "t_end", "tol",     "records"};
  return kKeys.count(key) > 0;
}

int sweep_param_index(const std::string& name) {
  for (std::size_t i = 0; i < kSweepParamNames.size(); ++i)
    if (name == kSweepParamNames[i]) return static_cast<int>(i);
  return -1;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value'", lineno);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw config_error("missing key before '='", lineno);
    if (!entries.emplace(key, std::make_pair(value, lineno)).second)
      throw config_error("duplicate key '" + key + "'", lineno);
  }

  // reject unknown keys up front
  for (const auto& [key, val] : entries) {
    if (is_scalar_key(key) || key == "out_prefix") continue;
    if (key.rfind("sweep.", 0) == 0) {
      const std::string rest = key.substr(6);
      const std::size_t dot = rest.find('.');
      if (dot != std::string::npos) {
        const std::string param = rest.substr(0, dot);
        const std::string field = rest.substr(dot + 1);
        if (sweep_param_index(param) >= 0 &&
            (field == "start" || field == "stop" || field == "count"))
          continue;
      }
    }
    throw config_error("unknown key '" + key + "'", val.second);
  }

  for (const char* required : {"sigma", "gamma", "rho", "beta"})
    if (!entries.count(required))
      throw config_error(std::string("missing required key '") + required + "'");

  RunConfig cfg;
  auto lookup = [&entries](const char* key) -> const std::pair<std::string, int>* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto scalar = [&](const char* key, double fallback) {
    const auto* e = lookup(key);
    return e ? parse_number(key, e->first, e->second) : fallback;
  };

  cfg.params.sigma = scalar("sigma", 0.0);
  cfg.params.gamma = scalar("gamma", 0.0);
  cfg.params.rho = scalar("rho", 0.0);
  cfg.params.beta = scalar("beta", 0.0);
  cfg.h0 = scalar("h0", cfg.h0);
  cfg.t_end = scalar("t_end", cfg.t_end);
  cfg.tol = scalar("tol", cfg.tol);
  if (const auto* e = lookup("records"))
    cfg.records = parse_integer("records", e->first, e->second);
  if (const auto* e = lookup("out_prefix")) cfg.out_prefix = e->first;

  auto domain_check = [&](bool ok, const char* key, const char* what) {
    if (!ok) {
      const auto* e = lookup(key);
      throw config_error(std::string("domain error for key '") + key + "': " + what,
                         e ? e->second : 0);
    }
  };
  domain_check(cfg.params.sigma > 0.0, "sigma", "must be positive");
  domain_check(cfg.params.gamma > 0.0, "gamma", "must be positive");
  domain_check(cfg.params.rho > 0.0 && cfg.params.rho <= 1.0, "rho",
               "must lie in (0, 1]");
  domain_check(cfg.params.beta > 0.0 && cfg.params.beta < 1.0, "beta",
               "must lie in (0, 1)");
  domain_check(cfg.h0 > 0.0, "h0", "must be positive");
  domain_check(cfg.t_end >= 0.0, "t_end", "must be nonnegative");
  domain_check(cfg.tol > 0.0, "tol", "must be positive");
  domain_check(cfg.records >= 1, "records", "must be at least 1");

  for (std::size_t i = 0; i < kSweepParamNames.size(); ++i) {
    const std::string base = std::string("sweep.") + kSweepParamNames[i] + ".";
    const auto* start = lookup((base + "start").c_str());
    const auto* stop = lookup((base + "stop").c_str());
    const auto* count = lookup((base + "count").c_str());
    if (!start && !stop && !count) continue;
    if (!start || !stop || !count)
      throw config_error("incomplete sweep axis for '" + std::string(kSweepParamNames[i]) +
                         "': start, stop and count are all required");
    SweepAxis& axis = cfg.sweep[i];
    axis.active = true;
    axis.start = parse_number(base + "start", start->first, start->second);
    axis.stop = parse_number(base + "stop", stop->first, stop->second);
    axis.count = parse_integer(base + "count", count->first, count->second);
    if (axis.count < 1)
      throw config_error("domain error for key '" + base + "count': must be at least 1",
                         count->second);
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open configuration file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace hog
