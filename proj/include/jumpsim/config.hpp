#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domain.hpp"
#include "estimate.hpp"
#include "kernel.hpp"
#include "simulate.hpp"
#include "vec.hpp"

namespace jumpsim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat INI-style configuration: [section] headers, key = value lines,
// '#' comments.  Diagnostics carry line numbers.
class RunConfig {
 public:
  static RunConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
  }

  static RunConfig parse_string(const std::string& text,
                                const std::string& origin = "<string>") {
    RunConfig cfg;
    cfg.text_ = text;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string t = trim(line);
      if (t.empty()) continue;
      if (t.front() == '[') {
        if (t.back() != ']')
          throw ConfigError(origin + ":" + std::to_string(lineno) +
                            ": malformed section header");
        section = trim(t.substr(1, t.size() - 2));
        continue;
      }
      auto eq = t.find('=');
      if (eq == std::string::npos)
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": expected key = value");
      std::string key = trim(t.substr(0, eq));
      std::string val = trim(t.substr(eq + 1));
      if (key.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": empty key");
      cfg.values_[section + "." + key] = val;
    }
    return cfg;
  }

  bool has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
  }

  std::string get_str(const std::string& section, const std::string& key) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end())
      throw ConfigError("missing config key [" + section + "] " + key);
    return it->second;
  }

  std::string get_str(const std::string& section, const std::string& key,
                      const std::string& fallback) const {
    auto it = values_.find(section + "." + key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& section, const std::string& key) const {
    return to_double(section, key, get_str(section, key));
  }
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const {
    if (!has(section, key)) return fallback;
    return get_double(section, key);
  }

  std::uint64_t get_u64(const std::string& section,
                        const std::string& key) const {
    std::string v = get_str(section, key);
    try {
      if (v.find('-') != std::string::npos)
        throw std::invalid_argument("negative");
      return std::stoull(v);
    } catch (const std::exception&) {
      throw ConfigError("config key [" + section + "] " + key +
                        ": not an integer: " + v);
    }
  }
  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    return get_u64(section, key);
  }

  std::vector<double> get_list(const std::string& section,
                               const std::string& key) const {
    std::vector<double> out;
    for (const std::string& piece : split(get_str(section, key), ','))
      out.push_back(to_double(section, key, piece));
    return out;
  }

  const std::string& text() const { return text_; }

  // --- typed views of the standard sections ---

  KernelParams kernel() const {
    std::size_t d = std::size_t(get_u64("kernel", "dimension"));
    double alpha = get_double("kernel", "alpha");
    double kappa1 = get_double("kernel", "kappa1");
    double kappa2 = get_double("kernel", "kappa2", kappa1);
    std::string mod = get_str("kernel", "modulation", "isotropic");
    try {
      return make_kernel(mod, d, alpha, kappa1, kappa2);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("kernel section: ") + e.what());
    }
  }

  SimConfig sim(const KernelParams& params) const {
    SimConfig cfg;
    std::string eps = get_str("sim", "eps_min", "auto");
    cfg.eps_min = (eps == "auto") ? default_eps_min(params)
                                  : to_double("sim", "eps_min", eps);
    cfg.t_max = get_double("sim", "t_max", 1.0);
    cfg.seed = get_u64("sim", "seed", 0);
    cfg.gaussian_correction =
        get_str("sim", "gaussian_correction", "off") == "on";
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("sim section: ") + e.what());
    }
    return cfg;
  }

  Vec get_point(const std::string& section, const std::string& key,
                std::size_t expect_dim) const {
    auto xs = get_list(section, key);
    if (xs.size() != expect_dim)
      throw ConfigError("config key [" + section + "] " + key + ": expected " +
                        std::to_string(expect_dim) + " coordinates");
    Vec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
    return v;
  }

  // "ball;cx,cy;extent" or "cube;cx,cy;extent"
  Domain get_domain(const std::string& section, const std::string& key,
                    std::size_t expect_dim) const {
    auto parts = split(get_str(section, key), ';');
    if (parts.size() != 3)
      throw ConfigError("config key [" + section + "] " + key +
                        ": expected shape;center;extent");
    std::vector<double> cs;
    for (const auto& piece : split(parts[1], ','))
      cs.push_back(to_double(section, key, piece));
    if (cs.size() != expect_dim)
      throw ConfigError("config key [" + section + "] " + key +
                        ": center has wrong dimension");
    Vec c(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) c[i] = cs[i];
    double extent = to_double(section, key, parts[2]);
    if (parts[0] == "ball") return Domain::ball(c, extent);
    if (parts[0] == "cube") return Domain::cube(c, extent);
    throw ConfigError("config key [" + section + "] " + key +
                      ": unknown shape " + parts[0]);
  }

  // "t:coords t:coords ..." e.g. "0:0,0 0.5:0.25,0 1:0.25,0.25"
  TubeSpec get_tube(const std::string& section, std::size_t expect_dim) const {
    TubeSpec tube;
    for (const std::string& wp : split(get_str(section, "tube_waypoints"), ' ')) {
      if (wp.empty()) continue;
      auto parts = split(wp, ':');
      if (parts.size() != 2)
        throw ConfigError("tube_waypoints: expected time:coords entries");
      double t = to_double(section, "tube_waypoints", parts[0]);
      std::vector<double> cs;
      for (const auto& piece : split(parts[1], ','))
        cs.push_back(to_double(section, "tube_waypoints", piece));
      if (cs.size() != expect_dim)
        throw ConfigError("tube_waypoints: wrong coordinate dimension");
      Vec x(cs.size());
      for (std::size_t i = 0; i < cs.size(); ++i) x[i] = cs[i];
      tube.waypoints.push_back({t, x});
    }
    tube.epsilon = get_double(section, "tube_epsilon");
    try {
      tube.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("tube spec: ") + e.what());
    }
    return tube;
  }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  }

  static double to_double(const std::string& section, const std::string& key,
                          const std::string& v) {
    try {
      std::size_t pos = 0;
      double x = std::stod(v, &pos);
      if (pos != trim(v).size() && !trim(v).empty() && pos != v.size())
        throw std::invalid_argument("trailing characters");
      return x;
    } catch (const std::exception&) {
      throw ConfigError("config key [" + section + "] " + key +
                        ": not a number: " + v);
    }
  }

  std::map<std::string, std::string> values_;
  std::string text_;
};

}  // namespace jumpsim
