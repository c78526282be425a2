// Command-line front end: simulate / estimate / verify subcommands over a
// shared INI-style config file.  Exit codes: 0 success, 1 criteria
// failure, 2 usage or config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jumpsim/jumpsim.hpp"

namespace {

using namespace jumpsim;

constexpr int kExitOk = 0;
constexpr int kExitCriteriaFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t resolve_seed(const RunConfig& cfg, std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("JUMPPATH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("JUMPPATH_SEED is not an integer");
    }
  }
  return cfg.get_u64("sim", "seed", 0);
}

std::string audit_line(const RunConfig& cfg, std::uint64_t seed) {
  return csv_audit_header(hash_hex(fnv1a64(cfg.text())), seed);
}

int cmd_simulate(const RunConfig& cfg, std::optional<std::uint64_t> seed_flag,
                 unsigned threads) {
  (void)threads;  // path dumps are generated sequentially
  KernelParams kernel = cfg.kernel();
  SimConfig sim = cfg.sim(kernel);
  sim.seed = resolve_seed(cfg, seed_flag);
  Vec x0 = cfg.get_point("simulate", "x0", kernel.dim());
  if (cfg.has("simulate", "stop_domain"))
    sim.stop_domain = cfg.get_domain("simulate", "stop_domain", kernel.dim());
  std::size_t n_paths = cfg.get_u64("simulate", "paths", 1);
  std::string out = cfg.get_str("simulate", "out", "path.csv");

  for (std::size_t i = 0; i < n_paths; ++i) {
    Rng rng(sim.seed, i);
    Path path = simulate_path(kernel, x0, sim, rng);
    std::string file = out;
    if (n_paths > 1) {
      auto dot = out.rfind('.');
      file = (dot == std::string::npos)
                 ? out + "_" + std::to_string(i)
                 : out.substr(0, dot) + "_" + std::to_string(i) +
                       out.substr(dot);
    }
    std::ofstream os(file);
    if (!os) throw ConfigError("cannot write output file: " + file);
    os << audit_line(cfg, sim.seed);
    write_path_csv(os, path);
    std::cout << "path " << i << ": " << path.events.size() << " events, "
              << "final position (";
    for (std::size_t j = 0; j < kernel.dim(); ++j)
      std::cout << (j ? "," : "") << path.final_position()[j];
    std::cout << "), "
              << (path.stop_reason == StopReason::DomainExited
                      ? "domain-exited"
                      : "horizon-reached")
              << " at t=" << path.t_final << " -> " << file << "\n";
  }
  return kExitOk;
}

int cmd_estimate(const RunConfig& cfg, const std::string& estimator_flag,
                 std::size_t n_flag, std::optional<std::uint64_t> seed_flag,
                 const std::string& out_flag, unsigned threads) {
  KernelParams kernel = cfg.kernel();
  SimConfig sim = cfg.sim(kernel);
  std::uint64_t seed = resolve_seed(cfg, seed_flag);
  Exec exec{threads};
  std::string estimator = estimator_flag.empty()
                              ? cfg.get_str("estimate", "estimator")
                              : estimator_flag;
  std::size_t n = n_flag ? n_flag : std::size_t(cfg.get_u64("estimate", "n", 1000));
  std::string out = out_flag.empty()
                        ? cfg.get_str("estimate", "out", "estimate.csv")
                        : out_flag;
  std::size_t d = kernel.dim();

  EstimateResult res;
  if (estimator == "exit_time") {
    Vec x = cfg.get_point("estimate", "x0", d);
    Domain dom = cfg.get_domain("estimate", "domain", d);
    res = estimate_mean_exit_time(kernel, x, dom, n, seed, sim.eps_min, exec);
  } else if (estimator == "hitting") {
    Vec x = cfg.get_point("estimate", "x0", d);
    Domain target = cfg.get_domain("estimate", "target", d);
    Domain confine = cfg.get_domain("estimate", "confine", d);
    res = estimate_hitting_prob(kernel, x, target, confine, n, seed,
                                sim.eps_min, exec);
  } else if (estimator == "occupation") {
    Vec x = cfg.get_point("estimate", "x0", d);
    Domain Q = cfg.get_domain("estimate", "Q", d);
    Domain B = cfg.get_domain("estimate", "B", d);
    res = estimate_occupation(kernel, x, Q, B, n, seed, sim.eps_min, exec);
  } else if (estimator == "resolvent") {
    Vec x = cfg.get_point("estimate", "x0", d);
    Domain C = cfg.get_domain("estimate", "C", d);
    double lambda = cfg.get_double("estimate", "lambda");
    res = estimate_resolvent(kernel, x, C, lambda, n, seed, sim.eps_min, 1e-4,
                             exec);
  } else if (estimator == "density") {
    Vec x = cfg.get_point("estimate", "x0", d);
    Vec y = cfg.get_point("estimate", "y", d);
    double t = cfg.get_double("estimate", "t");
    double h = cfg.get_double("estimate", "bandwidth", 0.05);
    res = estimate_density(kernel, t, x, y, n, h, seed, sim.eps_min, exec);
  } else if (estimator == "tube") {
    TubeSpec tube = cfg.get_tube("estimate", d);
    res = estimate_tube_probability(kernel, tube, n, seed, sim.eps_min, exec);
  } else {
    std::cerr << "jumpsim: unknown estimator name: " << estimator << "\n";
    return kExitUsage;
  }

  std::string params_hash = hash_hex(fnv1a64(cfg.text()));
  std::string scenario = cfg.get_str("estimate", "scenario", "adhoc");
  std::ofstream os(out);
  if (!os) throw ConfigError("cannot write output file: " + out);
  os << audit_line(cfg, seed) << estimate_csv_header()
     << estimate_csv_row(scenario, estimator, params_hash, res);
  std::cout << estimate_csv_header()
            << estimate_csv_row(scenario, estimator, params_hash, res);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               std::vector<std::string> scenarios, bool list,
               std::optional<std::uint64_t> seed_flag, unsigned threads) {
  if (list) {
    for (const auto& name : scenario_names()) std::cout << name << "\n";
    return kExitOk;
  }
  if (!suite.empty() && suite != "default") {
    std::cerr << "jumpsim: unknown suite: " << suite << "\n";
    return kExitUsage;
  }
  if (scenarios.empty()) {
    if (cfg.has("verify", "scenarios")) {
      std::istringstream in(cfg.get_str("verify", "scenarios"));
      std::string name;
      while (std::getline(in, name, ','))
        if (!name.empty()) scenarios.push_back(name);
    } else {
      scenarios = scenario_names();
    }
  }
  for (const auto& name : scenarios) {
    auto known = scenario_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::cerr << "jumpsim: unknown scenario: " << name << "\n";
      return kExitUsage;
    }
  }

  SuiteOptions opt;
  if (seed_flag) opt.seed = *seed_flag;
  else if (const char* env = std::getenv("JUMPPATH_SEED"))
    opt.seed = std::stoull(env);
  else opt.seed = cfg.get_u64("verify", "seed", 0);
  opt.exec.threads = threads;

  std::string out = cfg.get_str("verify", "out", "report.csv");
  std::ofstream os(out);
  if (!os) throw ConfigError("cannot write output file: " + out);
  os << audit_line(cfg, opt.seed) << report_csv_header();

  bool all_pass = true;
  for (const auto& name : scenarios) {
    Report rep = run_scenario(name, opt);
    os << rep.csv_rows();
    std::cout << rep.text_summary();
    if (!rep.passed()) all_pass = false;
  }
  std::cout << (all_pass ? "overall: PASS" : "overall: FAIL") << "\n";
  return all_pass ? kExitOk : kExitCriteriaFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulation and verification for symmetric "
               "pure-jump processes with truncated stable-like kernels"};
  app.require_subcommand(1);

  std::string config_path;
  unsigned threads = 0;
  std::uint64_t seed_val = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "config file (INI format)")
        ->required();
    sub->add_option("--threads", threads, "worker cap (default: all cores)");
    sub->add_option("--seed", seed_val, "master seed override")
        ->each([&](const std::string&) { seed_set = true; });
  };

  auto* sim_cmd = app.add_subcommand("simulate", "dump sample paths as CSV");
  add_common(sim_cmd);

  auto* est_cmd = app.add_subcommand("estimate", "run one estimator");
  add_common(est_cmd);
  std::string estimator, est_out;
  std::size_t est_n = 0;
  est_cmd->add_option("--estimator", estimator, "estimator name");
  est_cmd->add_option("--n", est_n, "replica count");
  est_cmd->add_option("--out", est_out, "output CSV path");

  auto* ver_cmd = app.add_subcommand("verify", "run statistical experiments");
  add_common(ver_cmd);
  std::string suite;
  std::vector<std::string> scenario_list;
  bool list_scenarios = false;
  ver_cmd->add_option("--suite", suite, "suite name (default)");
  ver_cmd->add_option("--scenario", scenario_list, "scenario name(s)");
  ver_cmd->add_flag("--list", list_scenarios, "list scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    jumpsim::RunConfig cfg = jumpsim::RunConfig::parse_file(config_path);
    std::optional<std::uint64_t> seed_flag;
    if (seed_set) seed_flag = seed_val;
    if (sim_cmd->parsed()) return cmd_simulate(cfg, seed_flag, threads);
    if (est_cmd->parsed())
      return cmd_estimate(cfg, estimator, est_n, seed_flag, est_out, threads);
    return cmd_verify(cfg, suite, scenario_list, list_scenarios, seed_flag,
                      threads);
  } catch (const jumpsim::ConfigError& e) {
    std::cerr << "jumpsim: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "jumpsim: invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "jumpsim: error: " << e.what() << "\n";
    return kExitUsage;
  }
}
