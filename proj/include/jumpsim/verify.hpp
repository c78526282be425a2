#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "estimate.hpp"
#include "kernel.hpp"
#include "simulate.hpp"
#include "stats.hpp"

namespace jumpsim {

// Fixed harness thresholds; these are choices of the test harness, not
// claims from the theory being exercised.
inline constexpr double kPValueFloor = 0.01;
inline constexpr double kSlopeTol = 0.3;
inline constexpr double kExponentTol = 0.25;
inline constexpr double kHittingBandFactor = 10.0;
inline constexpr double kOccupationShapeFactor = 20.0;
inline constexpr double kPlateauFactor = 1.1;

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::vector<CriterionResult> criteria;

  bool passed() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return true;
  }

  void add(std::string name, bool ok, std::string detail) {
    criteria.push_back({std::move(name), ok, std::move(detail)});
  }

  std::string text_summary() const {
    std::ostringstream os;
    os << "scenario " << scenario << ": "
       << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : criteria)
      os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": "
         << c.detail << "\n";
    return os.str();
  }

  std::string csv_rows() const {
    std::ostringstream os;
    for (const auto& c : criteria)
      os << scenario << "," << c.name << "," << (c.passed ? "pass" : "fail")
         << ",\"" << c.detail << "\"\n";
    return os.str();
  }
};

inline std::string report_csv_header() {
  return "scenario,criterion,verdict,detail\n";
}

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------
// density decay
// ---------------------------------------------------------------------

struct DensityDecayScenario {
  std::uint64_t seed = 20240817;
  std::size_t n = 50000;
  Exec exec;
  std::vector<double> small_t_grid = {0.02, 0.04, 0.08, 0.16};
  std::vector<double> plateau_grid = {1.0, 2.0, 4.0};
  std::vector<double> offdiag_t_grid = {0.025, 0.05, 0.1};
  double bandwidth = 0.05;
  double eps_min = 0.01;
};

inline Report run_density_decay(const DensityDecayScenario& s) {
  if (s.small_t_grid.size() < 3)
    throw std::invalid_argument("density_decay: t grid needs >= 3 points");
  Report rep;
  rep.scenario = "density_decay";
  KernelParams k = make_isotropic_kernel(1, 1.0, 1.0);
  Vec origin{0.0};
  double d_over_alpha = double(k.dim()) / k.alpha();

  // on-diagonal slope at small t
  std::vector<double> est;
  for (double t : s.small_t_grid)
    est.push_back(estimate_density(k, t, origin, origin, s.n, s.bandwidth,
                                   s.seed, s.eps_min, s.exec)
                      .mean);
  double slope = loglog_slope(s.small_t_grid, est);
  bool slope_ok = std::abs(slope + d_over_alpha) <= kSlopeTol;
  rep.add("on_diagonal_slope", slope_ok,
          "fitted " + detail::fmt(slope) + " target " +
              detail::fmt(-d_over_alpha) + " +/- " + detail::fmt(kSlopeTol));

  // large-t plateau
  std::vector<double> plat;
  for (double t : s.plateau_grid)
    plat.push_back(estimate_density(k, t, origin, origin, s.n, s.bandwidth,
                                    s.seed, s.eps_min, s.exec)
                       .mean);
  double pmax = *std::max_element(plat.begin(), plat.end());
  double pmin = *std::min_element(plat.begin(), plat.end());
  bool plat_ok = pmax <= kPlateauFactor * pmin;
  rep.add("large_t_plateau", plat_ok,
          "max/min = " + detail::fmt(pmax / pmin) + " limit " +
              detail::fmt(kPlateauFactor));

  // off-diagonal: |x-y| >= 1/16 fixed, estimate shrinks as t shrinks
  Vec y{0.5};
  std::vector<double> off;
  for (double t : s.offdiag_t_grid)
    off.push_back(estimate_density(k, t, origin, y, s.n, s.bandwidth, s.seed,
                                   s.eps_min, s.exec)
                      .mean);
  bool off_ok = true;
  for (std::size_t i = 1; i < off.size(); ++i)
    if (off[i] < off[i - 1]) off_ok = false;
  std::string off_detail;
  for (double v : off) off_detail += detail::fmt(v) + " ";
  rep.add("off_diagonal_decrease", off_ok, "estimates (t asc): " + off_detail);

  // killed-density positivity at t = 1/2 (slow kernel so survival in the
  // ball is not a rare event)
  KernelParams ks = make_isotropic_kernel(1, 1.0, 0.1);
  Domain ball = Domain::ball(origin, 0.3);
  auto kd = estimate_killed_density(ks, 0.5, origin, origin, ball, 20000,
                                    s.bandwidth, s.seed, s.eps_min, s.exec);
  rep.add("killed_density_positive", kd.ci_lo > 0.0,
          "estimate " + detail::fmt(kd.mean) + " ci_lo " +
              detail::fmt(kd.ci_lo));
  return rep;
}

// ---------------------------------------------------------------------
// exit-time scaling
// ---------------------------------------------------------------------

struct ExitScalingScenario {
  std::uint64_t seed = 20240818;
  std::size_t n = 5000;
  Exec exec;
  std::vector<double> r_grid = {0.05, 0.1, 0.2, 0.4};
  double eps_min = 0.01;
};

inline Report run_exit_scaling(const ExitScalingScenario& s) {
  if (s.r_grid.size() < 2)
    throw std::invalid_argument("exit_scaling: r grid needs >= 2 points");
  Report rep;
  rep.scenario = "exit_scaling";
  KernelParams k = make_isotropic_kernel(1, 1.0, 1.0);
  Vec origin{0.0};
  double r_big = s.r_grid.back();
  Domain biggest = Domain::ball(origin, r_big);
  double horizon = pilot_horizon(k, origin, biggest, s.eps_min, s.seed);
  SimConfig cfg{s.eps_min, horizon, biggest, s.seed};

  auto exit_times_from = [&](const Vec& start, std::uint64_t purpose,
                             std::vector<std::vector<double>>& cols) {
    cols.assign(s.r_grid.size(), std::vector<double>(s.n));
    detail::run_replicas(s.n, s.seed, purpose, s.exec,
                         [&](std::size_t i, Rng& rng) {
                           Path path = simulate_path(k, start, cfg, rng);
                           for (std::size_t j = 0; j < s.r_grid.size(); ++j) {
                             Domain dom = Domain::ball(origin, s.r_grid[j]);
                             auto ex = dom.contains(start)
                                           ? first_exit(path, dom)
                                           : std::optional<ExitInfo>{
                                                 ExitInfo{0.0, start}};
                             cols[j][i] = ex ? ex->time : path.t_final;
                           }
                           return 0.0;
                         });
  };

  std::vector<std::vector<double>> center_cols;
  exit_times_from(origin, kPurposeMain, center_cols);

  std::vector<double> means;
  bool positive = true;
  for (auto& col : center_cols) {
    auto ms = mean_stderr(col);
    means.push_back(ms.mean);
    if (!(ms.mean - kZ95 * ms.std_error > 0.0)) positive = false;
  }
  rep.add("all_positive", positive, "grid means, CI excluding 0");

  // pathwise: same replica, bigger ball, later exit
  bool mono = true;
  for (std::size_t i = 0; i < s.n && mono; ++i)
    for (std::size_t j = 1; j < s.r_grid.size(); ++j)
      if (center_cols[j][i] < center_cols[j - 1][i]) {
        mono = false;
        break;
      }
  rep.add("pathwise_monotone_in_r", mono, "exact on shared seeds");

  double expo = loglog_slope(s.r_grid, means);
  double alpha = k.alpha();
  double alt = 2.0 * alpha / double(k.dim());
  bool expo_ok = std::abs(expo - alpha) <= kExponentTol ||
                 std::abs(expo - alt) <= kExponentTol;
  rep.add("fitted_exponent", expo_ok,
          "fitted " + detail::fmt(expo) + " vs alpha=" + detail::fmt(alpha) +
              " and 2a/d=" + detail::fmt(alt) + " +/- " +
              detail::fmt(kExponentTol));

  // off-center starts at 0.7 r: positivity and bounded ratio to center
  bool off_positive = true, ratio_ok = true;
  std::string ratios;
  for (std::size_t j = 0; j < s.r_grid.size(); ++j) {
    double r = s.r_grid[j];
    Vec start{0.7 * r};
    Domain dom = Domain::ball(origin, r);
    auto res = estimate_mean_exit_time(k, start, dom, s.n,
                                       s.seed + 101 + j, s.eps_min, s.exec);
    if (!(res.ci_lo > 0.0)) off_positive = false;
    double ratio = means[j] / res.mean;
    if (ratio > kHittingBandFactor || ratio < 1.0 / kHittingBandFactor)
      ratio_ok = false;
    ratios += detail::fmt(ratio) + " ";
  }
  rep.add("off_center_positive", off_positive, "start at 0.7r, CI > 0");
  rep.add("center_off_center_ratio", ratio_ok,
          "ratios " + ratios + "within factor " +
              detail::fmt(kHittingBandFactor));
  return rep;
}

// ---------------------------------------------------------------------
// hitting linearity
// ---------------------------------------------------------------------

struct HittingLinearityScenario {
  std::uint64_t seed = 20240819;
  std::size_t n = 100000;
  Exec exec;
  std::vector<double> volume_fractions = {0.001, 0.004, 0.016};
  double eps_min = 0.01;
};

inline Report run_hitting_linearity(const HittingLinearityScenario& s) {
  if (s.volume_fractions.empty())
    throw std::invalid_argument("hitting_linearity: empty volume grid");
  Report rep;
  rep.scenario = "hitting_linearity";
  KernelParams k = make_isotropic_kernel(1, 1.0, 1.0);
  Vec origin{0.0};
  Domain confine = Domain::ball(origin, 0.5);  // |confine| = 1
  Vec target_center{0.25};

  double horizon = pilot_horizon(k, origin, confine, s.eps_min, s.seed);
  SimConfig cfg{s.eps_min, horizon, confine, s.seed};

  // shared paths across the whole volume grid
  std::vector<Domain> targets;
  for (double vf : s.volume_fractions)
    targets.push_back(Domain::ball(target_center, 0.5 * vf));  // |A| = vf
  std::vector<std::vector<double>> hits(targets.size(),
                                        std::vector<double>(s.n, 0.0));
  detail::run_replicas(s.n, s.seed, kPurposeMain, s.exec,
                       [&](std::size_t i, Rng& rng) {
                         Path path = simulate_path(k, origin, cfg, rng);
                         for (std::size_t j = 0; j < targets.size(); ++j)
                           if (hitting_time(path, targets[j]))
                             hits[j][i] = 1.0;
                         return 0.0;
                       });

  bool positive = true, band_ok = true;
  double ratio_min = 1e300, ratio_max = 0.0;
  std::string detail_str;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::size_t cnt = 0;
    for (double v : hits[j]) cnt += (v == 1.0);
    auto res = detail::summarize_binomial(cnt, s.n, 0.0);
    if (!(res.ci_lo > 0.0)) positive = false;
    double per_vol = res.mean / targets[j].volume();
    ratio_min = std::min(ratio_min, per_vol);
    ratio_max = std::max(ratio_max, per_vol);
    detail_str += detail::fmt(per_vol) + " ";
  }
  if (ratio_max > kHittingBandFactor * ratio_min) band_ok = false;
  rep.add("all_positive", positive, "every target hit with CI > 0");
  rep.add("linear_band", band_ok,
          "estimate/|A|: " + detail_str + "(band factor " +
              detail::fmt(kHittingBandFactor) + ")");

  // degenerate target: |A| = 0 is unhittable
  Domain null_target = Domain::ball(target_center, 0.0);
  std::size_t null_hits = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng(s.seed, i, kPurposeMain);
    Path path = simulate_path(k, origin, cfg, rng);
    if (hitting_time(path, null_target)) ++null_hits;
  }
  rep.add("null_set_unhittable", null_hits == 0,
          std::to_string(null_hits) + " hits of a measure-zero target");

  // target = confine: certain hit
  auto full = estimate_hitting_prob(k, origin, confine, confine, 1000, s.seed,
                                    s.eps_min, s.exec);
  rep.add("target_equals_confine", full.mean == 1.0,
          "probability " + detail::fmt(full.mean));
  return rep;
}

// ---------------------------------------------------------------------
// occupation theorem
// ---------------------------------------------------------------------

struct OccupationScenario {
  std::uint64_t seed = 20240820;
  std::size_t n = 5000;
  Exec exec;
  std::vector<double> volume_fractions = {0.05, 0.1, 0.2, 0.4, 0.8};
  std::vector<double> start_offsets = {0.0, -0.2, 0.2};  // inside Q(x0, R/2)
  double R = 1.0;
  double eps_min = 0.01;
};

inline Report run_occupation_theorem(const OccupationScenario& s) {
  if (s.volume_fractions.empty())
    throw std::invalid_argument("occupation: empty volume grid");
  Report rep;
  rep.scenario = "occupation";
  KernelParams k = make_isotropic_kernel(1, 1.0, 1.0);
  Vec origin{0.0};
  Domain Q = Domain::cube(origin, s.R);
  double horizon = pilot_horizon(k, origin, Q, s.eps_min, s.seed);
  SimConfig cfg{s.eps_min, horizon, Q, s.seed};

  std::vector<Domain> nested;
  for (double vf : s.volume_fractions)
    nested.push_back(Domain::cube(origin, vf * s.R));

  // scattered union with the same total volume as the 0.1 member:
  // four cubes of side 0.025 R
  std::vector<Domain> scattered;
  for (double c : {-0.35, -0.15, 0.15, 0.35})
    scattered.push_back(Domain::cube(Vec{c * s.R}, 0.025 * s.R));

  bool positive = true, mono = true, scatter_positive = true;
  bool ratio_ok = true, full_matches = true;
  for (double off : s.start_offsets) {
    Vec start{off * s.R};
    std::vector<std::vector<double>> occ(nested.size(),
                                         std::vector<double>(s.n));
    std::vector<double> occ_scatter(s.n), tau(s.n), occ_full(s.n);
    detail::run_replicas(
        s.n, s.seed, kPurposeMain, s.exec, [&](std::size_t i, Rng& rng) {
          Path path = simulate_path(k, start, cfg, rng);
          double t_end = path.t_final;
          tau[i] = t_end;
          for (std::size_t j = 0; j < nested.size(); ++j)
            occ[j][i] = occupation_time(path, nested[j], t_end);
          occ_full[i] = occupation_time(path, Q, t_end);
          double sc = 0.0;  // disjoint pieces, so the union is the sum
          for (const auto& piece : scattered)
            sc += occupation_time(path, piece, t_end);
          occ_scatter[i] = sc;
          return 0.0;
        });
    for (auto& col : occ) {
      auto ms = mean_stderr(col);
      if (!(ms.mean - kZ95 * ms.std_error > 0.0)) positive = false;
    }
    for (std::size_t i = 0; i < s.n && mono; ++i)
      for (std::size_t j = 1; j < nested.size(); ++j)
        if (occ[j][i] < occ[j - 1][i] - 1e-12) {
          mono = false;
          break;
        }
    auto ms_sc = mean_stderr(occ_scatter);
    if (!(ms_sc.mean - kZ95 * ms_sc.std_error > 0.0)) scatter_positive = false;
    double solid_mean = mean_stderr(occ[1]).mean;  // the 0.1 member
    double ratio = solid_mean / ms_sc.mean;
    if (ratio > kOccupationShapeFactor || ratio < 1.0 / kOccupationShapeFactor)
      ratio_ok = false;
    // occupation of Q itself reproduces the exit time, path by path
    for (std::size_t i = 0; i < s.n; ++i)
      if (occ_full[i] != tau[i]) full_matches = false;
  }
  rep.add("all_positive", positive, "nested grid, every start, CI > 0");
  rep.add("pathwise_monotone_nested", mono, "exact on shared seeds");
  rep.add("scattered_positive", scatter_positive,
          "union of small cubes, volume fraction 0.1");
  rep.add("scattered_vs_solid_ratio", ratio_ok,
          "same-volume shapes within factor " +
              detail::fmt(kOccupationShapeFactor));
  rep.add("full_cube_reproduces_exit_time", full_matches,
          "occupation(Q) == tau_Q on every path");
  return rep;
}

// ---------------------------------------------------------------------
// support theorem
// ---------------------------------------------------------------------

struct SupportScenario {
  std::uint64_t seed = 20240821;
  std::size_t n = 10000;
  Exec exec;
  double kappa = 0.05;  // slow kernel so desk-scale tube events are visible
  double eps_min = 0.01;
  std::vector<double> eps_grid = {0.2, 0.25, 0.35};
};

inline TubeSpec make_l_tube(double eps) {
  TubeSpec tube;
  tube.waypoints = {{0.0, Vec{0.0, 0.0}},
                    {0.5, Vec{0.25, 0.0}},
                    {1.0, Vec{0.25, 0.25}}};
  tube.epsilon = eps;
  return tube;
}

inline Report run_support_theorem(const SupportScenario& s) {
  Report rep;
  rep.scenario = "support";
  KernelParams k = make_isotropic_kernel(2, 1.0, s.kappa);

  // (a) single short segment
  TubeSpec seg;
  seg.waypoints = {{0.0, Vec{0.0, 0.0}}, {1.0, Vec{0.1, 0.0}}};
  seg.epsilon = 0.25;
  auto seg_res =
      estimate_tube_probability(k, seg, s.n, s.seed, s.eps_min, s.exec);
  rep.add("segment_positive", seg_res.ci_lo > 0.0,
          "p " + detail::fmt(seg_res.mean) + " ci_lo " +
              detail::fmt(seg_res.ci_lo));

  // (b) L-shaped path
  TubeSpec ltube = make_l_tube(0.25);
  auto l_res =
      estimate_tube_probability(k, ltube, s.n, s.seed, s.eps_min, s.exec);
  rep.add("l_shape_positive", l_res.ci_lo > 0.0,
          "p " + detail::fmt(l_res.mean) + " ci_lo " +
              detail::fmt(l_res.ci_lo));

  // (c) polygonalized quarter arc of radius 0.25
  TubeSpec arc;
  for (int i = 0; i <= 8; ++i) {
    double u = double(i) / 8.0;
    double th = u * std::numbers::pi / 2.0;
    arc.waypoints.push_back(
        {u == 0.0 ? 0.0 : u,
         Vec{0.25 * std::sin(th), 0.25 * (1.0 - std::cos(th))}});
  }
  arc.epsilon = 0.25;
  auto arc_res =
      estimate_tube_probability(k, arc, s.n, s.seed, s.eps_min, s.exec);
  rep.add("arc_positive", arc_res.ci_lo > 0.0,
          "p " + detail::fmt(arc_res.mean) + " ci_lo " +
              detail::fmt(arc_res.ci_lo));

  // epsilon-monotonicity, exact on shared paths
  SimConfig cfg{s.eps_min, 1.0, std::nullopt, s.seed};
  std::vector<std::size_t> counts(s.eps_grid.size(), 0);
  std::vector<std::vector<double>> ok(s.eps_grid.size(),
                                      std::vector<double>(s.n, 0.0));
  Vec x0{0.0, 0.0};
  detail::run_replicas(s.n, s.seed, kPurposeMain, s.exec,
                       [&](std::size_t i, Rng& rng) {
                         Path path = simulate_path(k, x0, cfg, rng);
                         for (std::size_t j = 0; j < s.eps_grid.size(); ++j) {
                           TubeSpec t = make_l_tube(s.eps_grid[j]);
                           if (path_in_tube(path, t)) ok[j][i] = 1.0;
                         }
                         return 0.0;
                       });
  bool mono = true;
  for (std::size_t i = 0; i < s.n && mono; ++i)
    for (std::size_t j = 1; j < s.eps_grid.size(); ++j)
      if (ok[j][i] < ok[j - 1][i]) {
        mono = false;
        break;
      }
  rep.add("epsilon_monotone", mono, "pathwise indicator nesting, exact");

  // giant tube: essentially certain
  TubeSpec wide;
  wide.waypoints = {{0.0, Vec{0.0, 0.0}}, {1.0, Vec{0.0, 0.0}}};
  wide.epsilon = 10.0;
  auto wide_res =
      estimate_tube_probability(k, wide, 2000, s.seed, s.eps_min, s.exec);
  rep.add("wide_tube_near_certain", wide_res.mean >= 0.9,
          "p " + detail::fmt(wide_res.mean));
  return rep;
}

// ---------------------------------------------------------------------
// Meyer equivalence
// ---------------------------------------------------------------------

struct MeyerScenario {
  std::uint64_t seed = 20240822;
  std::size_t n = 2000;
  Exec exec;
  std::vector<double> beta_grid = {0.25, 0.5, 0.75};
  double eps_min = 0.05;
  double ball_radius = 0.3;
};

inline Report run_meyer_equivalence(const MeyerScenario& s) {
  Report rep;
  rep.scenario = "meyer";
  KernelParams k = make_isotropic_kernel(2, 1.0, 1.0);
  Vec x0{0.0, 0.0};
  Domain ball = Domain::ball(x0, s.ball_radius);
  double horizon = pilot_horizon(k, x0, ball, s.eps_min, s.seed);
  SimConfig cfg{s.eps_min, horizon, ball, s.seed};

  auto direct = detail::run_replicas(s.n, s.seed, kPurposeMain, s.exec,
                                     [&](std::size_t, Rng& rng) {
                                       return simulate_path(k, x0, cfg, rng)
                                           .t_final;
                                     });
  for (std::size_t bi = 0; bi < s.beta_grid.size(); ++bi) {
    double beta = s.beta_grid[bi];
    auto layered = detail::run_replicas(
        s.n, s.seed, 100 + 2 * bi, s.exec, [&](std::size_t, Rng& rng) {
          return meyer_compose(k, x0, beta, cfg, rng).t_final;
        });
    auto ks = ks_two_sample(direct, layered);
    rep.add("ks_beta_" + detail::fmt(beta), ks.p_value > kPValueFloor,
            "D " + detail::fmt(ks.statistic) + " p " +
                detail::fmt(ks.p_value));
  }

  // Single-insertion event at desk scale: displacement z of length 0.4,
  // beta = |z|/2; exactly one inserted jump before t0, landing in
  // B(z, delta).
  {
    Vec z{0.4, 0.0};
    double beta = 0.2;
    double gamma = 0.2;
    double delta = std::min(gamma / 3.0, 0.4 / 6.0);
    double t0 = 0.04;
    Domain landing = Domain::ball(z, delta);
    SimConfig mc_cfg{s.eps_min / 2.0, t0, std::nullopt, s.seed};
    std::size_t n_ev = 10000;
    auto hits = detail::run_replicas(
        n_ev, s.seed, 200, s.exec, [&](std::size_t, Rng& rng) {
          std::vector<double> ins;
          Path path = meyer_compose(k, x0, beta, mc_cfg, rng, &ins);
          if (ins.size() != 1) return 0.0;
          // displacement of the inserted jump
          for (std::size_t e = 1; e < path.events.size(); ++e)
            if (path.events[e].t == ins[0]) {
              Vec dw = path.events[e].x - path.events[e - 1].x;
              return landing.contains(dw) ? 1.0 : 0.0;
            }
          return 0.0;
        });
    std::size_t cnt = 0;
    for (double v : hits) cnt += (v == 1.0);
    auto res = detail::summarize_binomial(cnt, n_ev, 0.0);
    rep.add("single_insertion_event", res.ci_lo > 0.0,
            "p " + detail::fmt(res.mean) + " ci_lo " +
                detail::fmt(res.ci_lo));
  }
  return rep;
}

// ---------------------------------------------------------------------
// suite driver
// ---------------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 0;  // 0 = per-scenario defaults
  Exec exec;
};

inline std::vector<std::string> scenario_names() {
  return {"density_decay", "exit_scaling", "hitting_linearity",
          "occupation",    "support",      "meyer"};
}

inline Report run_scenario(const std::string& name, const SuiteOptions& opt) {
  auto seeded = [&](auto scn) {
    if (opt.seed) scn.seed = opt.seed;
    scn.exec = opt.exec;
    return scn;
  };
  if (name == "density_decay")
    return run_density_decay(seeded(DensityDecayScenario{}));
  if (name == "exit_scaling")
    return run_exit_scaling(seeded(ExitScalingScenario{}));
  if (name == "hitting_linearity")
    return run_hitting_linearity(seeded(HittingLinearityScenario{}));
  if (name == "occupation")
    return run_occupation_theorem(seeded(OccupationScenario{}));
  if (name == "support") return run_support_theorem(seeded(SupportScenario{}));
  if (name == "meyer") return run_meyer_equivalence(seeded(MeyerScenario{}));
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace jumpsim
