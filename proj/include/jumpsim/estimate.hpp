#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domain.hpp"
#include "kernel.hpp"
#include "path.hpp"
#include "rng.hpp"
#include "simulate.hpp"
#include "stats.hpp"
#include "vec.hpp"

namespace jumpsim {

struct EstimateResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  double ci_lo = 0.0, ci_hi = 0.0;
  double censored_frac = 0.0;
  double elapsed = 0.0;  // wall seconds
};

inline constexpr double kZ95 = 1.959963984540054;

struct Exec {
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline unsigned resolve_threads(const Exec& exec) {
  if (exec.threads) return exec.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs f(replica_index, rng) for each replica.  Each replica's stream is
// a pure function of (seed, purpose, index), and results land in a
// vector indexed by replica, so output is invariant to worker count and
// scheduling.
template <typename F>
std::vector<double> run_replicas(std::size_t n, std::uint64_t seed,
                                 std::uint64_t purpose, const Exec& exec,
                                 F&& f) {
  std::vector<double> out(n);
  unsigned workers = std::min<std::size_t>(resolve_threads(exec), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng(seed, i, purpose);
      out[i] = f(i, rng);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = 64;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t lo = next.fetch_add(chunk);
        if (lo >= n) return;
        std::size_t hi = std::min(lo + chunk, n);
        for (std::size_t i = lo; i < hi; ++i) {
          Rng rng(seed, i, purpose);
          out[i] = f(i, rng);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

inline EstimateResult summarize(const std::vector<double>& vals,
                                double elapsed, double censored = 0.0) {
  auto ms = mean_stderr(vals);
  EstimateResult r;
  r.mean = ms.mean;
  r.std_error = ms.std_error;
  r.n = vals.size();
  r.ci_lo = ms.mean - kZ95 * ms.std_error;
  r.ci_hi = ms.mean + kZ95 * ms.std_error;
  r.censored_frac = censored;
  r.elapsed = elapsed;
  return r;
}

// Binomial summary: Wilson interval at rare counts to avoid zero-width
// CIs; CI clipped to [0,1].
inline EstimateResult summarize_binomial(std::size_t successes, std::size_t n,
                                         double elapsed) {
  if (n < 2) throw std::invalid_argument("binomial estimate: n >= 2 required");
  EstimateResult r;
  double p = double(successes) / double(n);
  r.mean = p;
  r.std_error = std::sqrt(p * (1.0 - p) / double(n));
  r.n = n;
  if (successes < 5 || n - successes < 5) {
    Interval w = wilson_interval(successes, n);
    r.ci_lo = w.lo;
    r.ci_hi = w.hi;
  } else {
    r.ci_lo = std::max(0.0, p - kZ95 * r.std_error);
    r.ci_hi = std::min(1.0, p + kZ95 * r.std_error);
  }
  r.elapsed = elapsed;
  return r;
}

}  // namespace detail

// purpose tags keeping pilot streams disjoint from main replicas
inline constexpr std::uint64_t kPurposeMain = 0;
inline constexpr std::uint64_t kPurposePilot = 1;

// Exact containment for the supported shapes (used by precondition checks).
inline bool domain_subset(const Domain& inner, const Domain& outer) {
  std::size_t d = inner.center.dim();
  double c = dist(inner.center, outer.center);
  using S = Domain::Shape;
  if (inner.shape == S::Ball && outer.shape == S::Ball)
    return c + inner.extent <= outer.extent;
  if (inner.shape == S::Cube && outer.shape == S::Cube) {
    for (std::size_t i = 0; i < d; ++i)
      if (std::abs(inner.center[i] - outer.center[i]) + 0.5 * inner.extent >
          0.5 * outer.extent)
        return false;
    return true;
  }
  if (inner.shape == S::Ball && outer.shape == S::Cube) {
    for (std::size_t i = 0; i < d; ++i)
      if (std::abs(inner.center[i] - outer.center[i]) + inner.extent >
          0.5 * outer.extent)
        return false;
    return true;
  }
  // cube in ball: farthest corner
  double half = 0.5 * inner.extent;
  double corner2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double v = std::abs(inner.center[i] - outer.center[i]) + half;
    corner2 += v * v;
  }
  return std::sqrt(corner2) <= outer.extent;
}

// Horizon from a 100-path pilot: 50x the coarse mean exit time, so
// censoring of the main run is negligible; pilot streams are disjoint
// from the main replicas.
inline double pilot_horizon(const KernelParams& p, const Vec& x,
                            const Domain& dom, double eps_min,
                            std::uint64_t seed, double max_horizon = 256.0) {
  double horizon = 1.0;
  for (int attempt = 0; horizon <= max_horizon; ++attempt) {
    SimConfig cfg{eps_min, horizon, dom, seed};
    std::size_t exited = 0;
    KahanSum sum;
    for (std::size_t i = 0; i < 100; ++i) {
      Rng rng(seed, i, kPurposePilot + std::uint64_t(attempt) * 2);
      Path path = simulate_path(p, x, cfg, rng);
      if (path.stop_reason == StopReason::DomainExited) ++exited;
      sum.add(path.t_final);
    }
    if (exited >= 50) return 50.0 * sum.value() / 100.0;
    horizon *= 4.0;
  }
  return max_horizon;  // give up growing; censoring will be reported
}

// E^x tau_dom by Monte Carlo; censored paths contribute the horizon and
// the censored fraction is reported.
inline EstimateResult estimate_mean_exit_time(const KernelParams& p,
                                              const Vec& x, const Domain& dom,
                                              std::size_t n,
                                              std::uint64_t seed,
                                              double eps_min = 0.01,
                                              const Exec& exec = {}) {
  if (!dom.contains(x))
    throw std::invalid_argument("estimate_mean_exit_time: x outside domain");
  if (n < 2) throw std::invalid_argument("estimate: n >= 2 required");
  detail::Stopwatch sw;
  double horizon = pilot_horizon(p, x, dom, eps_min, seed);
  SimConfig cfg{eps_min, horizon, dom, seed};
  std::atomic<std::size_t> censored{0};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        if (path.stop_reason == StopReason::HorizonReached)
          censored.fetch_add(1, std::memory_order_relaxed);
        return path.t_final;
      });
  return detail::summarize(vals, sw.seconds(),
                           double(censored.load()) / double(n));
}

// P^x(T_target < tau_confine): fraction of paths entering target before
// the first jump out of confine.  A start point already in the (open)
// target counts as an immediate hit.
inline EstimateResult estimate_hitting_prob(const KernelParams& p,
                                            const Vec& x, const Domain& target,
                                            const Domain& confine,
                                            std::size_t n, std::uint64_t seed,
                                            double eps_min = 0.01,
                                            const Exec& exec = {}) {
  if (!confine.contains(x))
    throw std::invalid_argument("estimate_hitting_prob: x outside confine");
  if (!domain_subset(target, confine))
    throw std::invalid_argument(
        "estimate_hitting_prob: target not contained in confine");
  if (n < 2) throw std::invalid_argument("estimate: n >= 2 required");
  detail::Stopwatch sw;
  if (target.contains(x)) {
    auto r = detail::summarize_binomial(n, n, sw.seconds());
    return r;
  }
  double horizon = pilot_horizon(p, x, confine, eps_min, seed);
  SimConfig cfg{eps_min, horizon, confine, seed};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        return hitting_time(path, target) ? 1.0 : 0.0;
      });
  std::size_t hits = 0;
  for (double v : vals) hits += (v == 1.0);
  return detail::summarize_binomial(hits, n, sw.seconds());
}

// E^x int_0^{tau_Q} 1_B(X_s) ds
inline EstimateResult estimate_occupation(const KernelParams& p, const Vec& x,
                                          const Domain& Q, const Domain& B,
                                          std::size_t n, std::uint64_t seed,
                                          double eps_min = 0.01,
                                          const Exec& exec = {}) {
  if (!domain_subset(B, Q))
    throw std::invalid_argument("estimate_occupation: B not contained in Q");
  if (!Q.contains(x))
    throw std::invalid_argument("estimate_occupation: x outside Q");
  if (n < 2) throw std::invalid_argument("estimate: n >= 2 required");
  detail::Stopwatch sw;
  double horizon = pilot_horizon(p, x, Q, eps_min, seed);
  SimConfig cfg{eps_min, horizon, Q, seed};
  std::atomic<std::size_t> censored{0};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        if (path.stop_reason == StopReason::HorizonReached)
          censored.fetch_add(1, std::memory_order_relaxed);
        return occupation_time(path, B, path.t_final);
      });
  return detail::summarize(vals, sw.seconds(),
                           double(censored.load()) / double(n));
}

// S_lambda 1_C(x) = E^x int_0^inf e^{-lambda t} 1_C(X_t) dt, computed in
// closed form per holding interval; the horizon tail bound tol/lambda is
// added to the CI width.
inline EstimateResult estimate_resolvent(const KernelParams& p, const Vec& x,
                                         const Domain& C, double lambda,
                                         std::size_t n, std::uint64_t seed,
                                         double eps_min = 0.01,
                                         double tol = 1e-4,
                                         const Exec& exec = {}) {
  if (lambda <= 0.0)
    throw std::invalid_argument("estimate_resolvent: lambda must be > 0");
  if (n < 2) throw std::invalid_argument("estimate: n >= 2 required");
  detail::Stopwatch sw;
  double horizon = std::log(1.0 / tol) / lambda;
  SimConfig cfg{eps_min, horizon, std::nullopt, seed};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        double acc = 0.0;
        for (std::size_t i = 0; i < path.events.size(); ++i) {
          if (!C.contains(path.events[i].x)) continue;
          double t0 = path.events[i].t;
          double t1 = (i + 1 < path.events.size()) ? path.events[i + 1].t
                                                   : path.t_final;
          acc += (std::exp(-lambda * t0) - std::exp(-lambda * t1)) / lambda;
        }
        return acc;
      });
  auto r = detail::summarize(vals, sw.seconds());
  double tail = tol / lambda;
  r.ci_lo -= tail;
  r.ci_hi += tail;
  return r;
}

// Ball-kernel density estimate of p(t, x, y): fraction of endpoints in
// B(y,h) over the ball volume.  Bias is O(h) and unmodeled.
inline EstimateResult estimate_density(const KernelParams& p, double t,
                                       const Vec& x, const Vec& y,
                                       std::size_t n, double h,
                                       std::uint64_t seed,
                                       double eps_min = 0.01,
                                       const Exec& exec = {}) {
  if (t <= 0.0) throw std::invalid_argument("estimate_density: t must be > 0");
  if (h <= 0.0) throw std::invalid_argument("estimate_density: h must be > 0");
  if (n < 1000)
    throw std::invalid_argument("estimate_density: n >= 1000 required");
  detail::Stopwatch sw;
  SimConfig cfg{eps_min, t, std::nullopt, seed};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        return dist(path.final_position(), y) < h ? 1.0 : 0.0;
      });
  std::size_t hits = 0;
  for (double v : vals) hits += (v == 1.0);
  auto r = detail::summarize_binomial(hits, n, sw.seconds());
  double vol = ball_volume_unit(p.dim()) * std::pow(h, double(p.dim()));
  r.mean /= vol;
  r.std_error /= vol;
  r.ci_lo /= vol;
  r.ci_hi /= vol;
  return r;
}

// Killed-density variant: endpoint in B(y,h) and no exit from B before t.
inline EstimateResult estimate_killed_density(const KernelParams& p, double t,
                                              const Vec& x, const Vec& y,
                                              const Domain& B, std::size_t n,
                                              double h, std::uint64_t seed,
                                              double eps_min = 0.01,
                                              const Exec& exec = {}) {
  if (t <= 0.0 || h <= 0.0)
    throw std::invalid_argument("estimate_killed_density: bad t or h");
  if (!B.contains(x))
    throw std::invalid_argument("estimate_killed_density: x outside B");
  detail::Stopwatch sw;
  SimConfig cfg{eps_min, t, B, seed};
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x, cfg, rng);
        if (path.stop_reason == StopReason::DomainExited) return 0.0;
        return dist(path.final_position(), y) < h ? 1.0 : 0.0;
      });
  std::size_t hits = 0;
  for (double v : vals) hits += (v == 1.0);
  auto r = detail::summarize_binomial(hits, n, sw.seconds());
  double vol = ball_volume_unit(p.dim()) * std::pow(h, double(p.dim()));
  r.mean /= vol;
  r.std_error /= vol;
  r.ci_lo /= vol;
  r.ci_hi /= vol;
  return r;
}

// Polygonal target path phi on [0, t0] with a tube of radius epsilon.
struct TubeSpec {
  std::vector<PathEvent> waypoints;  // (time, point), times increasing from 0
  double epsilon = 0.0;

  void validate() const {
    if (waypoints.size() < 2)
      throw std::invalid_argument("TubeSpec: need >= 2 waypoints");
    if (waypoints.front().t != 0.0)
      throw std::invalid_argument("TubeSpec: first waypoint must be at t=0");
    for (std::size_t i = 1; i < waypoints.size(); ++i)
      if (!(waypoints[i].t > waypoints[i - 1].t))
        throw std::invalid_argument(
            "TubeSpec: waypoint times must be strictly increasing");
    if (epsilon <= 0.0)
      throw std::invalid_argument("TubeSpec: epsilon must be > 0");
  }

  double t0() const { return waypoints.back().t; }
  const Vec& start() const { return waypoints.front().x; }

  Vec at(double t) const {
    if (t <= waypoints.front().t) return waypoints.front().x;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
      if (t <= waypoints[i].t) {
        double u = (t - waypoints[i - 1].t) /
                   (waypoints[i].t - waypoints[i - 1].t);
        return waypoints[i - 1].x + u * (waypoints[i].x - waypoints[i - 1].x);
      }
    }
    return waypoints.back().x;
  }
};

// sup_{s <= t0} |X_s - phi(s)| < eps, evaluated exactly: the position is
// constant per holding interval and phi is piecewise linear, so the sup
// restricted to an interval is attained at interval ends or interior
// waypoint times.
inline bool path_in_tube(const Path& path, const TubeSpec& tube) {
  double t0 = tube.t0();
  double eps = tube.epsilon;
  for (std::size_t i = 0; i < path.events.size(); ++i) {
    double lo = path.events[i].t;
    if (lo > t0) break;
    double hi = (i + 1 < path.events.size()) ? path.events[i + 1].t
                                             : path.t_final;
    hi = std::min(hi, t0);
    const Vec& x = path.events[i].x;
    if (dist(x, tube.at(lo)) >= eps) return false;
    if (dist(x, tube.at(hi)) >= eps) return false;
    for (const auto& wp : tube.waypoints)
      if (wp.t > lo && wp.t < hi && dist(x, wp.x) >= eps) return false;
  }
  return true;
}

// P^{x0}(sup_{s <= t0} |X_s - phi(s)| < eps)
inline EstimateResult estimate_tube_probability(const KernelParams& p,
                                                const TubeSpec& tube,
                                                std::size_t n,
                                                std::uint64_t seed,
                                                double eps_min = 0.01,
                                                const Exec& exec = {}) {
  tube.validate();
  if (n < 2) throw std::invalid_argument("estimate: n >= 2 required");
  detail::Stopwatch sw;
  SimConfig cfg{eps_min, tube.t0(), std::nullopt, seed};
  const Vec& x0 = tube.start();
  auto vals = detail::run_replicas(
      n, seed, kPurposeMain, exec, [&](std::size_t, Rng& rng) {
        Path path = simulate_path(p, x0, cfg, rng);
        return path_in_tube(path, tube) ? 1.0 : 0.0;
      });
  std::size_t hits = 0;
  for (double v : vals) hits += (v == 1.0);
  return detail::summarize_binomial(hits, n, sw.seconds());
}

}  // namespace jumpsim
