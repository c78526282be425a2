#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "domain.hpp"
#include "kernel.hpp"
#include "path.hpp"
#include "rng.hpp"
#include "vec.hpp"

namespace jumpsim {

struct SimConfig {
  double eps_min = 0.01;          // small-jump cutoff, in (0,1)
  double t_max = 1.0;             // horizon
  std::optional<Domain> stop_domain;  // stop at first jump landing outside
  std::uint64_t seed = 0;         // master seed
  // Asmussen-Rosinski style Gaussian replacement of the discarded
  // sub-eps_min jumps; off by default so paths stay exactly piecewise
  // constant.  Honored by simulate_path only.
  bool gaussian_correction = false;

  void validate() const {
    if (!(eps_min > 0.0 && eps_min < 1.0))
      throw std::invalid_argument("SimConfig: eps_min must be in (0,1)");
    if (t_max < 0.0)
      throw std::invalid_argument("SimConfig: t_max must be >= 0");
  }
};

// Cutoff for which the discarded quadratic variation per unit time,
// bounded by kappa2 sigma eps^{2-alpha} / (2-alpha), is at most qv_tol.
inline double default_eps_min(const KernelParams& p, double qv_tol = 1e-4) {
  double s = p.kappa2() * sphere_surface(p.dim());
  return std::pow(qv_tol * (2.0 - p.alpha()) / s, 1.0 / (2.0 - p.alpha()));
}

// Dominating rate of jumps with magnitude in [lo, hi).
inline double dominating_rate(const KernelParams& p, double lo, double hi) {
  double a = p.alpha();
  return p.kappa2() * sphere_surface(p.dim()) *
         (std::pow(lo, -a) - std::pow(hi, -a)) / a;
}

// Variance per unit time (per coordinate) of the discarded jumps below eps.
inline double small_jump_variance(const KernelParams& p, double eps) {
  // int_{|w|<eps} w_1^2 J dw with isotropic envelope: sigma kappa / d *
  // eps^{2-alpha} / (2-alpha); uses kappa1 (the modulation value in the
  // isotropic case) as the best available constant.
  double a = p.alpha();
  return p.kappa1() * sphere_surface(p.dim()) / double(p.dim()) *
         std::pow(eps, 2.0 - a) / (2.0 - a);
}

// Holding-interval waits are rounded to multiples of this dyadic quantum.
// With event times on a common grid, interval lengths, their sums, and
// the telescoping identity occupation(whole set) == t_final are all exact
// in double precision (no partial sum ever needs more than 53 bits).
// The relative perturbation of a typical wait is ~1e-7.
inline constexpr double kTimeQuantum = 0x1p-30;

namespace detail {

inline double quantize_wait(double w) {
  return std::max(kTimeQuantum, std::round(w / kTimeQuantum) * kTimeQuantum);
}

// radius proposal for the isotropic density ~ r^{-1-alpha} on [lo, hi)
inline double propose_radius(double alpha, double lo, double hi, double u) {
  double a = std::pow(lo, -alpha), b = std::pow(hi, -alpha);
  return std::pow(a - u * (a - b), -1.0 / alpha);
}

}  // namespace detail

// Exact simulation by Poisson thinning of the process with kernel
// J(x,y) 1{|y-x| >= eps_min}.  Waiting times are exponential at the
// dominating rate; rejected proposals advance time but not position.
inline Path simulate_path(const KernelParams& p, const Vec& x0,
                          const SimConfig& cfg, Rng& rng) {
  cfg.validate();
  if (x0.dim() != p.dim())
    throw std::invalid_argument("simulate_path: x0 dimension mismatch");
  if (cfg.stop_domain && !cfg.stop_domain->contains(x0))
    throw std::invalid_argument("simulate_path: x0 outside stop_domain");

  Path path;
  path.events.push_back({0.0, x0});
  double lambda = dominating_rate(p, cfg.eps_min, 1.0);
  double gauss_sd = cfg.gaussian_correction
                        ? std::sqrt(small_jump_variance(p, cfg.eps_min))
                        : 0.0;
  double t = 0.0;
  Vec x = x0;
  while (true) {
    double wait = detail::quantize_wait(rng.exponential(lambda));
    if (t + wait > cfg.t_max) break;
    t += wait;
    double r = detail::propose_radius(p.alpha(), cfg.eps_min, 1.0,
                                      rng.uniform());
    Vec w = r * rng.unit_direction(p.dim());
    if (rng.uniform() * p.kappa2() > p.modulation(x, x + w)) continue;
    Vec xn = x + w;
    if (gauss_sd > 0.0) {
      double s = gauss_sd * std::sqrt(wait);
      for (std::size_t i = 0; i < xn.dim(); ++i) xn[i] += s * rng.normal();
    }
    path.events.push_back({t, xn});
    x = xn;
    if (cfg.stop_domain && !cfg.stop_domain->contains(x)) {
      path.t_final = t;
      path.stop_reason = StopReason::DomainExited;
      return path;
    }
  }
  path.t_final = cfg.t_max;
  path.stop_reason = StopReason::HorizonReached;
  return path;
}

// Layered construction: simulate the beta-truncated process (jumps in
// [eps_min, beta)) and insert jumps of magnitude in [beta, 1) whenever
// the accumulated compensator
//   C_r = int_0^r lambda(position_s) ds,  lambda = large_jump_rate
// crosses an independent unit-exponential clock.  The composed path has
// the same law as simulate_path.
inline Path meyer_compose(const KernelParams& p, const Vec& x0, double beta,
                          const SimConfig& cfg, Rng& rng,
                          std::vector<double>* insertion_times = nullptr) {
  cfg.validate();
  if (!(beta > cfg.eps_min && beta < 1.0))
    throw std::invalid_argument("meyer_compose: need eps_min < beta < 1");
  if (x0.dim() != p.dim())
    throw std::invalid_argument("meyer_compose: x0 dimension mismatch");
  if (cfg.stop_domain && !cfg.stop_domain->contains(x0))
    throw std::invalid_argument("meyer_compose: x0 outside stop_domain");

  Path path;
  path.events.push_back({0.0, x0});
  double lambda_small = dominating_rate(p, cfg.eps_min, beta);
  double t = 0.0;
  Vec x = x0;
  double slope = large_jump_rate(p, x, beta);  // constant between jumps
  double clock = rng.exponential();            // next S_k, compensator resets
  double comp = 0.0;                           // C since last insertion

  auto land = [&](double tj, const Vec& xn) -> bool {
    path.events.push_back({tj, xn});
    x = xn;
    slope = p.isotropic() ? slope : large_jump_rate(p, x, beta);
    if (cfg.stop_domain && !cfg.stop_domain->contains(x)) {
      path.t_final = tj;
      path.stop_reason = StopReason::DomainExited;
      return true;
    }
    return false;
  };

  while (true) {
    double dt_prop = detail::quantize_wait(rng.exponential(lambda_small));
    // crossing time of the current clock, exact on the holding interval
    double dt_cross = detail::quantize_wait((clock - comp) / slope);
    double t_prop = t + dt_prop;
    double t_cross = t + dt_cross;
    if (dt_cross <= dt_prop) {
      if (t_cross > cfg.t_max) break;
      t = t_cross;
      comp = 0.0;
      clock = rng.exponential();
      Vec w = sample_large_jump(p, x, beta, rng);
      if (insertion_times) insertion_times->push_back(t);
      if (land(t, x + w)) return path;
    } else {
      if (t_prop > cfg.t_max) break;
      comp += slope * (t_prop - t);
      t = t_prop;
      double r = detail::propose_radius(p.alpha(), cfg.eps_min, beta,
                                        rng.uniform());
      Vec w = r * rng.unit_direction(p.dim());
      if (rng.uniform() * p.kappa2() > p.modulation(x, x + w)) continue;
      if (land(t, x + w)) return path;
    }
  }
  path.t_final = cfg.t_max;
  path.stop_reason = StopReason::HorizonReached;
  return path;
}

}  // namespace jumpsim
