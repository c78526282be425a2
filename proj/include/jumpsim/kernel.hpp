#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "rng.hpp"
#include "vec.hpp"

namespace jumpsim {

// a(x,y) in [kappa1, kappa2]; the kernel is J(x,y) = a(x,y)|y-x|^{-d-alpha}
// for |y-x| < 1 and 0 beyond distance 1.
using Modulation = std::function<double(const Vec&, const Vec&)>;

class KernelParams {
 public:
  KernelParams(std::size_t d, double alpha, double kappa1, double kappa2,
               Modulation modulation = nullptr,
               std::string modulation_name = "isotropic")
      : d_(d),
        alpha_(alpha),
        kappa1_(kappa1),
        kappa2_(kappa2),
        modulation_(std::move(modulation)),
        modulation_name_(std::move(modulation_name)),
        clamp_warned_(std::make_shared<std::atomic<bool>>(false)) {
    if (d < 1 || d > kMaxDim)
      throw std::invalid_argument("KernelParams: dimension out of range");
    if (!(alpha > 0.0 && alpha < 2.0))
      throw std::invalid_argument("KernelParams: alpha must be in (0,2)");
    if (!(kappa1 > 0.0 && kappa2 >= kappa1))
      throw std::invalid_argument("KernelParams: need 0 < kappa1 <= kappa2");
  }

  std::size_t dim() const { return d_; }
  double alpha() const { return alpha_; }
  double kappa1() const { return kappa1_; }
  double kappa2() const { return kappa2_; }
  bool isotropic() const { return !modulation_; }
  const std::string& modulation_name() const { return modulation_name_; }

  // Symmetrized, clamped modulation value.  The raw user function is
  // forced into Assumption-compatible form; a warning is logged the
  // first time clamping fires.
  double modulation(const Vec& x, const Vec& y) const {
    if (!modulation_) return kappa1_;
    double a = 0.5 * (modulation_(x, y) + modulation_(y, x));
    if (a < kappa1_ || a > kappa2_) {
      if (!clamp_warned_->exchange(true))
        std::cerr << "jumpsim: warning: modulation value " << a
                  << " outside [kappa1, kappa2], clamping\n";
      a = std::clamp(a, kappa1_, kappa2_);
    }
    return a;
  }

 private:
  std::size_t d_;
  double alpha_, kappa1_, kappa2_;
  Modulation modulation_;
  std::string modulation_name_;
  std::shared_ptr<std::atomic<bool>> clamp_warned_;
};

// Built-in demo modulations.
inline KernelParams make_isotropic_kernel(std::size_t d, double alpha,
                                          double kappa) {
  return KernelParams(d, alpha, kappa, kappa);
}

// a = kappa1 or kappa2 by parity of floor(2 x1) + floor(2 y1); symmetric
// in (x,y) as written.
inline KernelParams make_checkerboard_kernel(std::size_t d, double alpha,
                                             double kappa1, double kappa2) {
  Modulation m = [kappa1, kappa2](const Vec& x, const Vec& y) {
    long p = long(std::floor(2.0 * x[0])) + long(std::floor(2.0 * y[0]));
    return ((p % 2 + 2) % 2 == 0) ? kappa1 : kappa2;
  };
  return KernelParams(d, alpha, kappa1, kappa2, std::move(m), "checkerboard");
}

// a depends on the jump direction only, via the squared first component
// of the unit direction; invariant under swapping x and y.
inline KernelParams make_direction_weighted_kernel(std::size_t d, double alpha,
                                                   double kappa1,
                                                   double kappa2) {
  Modulation m = [kappa1, kappa2](const Vec& x, const Vec& y) {
    Vec w = y - x;
    double n2 = w.norm2();
    if (n2 == 0.0) return kappa1;
    double c2 = w[0] * w[0] / n2;
    return kappa1 + (kappa2 - kappa1) * c2;
  };
  return KernelParams(d, alpha, kappa1, kappa2, std::move(m),
                      "direction-weighted");
}

inline KernelParams make_kernel(const std::string& modulation, std::size_t d,
                                double alpha, double kappa1, double kappa2) {
  if (modulation == "isotropic")
    return KernelParams(d, alpha, kappa1, kappa2);
  if (modulation == "checkerboard")
    return make_checkerboard_kernel(d, alpha, kappa1, kappa2);
  if (modulation == "direction-weighted")
    return make_direction_weighted_kernel(d, alpha, kappa1, kappa2);
  throw std::invalid_argument("unknown modulation: " + modulation);
}

// J(x,y); zero beyond distance 1, singular on the diagonal.
inline double eval_kernel(const KernelParams& p, const Vec& x, const Vec& y) {
  Vec w = y - x;
  double r = w.norm();
  if (r == 0.0)
    throw std::domain_error("eval_kernel: x == y (kernel singular)");
  if (r >= 1.0) return 0.0;
  return p.modulation(x, y) *
         std::pow(r, -double(p.dim()) - p.alpha());
}

// Total intensity of jumps with magnitude in [beta, 1) out of x:
//   lambda(x) = int_{beta <= |y-x| < 1} J(x,y) dy.
// Exact for constant modulation; deterministic product quadrature
// (radial cells exact x direction average) otherwise.
inline double large_jump_rate(const KernelParams& p, const Vec& x, double beta,
                              std::size_t budget = 2048) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("large_jump_rate: beta must be in (0,1)");
  double sigma = sphere_surface(p.dim());
  double a = p.alpha();
  if (p.isotropic())
    return p.kappa1() * sigma * (std::pow(beta, -a) - 1.0) / a;

  std::size_t n_r = 32;
  std::size_t n_dir = std::max<std::size_t>(budget / n_r, 1);
  // deterministic direction set, shared across calls
  Rng dir_rng(0x6A756D70u, 0, 0x64697273u);
  double total = 0.0;
  double log_beta = std::log(beta);
  for (std::size_t i = 0; i < n_r; ++i) {
    double r_lo = std::exp(log_beta * (1.0 - double(i) / n_r));
    double r_hi = std::exp(log_beta * (1.0 - double(i + 1) / n_r));
    double cell = (std::pow(r_lo, -a) - std::pow(r_hi, -a)) / a;
    double r_mid = std::sqrt(r_lo * r_hi);
    double a_sum = 0.0;
    Rng rng = dir_rng;  // same directions in every radial cell
    for (std::size_t k = 0; k < n_dir; ++k) {
      Vec e = rng.unit_direction(p.dim());
      a_sum += p.modulation(x, x + r_mid * e);
    }
    total += cell * a_sum / double(n_dir);
  }
  return sigma * total;
}

// Radial CDF of the isotropic proposal |w| on [beta, 1):
//   density proportional to r^{-1-alpha}.
inline double large_jump_radial_cdf(double alpha, double beta, double r) {
  double b = std::pow(beta, -alpha);
  return (b - std::pow(r, -alpha)) / (b - 1.0);
}

inline double large_jump_radial_icdf(double alpha, double beta, double u) {
  double b = std::pow(beta, -alpha);
  return std::pow(b - u * (b - 1.0), -1.0 / alpha);
}

inline constexpr std::size_t kRejectionCap = 1'000'000;

// Draws a displacement w with |w| in [beta,1) distributed as
//   q(x,dw) proportional to J(x, x+w) dw
// by rejection against the isotropic envelope kappa2 |w|^{-d-alpha}.
inline Vec sample_large_jump(const KernelParams& p, const Vec& x, double beta,
                             Rng& rng) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("sample_large_jump: beta must be in (0,1)");
  for (std::size_t trial = 0; trial < kRejectionCap; ++trial) {
    double r = large_jump_radial_icdf(p.alpha(), beta, rng.uniform());
    Vec w = r * rng.unit_direction(p.dim());
    if (p.isotropic()) return w;  // acceptance a/kappa2 checked below
    if (rng.uniform() * p.kappa2() <= p.modulation(x, x + w)) return w;
  }
  throw std::runtime_error(
      "sample_large_jump: rejection cap hit (acceptance >= kappa1/kappa2 "
      "should make this unreachable; check kernel configuration)");
}

}  // namespace jumpsim
