#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jumpsim {

// Compensated (Kahan) accumulator; makes parallel reductions stable to
// ulp-scale drift when summed in replica order.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0, c_ = 0.0;
};

struct MeanStderr {
  double mean;
  double std_error;
};

inline MeanStderr mean_stderr(const std::vector<double>& xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("mean_stderr: need at least 2 samples");
  KahanSum s;
  for (double x : xs) s.add(x);
  double m = s.value() / double(xs.size());
  KahanSum s2;
  for (double x : xs) s2.add((x - m) * (x - m));
  double var = s2.value() / double(xs.size() - 1);
  return {m, std::sqrt(var / double(xs.size()))};
}

// --- regularized incomplete gamma (series + continued fraction) ---

namespace detail {

inline double gamma_series_p(double a, double x) {
  double sum = 1.0 / a, term = sum, ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_cf_q(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

// P(a,x), lower regularized
inline double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: bad args");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_series_p(a, x);
  return 1.0 - detail::gamma_cf_q(a, x);
}

inline double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

// chi-square upper tail
inline double chi2_sf(double stat, double dof) {
  return gamma_q(0.5 * dof, 0.5 * stat);
}

// --- Poisson goodness of fit ---

struct GofResult {
  double statistic;
  double dof;
  double p_value;
};

// Chi-square test of integer counts against Poisson(lambda); bins with
// expected count < 5 are merged into the tails.  lambda is known, not
// fitted, so dof = bins - 1.
inline GofResult chi2_poisson_gof(const std::vector<std::size_t>& samples,
                                  double lambda) {
  if (samples.empty())
    throw std::invalid_argument("chi2_poisson_gof: empty sample");
  std::size_t kmax = *std::max_element(samples.begin(), samples.end());
  double n = double(samples.size());

  // Poisson pmf over [0, kmax], recursively
  std::vector<double> pmf(kmax + 1);
  pmf[0] = std::exp(-lambda);
  for (std::size_t k = 1; k <= kmax; ++k)
    pmf[k] = pmf[k - 1] * lambda / double(k);
  double tail = 1.0;
  for (double q : pmf) tail -= q;
  if (tail < 0.0) tail = 0.0;

  std::vector<double> observed(kmax + 2, 0.0), expected(kmax + 2, 0.0);
  for (std::size_t s : samples) observed[s] += 1.0;
  for (std::size_t k = 0; k <= kmax; ++k) expected[k] = n * pmf[k];
  expected[kmax + 1] = n * tail;

  // merge low-expectation cells left-to-right
  std::vector<double> obs_m, exp_m;
  double oa = 0.0, ea = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    oa += observed[k];
    ea += expected[k];
    if (ea >= 5.0) {
      obs_m.push_back(oa);
      exp_m.push_back(ea);
      oa = ea = 0.0;
    }
  }
  if (ea > 0.0) {
    if (exp_m.empty()) {
      obs_m.push_back(oa);
      exp_m.push_back(ea);
    } else {
      obs_m.back() += oa;
      exp_m.back() += ea;
    }
  }
  if (obs_m.size() < 2)
    throw std::invalid_argument("chi2_poisson_gof: too few populated bins");

  double stat = 0.0;
  for (std::size_t i = 0; i < obs_m.size(); ++i) {
    double diff = obs_m[i] - exp_m[i];
    stat += diff * diff / exp_m[i];
  }
  double dof = double(obs_m.size() - 1);
  return {stat, dof, chi2_sf(stat, dof)};
}

// --- two-sample Kolmogorov-Smirnov ---

struct KsResult {
  double statistic;
  double p_value;
};

// asymptotic Kolmogorov survival function Q_KS
inline double ks_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * double(k) * double(k) * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("ks_two_sample: need >= 2 samples each");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  double na = double(a.size()), nb = double(b.size());
  while (i < a.size() && j < b.size()) {
    double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  double ne = na * nb / (na + nb);
  double sq = std::sqrt(ne);
  double lambda = (sq + 0.12 + 0.11 / sq) * d;
  return {d, ks_sf(lambda)};
}

// one-sample KS statistic against a given CDF (for DKW band checks)
template <typename Cdf>
inline double ks_statistic_vs_cdf(std::vector<double> xs, Cdf&& cdf) {
  std::sort(xs.begin(), xs.end());
  double n = double(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = cdf(xs[i]);
    d = std::max(d, std::max(f - double(i) / n, double(i + 1) / n - f));
  }
  return d;
}

// Dvoretzky-Kiefer-Wolfowitz band half-width at the given confidence.
inline double dkw_band(std::size_t n, double confidence) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * double(n)));
}

// --- binomial intervals ---

struct Interval {
  double lo, hi;
};

// Wilson score interval at z (default 95%).
inline Interval wilson_interval(std::size_t successes, std::size_t n,
                                double z = 1.959963984540054) {
  if (n == 0) throw std::invalid_argument("wilson_interval: n == 0");
  double nn = double(n), p = double(successes) / nn, z2 = z * z;
  double denom = 1.0 + z2 / nn;
  double center = (p + z2 / (2.0 * nn)) / denom;
  double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// --- least-squares slope ---

struct LineFit {
  double slope, intercept;
};

inline LineFit fit_line(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matched points");
  double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate xs");
  double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

// log-log slope of y against x (all entries must be positive)
inline double loglog_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw std::invalid_argument("loglog_slope: nonpositive data");
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
  }
  return fit_line(lx, ly).slope;
}

}  // namespace jumpsim
