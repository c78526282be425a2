#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>

namespace jumpsim {

// Fixed-capacity point/vector in R^d.  Simulations here live in small
// dimensions; capping d avoids a heap allocation per jump event.
inline constexpr std::size_t kMaxDim = 8;

struct Vec {
  std::array<double, kMaxDim> v{};
  std::size_t d = 0;

  Vec() = default;
  explicit Vec(std::size_t dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }
  Vec(std::initializer_list<double> xs) : d(xs.size()) {
    assert(d >= 1 && d <= kMaxDim);
    std::size_t i = 0;
    for (double x : xs) v[i++] = x;
  }

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t dim() const { return d; }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < d; ++i) v[i] += o.v[i];
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.d);
    for (std::size_t i = 0; i < a.d; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  friend Vec operator*(double s, Vec a) {
    for (std::size_t i = 0; i < a.d; ++i) a.v[i] *= s;
    return a;
  }
  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.d != b.d) return false;
    for (std::size_t i = 0; i < a.d; ++i)
      if (a.v[i] != b.v[i]) return false;
    return true;
  }

  double norm2() const {
    double s = 0;
    for (std::size_t i = 0; i < d; ++i) s += v[i] * v[i];
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

inline double dist(const Vec& a, const Vec& b) { return (a - b).norm(); }

// Surface measure of the unit sphere S^{d-1} in R^d.
inline double sphere_surface(std::size_t d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * double(d)) /
         std::tgamma(0.5 * double(d));
}

// Volume of the unit ball in R^d.
inline double ball_volume_unit(std::size_t d) {
  return sphere_surface(d) / double(d);
}

}  // namespace jumpsim
