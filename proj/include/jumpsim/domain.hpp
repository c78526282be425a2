#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "vec.hpp"

namespace jumpsim {

// Open ball B(c,r) or open cube Q(c,r) of side length r.
struct Domain {
  enum class Shape { Ball, Cube };

  Shape shape = Shape::Ball;
  Vec center;
  double extent = 0.0;  // radius for Ball, side length for Cube

  // extent 0 is allowed and denotes the empty (measure-zero) set
  static Domain ball(Vec c, double r) {
    if (r < 0) throw std::invalid_argument("Domain: extent must be >= 0");
    return Domain{Shape::Ball, std::move(c), r};
  }
  static Domain cube(Vec c, double side) {
    if (side < 0) throw std::invalid_argument("Domain: extent must be >= 0");
    return Domain{Shape::Cube, std::move(c), side};
  }

  bool contains(const Vec& x) const {
    if (shape == Shape::Ball) return dist(x, center) < extent;
    for (std::size_t i = 0; i < center.dim(); ++i)
      if (std::abs(x[i] - center[i]) >= 0.5 * extent) return false;
    return true;
  }

  double volume() const {
    std::size_t d = center.dim();
    if (shape == Shape::Ball)
      return ball_volume_unit(d) * std::pow(extent, double(d));
    return std::pow(extent, double(d));
  }

  std::string describe() const {
    std::string s = (shape == Shape::Ball) ? "ball(" : "cube(";
    for (std::size_t i = 0; i < center.dim(); ++i)
      s += (i ? "," : "") + std::to_string(center[i]);
    return s + ";" + std::to_string(extent) + ")";
  }
};

}  // namespace jumpsim
