#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "vec.hpp"

namespace jumpsim {

namespace detail {
// splitmix64 finalizer (Steele, Lea, Flood)
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based random stream: output i is a pure function of (key, i),
// so stream (seed, replica) is reproducible independent of how replicas
// are scheduled across workers.
class Rng {
 public:
  Rng(std::uint64_t master_seed, std::uint64_t stream_index,
      std::uint64_t purpose = 0)
      : key_(detail::mix64(detail::mix64(master_seed) ^
                           detail::mix64(stream_index * 0xD1342543DE82EF95ULL +
                                         purpose))) {}

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL);
  }

  // uniform in [0,1)
  double uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in (0,1], safe as log() argument
  double uniform_pos() { return 1.0 - uniform(); }

  double exponential(double rate = 1.0) {
    return -std::log(uniform_pos()) / rate;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform_pos();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // uniform direction on S^{d-1}
  Vec unit_direction(std::size_t d) {
    Vec e(d);
    if (d == 1) {
      e[0] = (next_u64() & 1u) ? 1.0 : -1.0;
      return e;
    }
    double n2;
    do {
      for (std::size_t i = 0; i < d; ++i) e[i] = normal();
      n2 = e.norm2();
    } while (n2 == 0.0);
    double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < d; ++i) e[i] *= inv;
    return e;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace jumpsim
