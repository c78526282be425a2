#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "domain.hpp"
#include "vec.hpp"

namespace jumpsim {

struct PathEvent {
  double t;
  Vec x;
};

enum class StopReason { HorizonReached, DomainExited };

// Right-continuous piecewise-constant trajectory: position is events[i].x
// on [events[i].t, events[i+1].t), and on [events.back().t, t_final].
struct Path {
  std::vector<PathEvent> events;  // events[0] = (0, x0)
  double t_final = 0.0;
  StopReason stop_reason = StopReason::HorizonReached;

  const Vec& start() const { return events.front().x; }
  const Vec& final_position() const { return events.back().x; }

  // position at time t (largest event time <= t)
  const Vec& at(double t) const {
    std::size_t lo = 0, hi = events.size();
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (events[mid].t <= t) lo = mid; else hi = mid;
    }
    return events[lo].x;
  }
};

struct ExitInfo {
  double time;
  Vec position;
};

// First event landing outside dom; nullopt if the path stays inside
// through t_final.  Pure-jump paths exit exactly at jump times.
inline std::optional<ExitInfo> first_exit(const Path& path, const Domain& dom) {
  if (path.events.empty()) throw std::invalid_argument("first_exit: empty path");
  if (!dom.contains(path.start()))
    throw std::invalid_argument("first_exit: start point outside domain");
  for (std::size_t i = 1; i < path.events.size(); ++i)
    if (!dom.contains(path.events[i].x))
      return ExitInfo{path.events[i].t, path.events[i].x};
  return std::nullopt;
}

// First event time t > 0 with position in target; nullopt if never.
inline std::optional<double> hitting_time(const Path& path,
                                          const Domain& target) {
  if (path.events.empty())
    throw std::invalid_argument("hitting_time: empty path");
  for (std::size_t i = 1; i < path.events.size(); ++i)
    if (target.contains(path.events[i].x)) return path.events[i].t;
  return std::nullopt;
}

// Lebesgue time spent in `set` on [0, until); exact on piecewise-constant
// paths (sum of holding-interval lengths).
inline double occupation_time(const Path& path, const Domain& set,
                              double until) {
  if (path.events.empty())
    throw std::invalid_argument("occupation_time: empty path");
  if (until > path.t_final)
    throw std::invalid_argument("occupation_time: until > t_final");
  double total = 0.0;
  for (std::size_t i = 0; i < path.events.size(); ++i) {
    double t0 = path.events[i].t;
    double t1 = (i + 1 < path.events.size()) ? path.events[i + 1].t
                                             : path.t_final;
    if (t1 > until) t1 = until;
    if (t1 <= t0) break;
    if (set.contains(path.events[i].x)) total += t1 - t0;
  }
  return total;
}

}  // namespace jumpsim
