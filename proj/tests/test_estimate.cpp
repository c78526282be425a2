#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "jumpsim/estimate.hpp"

using namespace jumpsim;

namespace {

const KernelParams& slow_kernel() {
  static KernelParams k = make_isotropic_kernel(1, 1.0, 1.0);
  return k;
}

}  // namespace

TEST_CASE("estimate preconditions") {
  auto k = slow_kernel();
  Domain dom = Domain::ball(Vec{0.0}, 0.3);
  CHECK_THROWS_AS(estimate_mean_exit_time(k, Vec{1.0}, dom, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_mean_exit_time(k, Vec{0.0}, dom, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      estimate_hitting_prob(k, Vec{0.0}, Domain::ball(Vec{0.0}, 0.5), dom, 10, 1),
      std::invalid_argument);  // target not inside confine
  CHECK_THROWS_AS(
      estimate_occupation(k, Vec{0.0}, Domain::cube(Vec{0.0}, 0.5),
                          Domain::cube(Vec{0.0}, 0.8), 10, 1),
      std::invalid_argument);  // B not inside Q
  CHECK_THROWS_AS(
      estimate_resolvent(k, Vec{0.0}, dom, 0.0, 10, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(estimate_density(k, 0.0, Vec{0.0}, Vec{0.0}, 2000, 0.05, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_density(k, 0.1, Vec{0.0}, Vec{0.0}, 10, 0.05, 1),
                  std::invalid_argument);
}

TEST_CASE("domain_subset covers the shape combinations") {
  Vec o{0.0};
  CHECK(domain_subset(Domain::ball(o, 0.2), Domain::ball(o, 0.3)));
  CHECK(!domain_subset(Domain::ball(Vec{0.2}, 0.2), Domain::ball(o, 0.3)));
  CHECK(domain_subset(Domain::cube(o, 0.2), Domain::cube(o, 0.3)));
  CHECK(domain_subset(Domain::ball(o, 0.1), Domain::cube(o, 0.25)));
  CHECK(!domain_subset(Domain::ball(o, 0.2), Domain::cube(o, 0.25)));
  CHECK(domain_subset(Domain::cube(o, 0.2), Domain::ball(o, 0.15)));
  CHECK(!domain_subset(Domain::cube(o, 0.2), Domain::ball(o, 0.09)));
}

TEST_CASE("huge domains censor and flag it") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  Domain dom = Domain::ball(Vec{0.0}, 50.0);
  auto res = estimate_mean_exit_time(k, Vec{0.0}, dom, 10, 3, 0.1);
  CHECK(res.censored_frac > 0.5);
  CHECK(res.mean <= 256.0);  // censored paths contribute the capped horizon
}

TEST_CASE("exit time estimates are reproducible across worker counts") {
  auto k = slow_kernel();
  Domain dom = Domain::ball(Vec{0.0}, 0.2);
  auto a = estimate_mean_exit_time(k, Vec{0.0}, dom, 500, 5, 0.01, Exec{1});
  auto b = estimate_mean_exit_time(k, Vec{0.0}, dom, 500, 5, 0.01, Exec{4});
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.censored_frac == b.censored_frac);
}

TEST_CASE("nested domains give ordered exit times") {
  auto k = slow_kernel();
  auto r1 = estimate_mean_exit_time(k, Vec{0.0}, Domain::ball(Vec{0.0}, 0.1),
                                    2000, 7);
  auto r2 = estimate_mean_exit_time(k, Vec{0.0}, Domain::ball(Vec{0.0}, 0.3),
                                    2000, 7);
  CHECK(r1.mean < r2.mean);
  CHECK(r1.ci_lo > 0.0);
}

TEST_CASE("doubling replicas shrinks the standard error by sqrt 2") {
  auto k = slow_kernel();
  Domain dom = Domain::ball(Vec{0.0}, 0.2);
  auto a = estimate_mean_exit_time(k, Vec{0.0}, dom, 4000, 9);
  auto b = estimate_mean_exit_time(k, Vec{0.0}, dom, 8000, 9);
  double shrink = a.std_error / b.std_error;
  CHECK(shrink == Catch::Approx(std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("hitting probability is one when the target is the confine") {
  auto k = slow_kernel();
  Domain confine = Domain::ball(Vec{0.0}, 0.5);
  auto res = estimate_hitting_prob(k, Vec{0.0}, confine, confine, 100, 11);
  CHECK(res.mean == 1.0);
  CHECK(res.ci_hi >= 1.0 - 1e-12);
}

TEST_CASE("hitting probability lies in [0,1] with clipped CI") {
  auto k = slow_kernel();
  Domain confine = Domain::ball(Vec{0.0}, 0.4);
  Domain target = Domain::ball(Vec{0.2}, 0.01);
  auto res = estimate_hitting_prob(k, Vec{0.0}, target, confine, 2000, 13);
  CHECK(res.mean >= 0.0);
  CHECK(res.mean <= 1.0);
  CHECK(res.ci_lo >= 0.0);
  CHECK(res.ci_hi <= 1.0);
}

TEST_CASE("occupation of the whole cube equals the exit time estimate") {
  auto k = slow_kernel();
  Domain Q = Domain::cube(Vec{0.0}, 0.5);
  auto occ = estimate_occupation(k, Vec{0.0}, Q, Q, 500, 15);
  auto tau = estimate_mean_exit_time(k, Vec{0.0}, Q, 500, 15);
  CHECK(occ.mean == tau.mean);  // same seed, same paths, indicator == 1
  CHECK(occ.std_error == tau.std_error);
}

TEST_CASE("occupation of the empty set is zero") {
  auto k = slow_kernel();
  Domain Q = Domain::cube(Vec{0.0}, 0.5);
  Domain empty = Domain::ball(Vec{0.1}, 0.0);
  auto res = estimate_occupation(k, Vec{0.0}, Q, empty, 100, 17);
  CHECK(res.mean == 0.0);
}

TEST_CASE("occupation is monotone for nested sets on shared seeds") {
  auto k = slow_kernel();
  Domain Q = Domain::cube(Vec{0.0}, 0.6);
  auto small = estimate_occupation(k, Vec{0.0}, Q,
                                   Domain::cube(Vec{0.0}, 0.1), 500, 19);
  auto big = estimate_occupation(k, Vec{0.0}, Q,
                                 Domain::cube(Vec{0.0}, 0.4), 500, 19);
  CHECK(small.mean <= big.mean);
}

TEST_CASE("resolvent of the whole space is 1/lambda") {
  auto k = slow_kernel();
  double lambda = 2.0;
  Domain everything = Domain::ball(Vec{0.0}, 1e6);
  auto res = estimate_resolvent(k, Vec{0.0}, everything, lambda, 100, 21);
  CHECK(res.mean == Catch::Approx(1.0 / lambda).margin(1e-3));
  auto none = estimate_resolvent(k, Vec{0.0}, Domain::ball(Vec{0.0}, 0.0),
                                 lambda, 100, 21);
  CHECK(none.mean == 0.0);
}

TEST_CASE("resolvent shrinks with the set and obeys the smallness bound") {
  auto k = slow_kernel();
  double lambda = 1.0, eps = 0.5;
  Vec x{0.0};
  std::vector<double> sizes = {0.2, 0.1, 0.05, 0.025};
  std::vector<double> vals;
  for (double s : sizes)
    vals.push_back(
        estimate_resolvent(k, x, Domain::ball(x, 0.5 * s), lambda, 3000, 23)
            .mean);
  for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] <= vals[i - 1]);
  // calibrate the linear constant at the largest set (d = alpha makes the
  // exponent vanish), then require the bound at the smaller ones
  double c = (vals[0] - eps / 2.0) / sizes[0];
  double cal = std::max(c, 0.0) * 3.0 + 1.0;
  for (std::size_t i = 1; i < sizes.size(); ++i)
    CHECK(vals[i] <= eps / 2.0 + cal * sizes[i]);
}

TEST_CASE("density estimate is symmetric in x and y for isotropic kernels") {
  auto k = slow_kernel();
  auto a = estimate_density(k, 0.1, Vec{0.0}, Vec{0.3}, 20000, 0.05, 25);
  auto b = estimate_density(k, 0.1, Vec{0.3}, Vec{0.0}, 20000, 0.05, 26);
  double comb = std::hypot(a.std_error, b.std_error);
  CHECK(std::abs(a.mean - b.mean) <= 3.0 * comb);
}

TEST_CASE("density estimates conserve mass over a partition") {
  auto k = slow_kernel();
  double t = 0.1, h = 0.05;
  double mass = 0.0;
  for (int c = -20; c < 20; ++c) {
    Vec y{(c + 0.5) * 2.0 * h};
    auto res = estimate_density(k, t, Vec{0.0}, y, 2000, h, 27);
    mass += res.mean * 2.0 * h;  // cell volume
  }
  CHECK(mass >= 0.9);
  CHECK(mass <= 1.0 + 1e-9);
}

TEST_CASE("tube probability: vanishing radius is unreachable") {
  auto k = slow_kernel();
  TubeSpec tube;
  tube.waypoints = {{0.0, Vec{0.0}}, {1.0, Vec{0.0}}};
  tube.epsilon = 1e-6;
  auto res = estimate_tube_probability(k, tube, 500, 29);
  CHECK(res.mean == 0.0);
  CHECK(res.ci_hi > 0.0);  // Wilson keeps the CI informative
}

TEST_CASE("tube probability with a huge radius matches ball survival") {
  auto k = slow_kernel();
  TubeSpec tube;
  tube.waypoints = {{0.0, Vec{0.0}}, {1.0, Vec{0.0}}};
  tube.epsilon = 10.0;
  auto res = estimate_tube_probability(k, tube, 500, 31);
  CHECK(res.mean == 1.0);  // jumps are capped at 1; ten jumps to escape
}

TEST_CASE("tube membership test handles waypoint corners exactly") {
  TubeSpec tube;
  tube.waypoints = {{0.0, Vec{0.0}}, {0.5, Vec{1.0}}, {1.0, Vec{0.0}}};
  tube.epsilon = 1.05;
  Path stay;  // constant at 0; farthest tube point is the corner at t=0.5
  stay.events = {{0.0, Vec{0.0}}};
  stay.t_final = 1.0;
  CHECK(path_in_tube(stay, tube));
  tube.epsilon = 0.95;
  CHECK(!path_in_tube(stay, tube));
}

TEST_CASE("tube spec validation") {
  TubeSpec bad;
  bad.waypoints = {{0.0, Vec{0.0}}, {0.5, Vec{0.1}}, {0.5, Vec{0.2}}};
  bad.epsilon = 0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  TubeSpec late;
  late.waypoints = {{0.1, Vec{0.0}}, {0.5, Vec{0.1}}};
  late.epsilon = 0.1;
  CHECK_THROWS_AS(late.validate(), std::invalid_argument);
}
