#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "jumpsim/simulate.hpp"
#include "jumpsim/stats.hpp"

using namespace jumpsim;

TEST_CASE("zero horizon yields the degenerate single-event path") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.01, 0.0, std::nullopt, 1};
  Rng rng(1, 0);
  Path path = simulate_path(k, Vec{0.3}, cfg, rng);
  REQUIRE(path.events.size() == 1);
  CHECK(path.events[0].t == 0.0);
  CHECK(path.events[0].x == Vec{0.3});
  CHECK(path.stop_reason == StopReason::HorizonReached);
  CHECK(path.t_final == 0.0);
}

TEST_CASE("every displacement lies in [eps_min, 1)") {
  auto k = make_direction_weighted_kernel(2, 0.9, 1.0, 2.0);
  SimConfig cfg{0.05, 2.0, std::nullopt, 7};
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(7, i);
    Path path = simulate_path(k, Vec{0.0, 0.0}, cfg, rng);
    for (std::size_t e = 1; e < path.events.size(); ++e) {
      double d = dist(path.events[e].x, path.events[e - 1].x);
      CHECK(d >= 0.05);
      CHECK(d < 1.0);
      CHECK(path.events[e].t > path.events[e - 1].t);
    }
    CHECK(path.t_final >= path.events.back().t);
  }
}

TEST_CASE("jump count matches the analytic dominating rate") {
  // isotropic d=1, alpha=1, eps=0.01: Lambda = 2(100-1) = 198 per unit time
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.01, 1.0, std::nullopt, 11};
  const std::size_t n = 2000;
  KahanSum total;
  for (std::uint64_t i = 0; i < n; ++i) {
    Rng rng(11, i);
    total.add(double(simulate_path(k, Vec{0.0}, cfg, rng).events.size() - 1));
  }
  double mean = total.value() / double(n);
  double se = std::sqrt(198.0 / double(n));
  CHECK(std::abs(mean - 198.0) < 3.0 * se);
}

TEST_CASE("thinning reduces the accepted rate by kappa1/kappa2") {
  // isotropic modulation a = kappa1 with envelope kappa2: acceptance 1/2
  KernelParams k(1, 1.0, 1.0, 2.0);
  SimConfig cfg{0.01, 1.0, std::nullopt, 13};
  const std::size_t n = 2000;
  KahanSum total;
  for (std::uint64_t i = 0; i < n; ++i) {
    Rng rng(13, i);
    total.add(double(simulate_path(k, Vec{0.0}, cfg, rng).events.size() - 1));
  }
  double mean = total.value() / double(n);
  double expect = 198.0;  // kappa2 envelope 396 times acceptance 1/2
  CHECK(std::abs(mean - expect) < 3.0 * std::sqrt(expect / double(n)));
}

TEST_CASE("paths are bitwise deterministic for a fixed stream") {
  auto k = make_checkerboard_kernel(2, 1.1, 1.0, 1.7);
  SimConfig cfg{0.02, 1.5, Domain::ball(Vec{0.0, 0.0}, 2.0), 17};
  Rng rng1(17, 4), rng2(17, 4);
  Path a = simulate_path(k, Vec{0.1, 0.1}, cfg, rng1);
  Path b = simulate_path(k, Vec{0.1, 0.1}, cfg, rng2);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].t == b.events[i].t);
    CHECK(a.events[i].x == b.events[i].x);
  }
  CHECK(a.t_final == b.t_final);
}

TEST_CASE("simulation stops at the first jump landing outside the domain") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  Domain dom = Domain::ball(Vec{0.0}, 0.2);
  SimConfig cfg{0.01, 50.0, dom, 19};
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(19, i);
    Path path = simulate_path(k, Vec{0.0}, cfg, rng);
    if (path.stop_reason == StopReason::DomainExited) {
      for (std::size_t e = 0; e + 1 < path.events.size(); ++e)
        CHECK(dom.contains(path.events[e].x));
      CHECK(!dom.contains(path.events.back().x));
      CHECK(path.t_final == path.events.back().t);
    }
  }
}

TEST_CASE("start point outside the stop domain is rejected") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.01, 1.0, Domain::ball(Vec{0.0}, 0.2), 1};
  Rng rng(1, 0);
  CHECK_THROWS_AS(simulate_path(k, Vec{0.5}, cfg, rng), std::invalid_argument);
}

TEST_CASE("gaussian small-jump correction produces finite paths") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.05, 1.0, std::nullopt, 23};
  cfg.gaussian_correction = true;
  Rng rng(23, 0);
  Path path = simulate_path(k, Vec{0.0}, cfg, rng);
  CHECK(path.events.size() > 1);
  for (const auto& ev : path.events) CHECK(std::isfinite(ev.x[0]));
}

TEST_CASE("meyer_compose validates the cutoff ordering") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.1, 1.0, std::nullopt, 1};
  Rng rng(1, 0);
  CHECK_THROWS_AS(meyer_compose(k, Vec{0.0}, 0.1, cfg, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(meyer_compose(k, Vec{0.0}, 0.05, cfg, rng),
                  std::invalid_argument);
}

TEST_CASE("meyer_compose zero horizon inserts nothing") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.01, 0.0, std::nullopt, 1};
  Rng rng(1, 0);
  std::vector<double> ins;
  Path path = meyer_compose(k, Vec{0.0}, 0.5, cfg, rng, &ins);
  CHECK(path.events.size() == 1);
  CHECK(ins.empty());
}

TEST_CASE("meyer insertion count is Poisson with the analytic rate") {
  // isotropic d=1, alpha=1, beta=0.5: insertion rate 2 per unit time
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  SimConfig cfg{0.01, 1.0, std::nullopt, 29};
  const std::size_t n = 10000;
  KahanSum total;
  std::vector<std::size_t> counts;
  for (std::uint64_t i = 0; i < n; ++i) {
    Rng rng(29, i);
    std::vector<double> ins;
    meyer_compose(k, Vec{0.0}, 0.5, cfg, rng, &ins);
    total.add(double(ins.size()));
    counts.push_back(ins.size());
  }
  double mean = total.value() / double(n);
  CHECK(std::abs(mean - 2.0) < 0.05);
  CHECK(chi2_poisson_gof(counts, 2.0).p_value > 0.01);
}

TEST_CASE("meyer displacements respect both layers") {
  auto k = make_checkerboard_kernel(2, 1.0, 1.0, 2.0);
  SimConfig cfg{0.05, 0.5, std::nullopt, 31};
  double beta = 0.4;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(31, i);
    std::vector<double> ins;
    Path path = meyer_compose(k, Vec{0.0, 0.0}, beta, cfg, rng, &ins);
    for (std::size_t e = 1; e < path.events.size(); ++e) {
      double d = dist(path.events[e].x, path.events[e - 1].x);
      bool inserted = false;
      for (double t : ins) inserted = inserted || (t == path.events[e].t);
      if (inserted) {
        CHECK(d >= beta);
        CHECK(d < 1.0);
      } else {
        CHECK(d >= 0.05);
        CHECK(d < beta);
      }
    }
  }
}

TEST_CASE("meyer composition agrees in law with direct simulation") {
  // modest-size two-sample KS on exit times; the acceptance suite runs
  // the full-size version
  auto k = make_isotropic_kernel(2, 1.0, 1.0);
  Domain ball = Domain::ball(Vec{0.0, 0.0}, 0.3);
  SimConfig cfg{0.05, 4.0, ball, 37};
  const std::size_t n = 1000;
  std::vector<double> direct, layered;
  for (std::uint64_t i = 0; i < n; ++i) {
    Rng r1(37, i), r2(38, i);
    direct.push_back(simulate_path(k, Vec{0.0, 0.0}, cfg, r1).t_final);
    layered.push_back(meyer_compose(k, Vec{0.0, 0.0}, 0.5, cfg, r2).t_final);
  }
  CHECK(ks_two_sample(direct, layered).p_value > 0.005);
}

TEST_CASE("default cutoff keeps the discarded quadratic variation small") {
  auto k = make_isotropic_kernel(1, 1.0, 1.0);
  double eps = default_eps_min(k);
  CHECK(eps > 0.0);
  CHECK(eps < 1.0);
  double qv = k.kappa2() * sphere_surface(1) * std::pow(eps, 1.0) / 1.0;
  CHECK(qv <= 1e-4 * 1.0001);
}
