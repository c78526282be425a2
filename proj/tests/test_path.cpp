#include <catch2/catch_amalgamated.hpp>

#include "jumpsim/path.hpp"

using namespace jumpsim;

namespace {

// the three-event hand path used throughout the examples
Path hand_path() {
  Path p;
  p.events = {{0.0, Vec{0.0}}, {0.5, Vec{0.2}}, {1.2, Vec{0.9}}};
  p.t_final = 1.5;
  return p;
}

}  // namespace

TEST_CASE("first_exit finds the first event outside the domain") {
  Path p = hand_path();
  auto ex = first_exit(p, Domain::ball(Vec{0.0}, 0.5));
  REQUIRE(ex.has_value());
  CHECK(ex->time == 1.2);
  CHECK(ex->position == Vec{0.9});
}

TEST_CASE("a path that stays inside never exits") {
  Path p;
  p.events = {{0.0, Vec{0.0}}};
  p.t_final = 3.0;
  CHECK(!first_exit(p, Domain::ball(Vec{0.0}, 0.1)).has_value());
}

TEST_CASE("first_exit rejects a start point outside the domain") {
  Path p = hand_path();
  CHECK_THROWS_AS(first_exit(p, Domain::ball(Vec{5.0}, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("hitting_time finds the first event inside the target") {
  Path p = hand_path();
  auto t = hitting_time(p, Domain::ball(Vec{0.9}, 0.05));
  REQUIRE(t.has_value());
  CHECK(*t == 1.2);
}

TEST_CASE("hitting_time is nullopt for unreachable targets") {
  Path p = hand_path();
  CHECK(!hitting_time(p, Domain::ball(Vec{100.0}, 0.5)).has_value());
}

TEST_CASE("hitting a target containing the start uses t > 0") {
  Path p = hand_path();
  // target contains x_0 = 0 and also x_1 = 0.2
  auto t = hitting_time(p, Domain::ball(Vec{0.1}, 0.3));
  REQUIRE(t.has_value());
  CHECK(*t == 0.5);  // first event time, not zero
}

TEST_CASE("occupation_time of a superset is the whole interval") {
  Path p = hand_path();
  CHECK(occupation_time(p, Domain::ball(Vec{0.0}, 50.0), 1.5) == 1.5);
  CHECK(occupation_time(p, Domain::ball(Vec{0.0}, 50.0), 0.7) == 0.7);
}

TEST_CASE("occupation_time of a disjoint set is zero") {
  Path p = hand_path();
  CHECK(occupation_time(p, Domain::ball(Vec{10.0}, 0.5), 1.5) == 0.0);
}

TEST_CASE("occupation_time hand computation") {
  Path p = hand_path();
  // position 0.2 held on [0.5, 1.2); clipped at until = 1.0
  CHECK(occupation_time(p, Domain::ball(Vec{0.2}, 0.05), 1.0) == 0.5);
}

TEST_CASE("occupation_time validates the horizon") {
  Path p = hand_path();
  CHECK_THROWS_AS(occupation_time(p, Domain::ball(Vec{0.0}, 1.0), 2.0),
                  std::invalid_argument);
}

TEST_CASE("occupation additivity over disjoint sets") {
  Path p = hand_path();
  Domain b1 = Domain::ball(Vec{0.0}, 0.1);   // covers position 0
  Domain b2 = Domain::ball(Vec{0.2}, 0.05);  // covers position 0.2
  Domain both = Domain::ball(Vec{0.1}, 0.2);  // covers 0 and 0.2, not 0.9
  double u = 1.4;
  CHECK(occupation_time(p, b1, u) + occupation_time(p, b2, u) ==
        occupation_time(p, both, u));
}

TEST_CASE("position lookup is right-continuous piecewise constant") {
  Path p = hand_path();
  CHECK(p.at(0.0) == Vec{0.0});
  CHECK(p.at(0.49) == Vec{0.0});
  CHECK(p.at(0.5) == Vec{0.2});
  CHECK(p.at(1.19) == Vec{0.2});
  CHECK(p.at(1.2) == Vec{0.9});
  CHECK(p.at(1.5) == Vec{0.9});
}
