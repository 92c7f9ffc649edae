#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "setcover/geometry.hpp"
#include "setcover/rng.hpp"
#include "test_util.hpp"

using namespace setcover;

namespace {

// Random cloud/ball systems around the unit cube for builder comparisons.
PointCloud random_cloud(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  PointCloud cloud;
  cloud.points.reserve(n);
  for (int i = 0; i < n; ++i)
    cloud.points.push_back({coord(rng), coord(rng), coord(rng)});
  return cloud;
}

BallSystem random_system(int m, double epsilon, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.05, 0.6);
  BallSystem system;
  system.epsilon = epsilon;
  system.balls.reserve(m);
  for (int i = 0; i < m; ++i)
    system.balls.push_back(
        {{coord(rng), coord(rng), coord(rng)}, radius(rng)});
  return system;
}

double torus_residual(const Vec3& p) {
  const double ring = std::sqrt(p.x * p.x + p.y * p.y) - 1.0;
  return std::abs(ring * ring + p.z * p.z - 0.35 * 0.35);
}

}  // namespace

TEST_CASE("ball containment is strict") {
  const Ball unit{{0, 0, 0}, 1.0};
  CHECK(ball_contains({0, 0, 0}, unit, 0.0));
  CHECK_FALSE(ball_contains({1, 0, 0}, unit, 0.0));  // boundary excluded
  CHECK(ball_contains({1, 0, 0}, Ball{{0, 0, 0}, 0.99}, 0.02));  // 1 < 1.01
  CHECK_FALSE(ball_contains({1, 0, 0}, Ball{{0, 0, 0}, 0.99}, 0.005));
}

TEST_CASE("a ball holding both points produces the single set {0,1}") {
  PointCloud cloud;
  cloud.points = {{0.1, 0, 0}, {-0.1, 0, 0}};
  BallSystem system;
  system.balls = {{{0, 0, 0}, 0.5}};
  const auto inst = build_ball_instance(cloud, system);
  CHECK(inst.n == 2);
  CHECK(inst.m == 1);
  CHECK(inst.sets[0] == std::vector<int>{0, 1});
  CHECK(testutil::dual_consistent(inst));
}

TEST_CASE("radii equal to exact distances leave sets empty") {
  PointCloud cloud;
  cloud.points = {{1, 0, 0}, {0, 2, 0}};
  BallSystem system;
  system.epsilon = 0.0;
  system.balls = {{{0, 0, 0}, 1.0}, {{0, 0, 0}, 2.0}};
  const auto inst = build_ball_instance(cloud, system);
  CHECK(inst.sets[0].empty());
  CHECK(inst.sets[1] == std::vector<int>{0});
}

TEST_CASE("grid and all-pairs builders agree on random systems") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng = make_rng(seed, 42);
    std::uniform_int_distribution<int> n_dist(5, 500);
    std::uniform_int_distribution<int> m_dist(1, 80);
    const auto cloud = random_cloud(n_dist(rng), rng);
    const auto system = random_system(m_dist(rng), seed % 2 ? 0.1 : 0.0, rng);
    const auto grid = build_ball_instance(cloud, system);
    const auto naive = build_ball_instance_naive(cloud, system);
    REQUIRE(grid == naive);
  }
}

TEST_CASE("building twice gives identical instances") {
  std::mt19937_64 rng = make_rng(3, 42);
  const auto cloud = random_cloud(400, rng);
  const auto system = random_system(60, 0.05, rng);
  CHECK(build_ball_instance(cloud, system) ==
        build_ball_instance(cloud, system));
}

TEST_CASE("sphere samples sit on the unit sphere, deterministically") {
  const auto cloud = generate_surface_samples(SurfaceShape::sphere, 500, 11);
  REQUIRE(cloud.points.size() == 500);
  for (const auto& p : cloud.points)
    CHECK(std::abs(std::sqrt(dot(p, p)) - 1.0) < 1e-12);
  const auto again = generate_surface_samples(SurfaceShape::sphere, 500, 11);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    CHECK(cloud.points[i].x == again.points[i].x);
    CHECK(cloud.points[i].y == again.points[i].y);
    CHECK(cloud.points[i].z == again.points[i].z);
  }
}

TEST_CASE("torus samples satisfy the implicit equation") {
  const auto cloud = generate_surface_samples(SurfaceShape::torus, 500, 12);
  for (const auto& p : cloud.points) CHECK(torus_residual(p) < 1e-9);
}

TEST_CASE("interior candidates stay inside their shapes") {
  const auto sphere = generate_interior_points(SurfaceShape::sphere, 300, 13);
  for (const auto& p : sphere.points) CHECK(dot(p, p) < 1.0);
  const auto torus = generate_interior_points(SurfaceShape::torus, 300, 14);
  for (const auto& p : torus.points) {
    const double ring = std::sqrt(p.x * p.x + p.y * p.y) - 1.0;
    CHECK(ring * ring + p.z * p.z < 0.35 * 0.35);
  }
}

TEST_CASE("generated balls contain no sample at zero enlargement") {
  const auto cloud = generate_surface_samples(SurfaceShape::sphere, 800, 21);
  const auto interior = generate_interior_points(SurfaceShape::sphere, 300, 22);
  const auto system = generate_empty_balls(cloud, interior, 300, 23);
  REQUIRE(system.balls.size() == 300);
  for (const auto& ball : system.balls) {
    CHECK(ball.radius > 0.0);
    for (const auto& p : cloud.points)
      REQUIRE_FALSE(ball_contains(p, ball, 0.0));
  }
}

TEST_CASE("a ball centered in the unit sphere has radius one") {
  const auto cloud = generate_surface_samples(SurfaceShape::sphere, 400, 31);
  PointCloud center;
  center.points = {{0, 0, 0}};
  const auto system = generate_empty_balls(cloud, center, 1, 32);
  REQUIRE(system.balls.size() == 1);
  CHECK(system.balls[0].radius == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coverage grows monotonically with the enlargement") {
  const auto cloud = generate_surface_samples(SurfaceShape::torus, 600, 41);
  const auto interior = generate_interior_points(SurfaceShape::torus, 200, 42);
  auto system = generate_empty_balls(cloud, interior, 200, 43);
  const double diag = bounding_box_diagonal(cloud);
  CoverInstance previous;
  bool first = true;
  for (double frac : {0.005, 0.01, 0.02, 0.04, 0.08}) {
    system.epsilon = frac * diag;
    const auto inst = build_ball_instance(cloud, system);
    if (!first) {
      CHECK(inst.relationships >= previous.relationships);
      for (int i = 0; i < inst.m; ++i)
        CHECK(std::includes(inst.sets[i].begin(), inst.sets[i].end(),
                            previous.sets[i].begin(), previous.sets[i].end()));
    }
    previous = inst;
    first = false;
  }
}

TEST_CASE("an enlargement above the worst gap makes the instance feasible") {
  const auto cloud = generate_surface_samples(SurfaceShape::sphere, 500, 51);
  const auto interior = generate_interior_points(SurfaceShape::sphere, 150, 52);
  auto system = generate_empty_balls(cloud, interior, 150, 53);
  double worst_gap = 0.0;
  for (const auto& p : cloud.points) {
    double gap = std::numeric_limits<double>::max();
    for (const auto& b : system.balls)
      gap = std::min(gap,
                     std::sqrt(distance_squared(p, b.center)) - b.radius);
    worst_gap = std::max(worst_gap, gap);
  }
  system.epsilon = worst_gap * 1.0001 + 1e-12;
  CHECK(build_ball_instance(cloud, system).feasible());
}

TEST_CASE("point and ball files round-trip") {
  const auto cloud = generate_surface_samples(SurfaceShape::torus, 50, 61);
  std::ostringstream pout;
  write_points(cloud, pout);
  std::istringstream pin(pout.str());
  const auto cloud2 = read_points(pin);
  REQUIRE(cloud2.points.size() == cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    CHECK(distance_squared(cloud.points[i], cloud2.points[i]) == 0.0);

  const auto interior = generate_interior_points(SurfaceShape::torus, 20, 62);
  auto system = generate_empty_balls(cloud, interior, 20, 63);
  system.epsilon = 0.125;
  std::ostringstream bout;
  write_balls(system, bout);
  std::istringstream bin(bout.str());
  const auto system2 = read_balls(bin);
  REQUIRE(system2.balls.size() == system.balls.size());
  CHECK(system2.epsilon == system.epsilon);
  for (std::size_t i = 0; i < system.balls.size(); ++i) {
    CHECK(system2.balls[i].radius == system.balls[i].radius);
    CHECK(distance_squared(system2.balls[i].center,
                           system.balls[i].center) == 0.0);
  }

  std::istringstream bad("POINTS 2\n0 0 0\n1 1\n");
  CHECK_THROWS_AS(read_points(bad), std::runtime_error);
  std::istringstream bad2("BALLS 1 0\n0 0 0 -1\n");
  CHECK_THROWS_AS(read_balls(bad2), std::invalid_argument);
}
