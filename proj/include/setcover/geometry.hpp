#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "setcover/instance.hpp"

namespace setcover {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double distance_squared(const Vec3& a, const Vec3& b) {
  const Vec3 d = a - b;
  return dot(d, d);
}

struct PointCloud {
  std::vector<Vec3> points;
};

struct Ball {
  Vec3 center;
  double radius = 0.0;
};

struct BallSystem {
  std::vector<Ball> balls;
  double epsilon = 0.0;  // radius enlargement applied at containment time
};

enum class SurfaceShape { sphere, torus };

// Strict containment in the ball enlarged by epsilon: |p - c| < r + eps.
bool ball_contains(const Vec3& p, const Ball& ball, double epsilon);

// Set i collects the points strictly inside ball i enlarged by
// system.epsilon. Balls containing no points yield empty sets and keep
// their ids. Grid-accelerated; agrees exactly with the all-pairs builder.
CoverInstance build_ball_instance(const PointCloud& cloud,
                                  const BallSystem& system);

// All-pairs reference builder, kept as the oracle for the grid path.
CoverInstance build_ball_instance_naive(const PointCloud& cloud,
                                        const BallSystem& system);

// Seeded quasi-uniform samples on the unit sphere, or on the torus with
// major radius 1 and minor radius 0.35.
PointCloud generate_surface_samples(SurfaceShape shape, int count,
                                    std::uint64_t seed);

// Seeded candidate ball centers strictly inside the shape.
PointCloud generate_interior_points(SurfaceShape shape, int count,
                                    std::uint64_t seed);

// Balls centered at `count` candidates drawn from `interior`; each radius
// is the distance to the nearest sample, nudged down so the open ball
// contains no sample at epsilon 0. The enlargement is supplied later, at
// instance-build time.
BallSystem generate_empty_balls(const PointCloud& cloud,
                                const PointCloud& interior, int count,
                                std::uint64_t seed);

double bounding_box_diagonal(const PointCloud& cloud);

// Text formats: "POINTS n" then n lines "x y z"; "BALLS m eps" then m
// lines "cx cy cz r". LF line endings, decimal floating point.
PointCloud read_points(std::istream& in);
void write_points(const PointCloud& cloud, std::ostream& out);
BallSystem read_balls(std::istream& in);
void write_balls(const BallSystem& system, std::ostream& out);

}  // namespace setcover
