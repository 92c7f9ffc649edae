#include "setcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "setcover/rng.hpp"

namespace setcover {

namespace {

constexpr double kTorusMajor = 1.0;
constexpr double kTorusMinor = 0.35;

struct Aabb {
  Vec3 lo{std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
  Vec3 hi{std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::lowest()};
  void expand(const Vec3& p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
    hi.z = std::max(hi.z, p.z);
  }
};

// Uniform grid over the point cloud, CSR cell lists. Queries return the
// cells overlapping an axis-aligned box; the caller retests every candidate
// with the exact containment predicate, so acceleration cannot change the
// result.
class PointGrid {
 public:
  explicit PointGrid(const std::vector<Vec3>& points) : points_(points) {
    Aabb box;
    for (const Vec3& p : points) box.expand(p);
    if (points.empty()) box = Aabb{{0, 0, 0}, {0, 0, 0}};
    origin_ = box.lo;
    const double ex = std::max(box.hi.x - box.lo.x, 0.0);
    const double ey = std::max(box.hi.y - box.lo.y, 0.0);
    const double ez = std::max(box.hi.z - box.lo.z, 0.0);
    const double longest = std::max({ex, ey, ez});
    const int per_axis = std::clamp(
        static_cast<int>(std::cbrt(static_cast<double>(points.size()) / 2.0)),
        1, 128);
    cell_ = longest > 0.0 ? longest / per_axis : 1.0;
    nx_ = dim(ex);
    ny_ = dim(ey);
    nz_ = dim(ez);

    const std::size_t cells = static_cast<std::size_t>(nx_) * ny_ * nz_;
    std::vector<int> counts(cells, 0);
    for (const Vec3& p : points) ++counts[static_cast<std::size_t>(index(p))];
    start_.assign(cells + 1, 0);
    for (std::size_t c = 0; c < cells; ++c) start_[c + 1] = start_[c] + counts[c];
    ids_.resize(points.size());
    std::vector<int> cursor(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int c = index(points[i]);
      ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c)]++)] =
          static_cast<int>(i);
    }
  }

  template <typename Fn>
  void for_candidates(const Vec3& lo, const Vec3& hi, Fn&& fn) const {
    const int x0 = clamp_axis(lo.x, origin_.x, nx_);
    const int x1 = clamp_axis(hi.x, origin_.x, nx_);
    const int y0 = clamp_axis(lo.y, origin_.y, ny_);
    const int y1 = clamp_axis(hi.y, origin_.y, ny_);
    const int z0 = clamp_axis(lo.z, origin_.z, nz_);
    const int z1 = clamp_axis(hi.z, origin_.z, nz_);
    for (int z = z0; z <= z1; ++z)
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
          const std::size_t c =
              (static_cast<std::size_t>(z) * ny_ + y) * nx_ + x;
          for (int t = start_[c]; t < start_[c + 1]; ++t) fn(ids_[t]);
        }
  }

 private:
  int dim(double extent) const {
    return std::clamp(static_cast<int>(extent / cell_) + 1, 1, 256);
  }
  int clamp_axis(double v, double origin, int dims) const {
    const int i = static_cast<int>(std::floor((v - origin) / cell_));
    return std::clamp(i, 0, dims - 1);
  }
  int index(const Vec3& p) const {
    return (clamp_axis(p.z, origin_.z, nz_) * ny_ +
            clamp_axis(p.y, origin_.y, ny_)) *
               nx_ +
           clamp_axis(p.x, origin_.x, nx_);
  }

  const std::vector<Vec3>& points_;
  Vec3 origin_;
  double cell_ = 1.0;
  int nx_ = 1, ny_ = 1, nz_ = 1;
  std::vector<int> start_;
  std::vector<int> ids_;
};

void validate_system(const BallSystem& system) {
  if (system.epsilon < 0.0 || !std::isfinite(system.epsilon))
    throw std::invalid_argument("epsilon must be finite and >= 0");
  for (const Ball& b : system.balls)
    if (!(b.radius > 0.0) || !std::isfinite(b.radius))
      throw std::invalid_argument("ball radii must be strictly positive");
}

double read_double_token(std::istream& in, const char* what) {
  double v = 0.0;
  if (!(in >> v))
    throw std::runtime_error(std::string("truncated ") + what);
  if (!std::isfinite(v))
    throw std::runtime_error(std::string("non-finite ") + what);
  return v;
}

}  // namespace

bool ball_contains(const Vec3& p, const Ball& ball, double epsilon) {
  const double r = ball.radius + epsilon;
  return distance_squared(p, ball.center) < r * r;
}

CoverInstance build_ball_instance(const PointCloud& cloud,
                                  const BallSystem& system) {
  validate_system(system);
  const int m = static_cast<int>(system.balls.size());
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
  const PointGrid grid(cloud.points);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    const Ball& ball = system.balls[static_cast<std::size_t>(i)];
    const double reach = ball.radius + system.epsilon;
    const Vec3 lo{ball.center.x - reach, ball.center.y - reach,
                  ball.center.z - reach};
    const Vec3 hi{ball.center.x + reach, ball.center.y + reach,
                  ball.center.z + reach};
    auto& members = sets[static_cast<std::size_t>(i)];
    grid.for_candidates(lo, hi, [&](int j) {
      if (ball_contains(cloud.points[static_cast<std::size_t>(j)], ball,
                        system.epsilon))
        members.push_back(j);
    });
    std::sort(members.begin(), members.end());
  }
  return from_sets(static_cast<int>(cloud.points.size()), sets);
}

CoverInstance build_ball_instance_naive(const PointCloud& cloud,
                                        const BallSystem& system) {
  validate_system(system);
  const int n = static_cast<int>(cloud.points.size());
  const int m = static_cast<int>(system.balls.size());
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Ball& ball = system.balls[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
      if (ball_contains(cloud.points[static_cast<std::size_t>(j)], ball,
                        system.epsilon))
        sets[static_cast<std::size_t>(i)].push_back(j);
  }
  return from_sets(n, sets);
}

PointCloud generate_surface_samples(SurfaceShape shape, int count,
                                    std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::mt19937_64 rng = make_rng(seed);
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(count));
  if (shape == SurfaceShape::sphere) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(cloud.points.size()) < count) {
      const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
      const double len = std::sqrt(dot(v, v));
      if (len < 1e-9) continue;
      cloud.points.push_back({v.x / len, v.y / len, v.z / len});
    }
  } else {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (static_cast<int>(cloud.points.size()) < count) {
      const double u = angle(rng);
      const double v = angle(rng);
      // Rejection on the area element keeps the sampling uniform over the
      // torus surface rather than over the angle square.
      if (unit(rng) >=
          (kTorusMajor + kTorusMinor * std::cos(v)) / (kTorusMajor + kTorusMinor))
        continue;
      const double ring = kTorusMajor + kTorusMinor * std::cos(v);
      cloud.points.push_back(
          {ring * std::cos(u), ring * std::sin(u), kTorusMinor * std::sin(v)});
    }
  }
  return cloud;
}

PointCloud generate_interior_points(SurfaceShape shape, int count,
                                    std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::mt19937_64 rng = make_rng(seed);
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(count));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  if (shape == SurfaceShape::sphere) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(cloud.points.size()) < count) {
      const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
      const double len = std::sqrt(dot(v, v));
      if (len < 1e-9) continue;
      const double r = 0.9 * std::cbrt(unit(rng));
      cloud.points.push_back({v.x / len * r, v.y / len * r, v.z / len * r});
    }
  } else {
    while (static_cast<int>(cloud.points.size()) < count) {
      const double u = angle(rng);
      const double phi = angle(rng);
      const double s = 0.9 * kTorusMinor * std::sqrt(unit(rng));
      if (unit(rng) >=
          (kTorusMajor + s * std::cos(phi)) / (kTorusMajor + kTorusMinor))
        continue;
      const double ring = kTorusMajor + s * std::cos(phi);
      cloud.points.push_back(
          {ring * std::cos(u), ring * std::sin(u), s * std::sin(phi)});
    }
  }
  return cloud;
}

BallSystem generate_empty_balls(const PointCloud& cloud,
                                const PointCloud& interior, int count,
                                std::uint64_t seed) {
  if (cloud.points.empty())
    throw std::invalid_argument("sample cloud is empty");
  if (interior.points.empty())
    throw std::invalid_argument("no interior candidates");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  count = std::min<int>(count, static_cast<int>(interior.points.size()));

  std::mt19937_64 rng = make_rng(seed);
  std::vector<int> pick(interior.points.size());
  std::iota(pick.begin(), pick.end(), 0);
  for (int b = 0; b < count; ++b) {
    std::uniform_int_distribution<int> rest(
        b, static_cast<int>(pick.size()) - 1);
    std::swap(pick[static_cast<std::size_t>(b)],
              pick[static_cast<std::size_t>(rest(rng))]);
  }

  BallSystem system;
  system.epsilon = 0.0;
  system.balls.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (int b = 0; b < count; ++b) {
    const Vec3 c = interior.points[static_cast<std::size_t>(pick[b])];
    double min_d2 = std::numeric_limits<double>::max();
    for (const Vec3& p : cloud.points)
      min_d2 = std::min(min_d2, distance_squared(p, c));
    double r = std::sqrt(min_d2);
    // sqrt rounding can put r*r above the exact minimum; nudge down until
    // the strict containment predicate excludes the nearest sample.
    while (r > 0.0 && min_d2 < r * r) r = std::nextafter(r, 0.0);
    system.balls[static_cast<std::size_t>(b)] = Ball{c, r};
  }
  for (const Ball& b : system.balls)
    if (!(b.radius > 0.0))
      throw std::runtime_error("interior candidate coincides with a sample");
  return system;
}

double bounding_box_diagonal(const PointCloud& cloud) {
  if (cloud.points.empty()) return 0.0;
  Aabb box;
  for (const Vec3& p : cloud.points) box.expand(p);
  return std::sqrt(distance_squared(box.hi, box.lo));
}

PointCloud read_points(std::istream& in) {
  std::string magic;
  if (!(in >> magic) || magic != "POINTS")
    throw std::runtime_error("points: missing POINTS header");
  long long n = 0;
  if (!(in >> n) || n < 0) throw std::runtime_error("points: bad count");
  PointCloud cloud;
  cloud.points.resize(static_cast<std::size_t>(n));
  for (auto& p : cloud.points) {
    p.x = read_double_token(in, "point coordinate");
    p.y = read_double_token(in, "point coordinate");
    p.z = read_double_token(in, "point coordinate");
  }
  return cloud;
}

void write_points(const PointCloud& cloud, std::ostream& out) {
  out << "POINTS " << cloud.points.size() << '\n';
  const auto precision = out.precision(17);
  for (const Vec3& p : cloud.points)
    out << p.x << ' ' << p.y << ' ' << p.z << '\n';
  out.precision(precision);
}

BallSystem read_balls(std::istream& in) {
  std::string magic;
  if (!(in >> magic) || magic != "BALLS")
    throw std::runtime_error("balls: missing BALLS header");
  long long m = 0;
  if (!(in >> m) || m < 0) throw std::runtime_error("balls: bad count");
  BallSystem system;
  system.epsilon = read_double_token(in, "epsilon");
  system.balls.resize(static_cast<std::size_t>(m));
  for (auto& b : system.balls) {
    b.center.x = read_double_token(in, "ball coordinate");
    b.center.y = read_double_token(in, "ball coordinate");
    b.center.z = read_double_token(in, "ball coordinate");
    b.radius = read_double_token(in, "ball radius");
  }
  validate_system(system);
  return system;
}

void write_balls(const BallSystem& system, std::ostream& out) {
  const auto precision = out.precision(17);
  out << "BALLS " << system.balls.size() << ' ' << system.epsilon << '\n';
  for (const Ball& b : system.balls)
    out << b.center.x << ' ' << b.center.y << ' ' << b.center.z << ' '
        << b.radius << '\n';
  out.precision(precision);
}

}  // namespace setcover
