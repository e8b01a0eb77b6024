#pragma once
#include <algorithm>
#include <array>
#include <cmath>

namespace hyperrh {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm_sq() const { return dot(*this); }
  double norm() const { return std::sqrt(norm_sq()); }
  Vec3 normalized() const {
    double n = norm();
    return {x / n, y / n, z / n};
  }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  std::array<double, 3> to_array() const { return {x, y, z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Axis-aligned box.
struct Box3 {
  Vec3 lo, hi;

  Vec3 center() const { return (lo + hi) * 0.5; }
  Vec3 half() const { return (hi - lo) * 0.5; }
  void expand(const Vec3& p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  void expand(const Box3& b) {
    expand(b.lo);
    expand(b.hi);
  }
  double dist_sq(const Vec3& p) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      double d = std::max({lo[i] - p[i], 0.0, p[i] - hi[i]});
      s += d * d;
    }
    return s;
  }
  double dist_sq(const Box3& b) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      double d = std::max({lo[i] - b.hi[i], 0.0, b.lo[i] - hi[i]});
      s += d * d;
    }
    return s;
  }
  static Box3 empty() {
    constexpr double inf = 1e300;
    return {{inf, inf, inf}, {-inf, -inf, -inf}};
  }
};

// Closest point on triangle (a, b, c) to p.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

double segment_segment_dist_sq(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2);

// Separating-axis overlap test between a triangle and an axis-aligned box.
bool triangle_box_overlap(const Vec3& center, const Vec3& half, const Vec3& a, const Vec3& b,
                          const Vec3& c);

// Exact distance between a solid axis-aligned box and a triangle (0 when they
// intersect).
double triangle_box_distance(const Box3& box, const Vec3& a, const Vec3& b, const Vec3& c);

// Moller-Trumbore; returns true on a hit with t > eps.
bool ray_triangle(const Vec3& orig, const Vec3& dir, const Vec3& a, const Vec3& b, const Vec3& c,
                  double& t, double& bary_min);

}  // namespace hyperrh
