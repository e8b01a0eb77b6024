#include "hyperrh/aabb_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hyperrh {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  Vec3 ab = b - a, ac = c - a, ap = p - a;
  double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  Vec3 bp = p - b;
  double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));

  Vec3 cp = p - c;
  double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));

  double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
    return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));

  double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

double segment_segment_dist_sq(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
  // Ericson 5.1.9 (closest points of two segments).
  Vec3 d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  double a = d1.norm_sq(), e = d2.norm_sq(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  constexpr double eps = 1e-30;
  if (a <= eps && e <= eps) return r.norm_sq();
  if (a <= eps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = d1.dot(r);
    if (e <= eps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = d1.dot(d2);
      double denom = a * e - b * b;
      if (denom > eps) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  Vec3 c1 = p1 + d1 * s, c2 = p2 + d2 * t;
  return (c1 - c2).norm_sq();
}

namespace {

bool separated_on_axis(const Vec3& axis, const Vec3& v0, const Vec3& v1, const Vec3& v2,
                       const Vec3& half) {
  double p0 = axis.dot(v0), p1 = axis.dot(v1), p2 = axis.dot(v2);
  double r = half.x * std::abs(axis.x) + half.y * std::abs(axis.y) + half.z * std::abs(axis.z);
  double mn = std::min({p0, p1, p2}), mx = std::max({p0, p1, p2});
  return mn > r || mx < -r;
}

}  // namespace

bool triangle_box_overlap(const Vec3& center, const Vec3& half, const Vec3& a, const Vec3& b,
                          const Vec3& c) {
  // Akenine-Moller SAT: 3 box axes, triangle normal, 9 cross axes.
  Vec3 v0 = a - center, v1 = b - center, v2 = c - center;

  for (int i = 0; i < 3; ++i) {
    double mn = std::min({v0[i], v1[i], v2[i]});
    double mx = std::max({v0[i], v1[i], v2[i]});
    double h = half[i];
    if (mn > h || mx < -h) return false;
  }

  Vec3 e0 = v1 - v0, e1 = v2 - v1, e2 = v0 - v2;
  Vec3 n = e0.cross(e1);
  double d = n.dot(v0);
  double r = half.x * std::abs(n.x) + half.y * std::abs(n.y) + half.z * std::abs(n.z);
  if (std::abs(d) > r) return false;

  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const Vec3& e : {e0, e1, e2})
    for (const Vec3& ax : axes) {
      Vec3 cr = ax.cross(e);
      if (cr.norm_sq() < 1e-30) continue;
      if (separated_on_axis(cr, v0, v1, v2, half)) return false;
    }
  return true;
}

double triangle_box_distance(const Box3& box, const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 center = box.center(), half = box.half();
  if (triangle_box_overlap(center, half, a, b, c)) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& v : {a, b, c}) best = std::min(best, box.dist_sq(v));

  Vec3 corners[8];
  for (int i = 0; i < 8; ++i)
    corners[i] = {(i & 1) ? box.hi.x : box.lo.x, (i & 2) ? box.hi.y : box.lo.y,
                  (i & 4) ? box.hi.z : box.lo.z};
  for (const Vec3& corner : corners)
    best = std::min(best, (corner - closest_point_on_triangle(corner, a, b, c)).norm_sq());

  static const int edge_pairs[12][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                                        {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  const Vec3 tri[3] = {a, b, c};
  for (int e = 0; e < 3; ++e)
    for (auto& bp : edge_pairs)
      best = std::min(best, segment_segment_dist_sq(tri[e], tri[(e + 1) % 3], corners[bp[0]],
                                                    corners[bp[1]]));
  return std::sqrt(best);
}

bool ray_triangle(const Vec3& orig, const Vec3& dir, const Vec3& a, const Vec3& b, const Vec3& c,
                  double& t, double& bary_min) {
  constexpr double eps = 1e-13;
  Vec3 ab = b - a, ac = c - a;
  Vec3 pvec = dir.cross(ac);
  double det = ab.dot(pvec);
  if (std::abs(det) < eps) return false;
  double inv = 1.0 / det;
  Vec3 tvec = orig - a;
  double u = tvec.dot(pvec) * inv;
  if (u < -1e-12 || u > 1.0 + 1e-12) return false;
  Vec3 qvec = tvec.cross(ab);
  double v = dir.dot(qvec) * inv;
  if (v < -1e-12 || u + v > 1.0 + 1e-12) return false;
  t = ac.dot(qvec) * inv;
  if (t <= eps) return false;
  bary_min = std::min({u, v, 1.0 - u - v});
  return true;
}

AabbTree::AabbTree(const std::vector<Vec3>& vertices,
                   const std::vector<std::array<int, 3>>& triangles) {
  tris_.reserve(triangles.size());
  tri_boxes_.reserve(triangles.size());
  for (const auto& tr : triangles) {
    std::array<Vec3, 3> t{vertices[tr[0]], vertices[tr[1]], vertices[tr[2]]};
    Box3 b = Box3::empty();
    for (const Vec3& v : t) b.expand(v);
    tris_.push_back(t);
    tri_boxes_.push_back(b);
  }
  order_.resize(tris_.size());
  std::iota(order_.begin(), order_.end(), 0);
  nodes_.reserve(2 * tris_.size() + 1);
  build(0, static_cast<int>(tris_.size()));
}

int AabbTree::build(int begin, int end) {
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back({});
  Box3 box = Box3::empty();
  for (int i = begin; i < end; ++i) box.expand(tri_boxes_[order_[i]]);
  nodes_[idx].box = box;
  if (end - begin <= 4) {
    nodes_[idx].begin = begin;
    nodes_[idx].end = end;
    return idx;
  }
  Vec3 ext = box.hi - box.lo;
  int axis = (ext.x >= ext.y && ext.x >= ext.z) ? 0 : (ext.y >= ext.z ? 1 : 2);
  int mid = (begin + end) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int lhs, int rhs) {
                     return tri_boxes_[lhs].center()[axis] < tri_boxes_[rhs].center()[axis];
                   });
  int l = build(begin, mid);
  int r = build(mid, end);
  nodes_[idx].left = l;
  nodes_[idx].right = r;
  return idx;
}

double AabbTree::distance(const Vec3& p, int* tri_index) const {
  double best = std::numeric_limits<double>::infinity();
  int best_tri = -1;
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& n = nodes_[stack[--top]];
    if (n.box.dist_sq(p) >= best) continue;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        int ti = order_[i];
        const auto& t = tris_[ti];
        double d = (p - closest_point_on_triangle(p, t[0], t[1], t[2])).norm_sq();
        if (d < best) {
          best = d;
          best_tri = ti;
        }
      }
    } else {
      double dl = nodes_[n.left].box.dist_sq(p), dr = nodes_[n.right].box.dist_sq(p);
      if (dl < dr) {  // nearer child first
        stack[top++] = n.right;
        stack[top++] = n.left;
      } else {
        stack[top++] = n.left;
        stack[top++] = n.right;
      }
    }
  }
  if (tri_index) *tri_index = best_tri;
  return std::sqrt(best);
}

double AabbTree::distance(const Box3& box) const {
  double best = std::numeric_limits<double>::infinity();
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& n = nodes_[stack[--top]];
    if (n.box.dist_sq(box) >= best) continue;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        const auto& t = tris_[order_[i]];
        double d = triangle_box_distance(box, t[0], t[1], t[2]);
        best = std::min(best, d * d);
        if (best == 0.0) return 0.0;
      }
    } else {
      double dl = nodes_[n.left].box.dist_sq(box), dr = nodes_[n.right].box.dist_sq(box);
      if (dl < dr) {
        stack[top++] = n.right;
        stack[top++] = n.left;
      } else {
        stack[top++] = n.left;
        stack[top++] = n.right;
      }
    }
  }
  return std::sqrt(best);
}

bool AabbTree::intersects(const Box3& box) const { return distance(box) == 0.0; }

int AabbTree::count_crossings(const Vec3& p, const Vec3& dir, bool& degenerate) const {
  int count = 0;
  degenerate = false;
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& n = nodes_[stack[--top]];
    double tmin = 0.0, tmax = std::numeric_limits<double>::infinity();
    bool miss = false;
    for (int i = 0; i < 3 && !miss; ++i) {
      double o = p[i], d = dir[i];
      double lo = n.box.lo[i], hi = n.box.hi[i];
      if (std::abs(d) < 1e-300) {
        if (o < lo || o > hi) miss = true;
      } else {
        double t0 = (lo - o) / d, t1 = (hi - o) / d;
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
        if (tmin > tmax) miss = true;
      }
    }
    if (miss) continue;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        const auto& t = tris_[order_[i]];
        double th, bary;
        if (ray_triangle(p, dir, t[0], t[1], t[2], th, bary)) {
          if (bary < 1e-9) degenerate = true;
          ++count;
        }
      }
    } else {
      stack[top++] = n.left;
      stack[top++] = n.right;
    }
  }
  return count;
}

bool AabbTree::contains(const Vec3& p) const {
  // Oblique primary direction; the fallback handles hits grazing an edge.
  static const Vec3 dirs[2] = {Vec3{0.531029, 0.283715, 0.797391}.normalized(),
                               Vec3{-0.377321, 0.846215, 0.376049}.normalized()};
  bool degenerate = false;
  int c = count_crossings(p, dirs[0], degenerate);
  if (degenerate) c = count_crossings(p, dirs[1], degenerate);
  return (c & 1) != 0;
}

}  // namespace hyperrh
