#include <cmath>
#include <map>

#include "hyperrh/errors.hpp"
#include "hyperrh/mesh.hpp"

namespace hyperrh {

namespace {

struct IcoBuilder {
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  std::map<std::pair<int, int>, int> midpoint_cache;

  int midpoint(int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint_cache.find(key);
    if (it != midpoint_cache.end()) return it->second;
    Vec3 m = ((verts[a] + verts[b]) * 0.5).normalized();
    int idx = static_cast<int>(verts.size());
    verts.push_back(m);
    midpoint_cache.emplace(key, idx);
    return idx;
  }
};

}  // namespace

BoundaryMesh build_unit_sphere(int subdivisions) {
  if (subdivisions < 0 || subdivisions > 7)
    throw std::invalid_argument("sphere subdivisions out of range [0, 7]");
  IcoBuilder b;
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  const double raw[12][3] = {{-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
                             {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
                             {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1}};
  for (const auto& v : raw) b.verts.push_back(Vec3{v[0], v[1], v[2]}.normalized());
  b.tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},
            {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},   {3, 4, 2},
            {3, 2, 6},  {3, 6, 8},  {3, 8, 9},   {4, 9, 5},  {2, 4, 11},  {6, 2, 10},
            {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::vector<std::array<int, 3>> next;
    next.reserve(b.tris.size() * 4);
    for (const auto& tr : b.tris) {
      int ab = b.midpoint(tr[0], tr[1]);
      int bc = b.midpoint(tr[1], tr[2]);
      int ca = b.midpoint(tr[2], tr[0]);
      next.push_back({tr[0], ab, ca});
      next.push_back({tr[1], bc, ab});
      next.push_back({tr[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    b.tris = std::move(next);
  }
  return BoundaryMesh(std::move(b.verts), std::move(b.tris));
}

namespace {

struct Pt2 {
  double x, y;
};

// Triadic Koch refinement of segment a->b bulging to the right of the
// direction (outward for a counterclockwise profile).
void koch_segment(const Pt2& a, const Pt2& b, int level, std::vector<Pt2>& out) {
  if (level == 0) {
    out.push_back(a);
    return;
  }
  Pt2 d{(b.x - a.x) / 3.0, (b.y - a.y) / 3.0};
  Pt2 p1{a.x + d.x, a.y + d.y};
  Pt2 p2{a.x + 2.0 * d.x, a.y + 2.0 * d.y};
  const double h = std::sqrt(3.0) / 2.0;
  Pt2 apex{(p1.x + p2.x) / 2.0 + d.y * h, (p1.y + p2.y) / 2.0 - d.x * h};
  koch_segment(a, p1, level - 1, out);
  koch_segment(p1, apex, level - 1, out);
  koch_segment(apex, p2, level - 1, out);
  koch_segment(p2, b, level - 1, out);
}

// Counterclockwise Koch-square profile: each side of the unit square
// replaced by an outward Koch curve.
std::vector<Pt2> koch_profile(int level) {
  const Pt2 sq[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<Pt2> pts;
  for (int s = 0; s < 4; ++s) koch_segment(sq[s], sq[(s + 1) % 4], level, pts);
  return pts;
}

double polygon_area2(const std::vector<Pt2>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Pt2 &a = p[i], &b = p[(i + 1) % p.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;  // twice the signed area
}

bool point_in_triangle2(const Pt2& p, const Pt2& a, const Pt2& b, const Pt2& c) {
  auto cross = [](const Pt2& o, const Pt2& u, const Pt2& v) {
    return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
  };
  double c1 = cross(a, b, p), c2 = cross(b, c, p), c3 = cross(c, a, p);
  return c1 >= 0.0 && c2 >= 0.0 && c3 >= 0.0;
}

// Ear clipping for a simple counterclockwise polygon.
std::vector<std::array<int, 3>> triangulate(const std::vector<Pt2>& poly) {
  const int n = static_cast<int>(poly.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<std::array<int, 3>> tris;
  tris.reserve(n - 2);

  auto cross = [&](int a, int b, int c) {
    const Pt2 &pa = poly[a], &pb = poly[b], &pc = poly[c];
    return (pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x);
  };

  int guard = 0;
  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      int a = idx[(i + idx.size() - 1) % idx.size()];
      int b = idx[i];
      int c = idx[(i + 1) % idx.size()];
      if (cross(a, b, c) <= 1e-15) continue;  // reflex or flat corner
      bool ear = true;
      for (int q : idx) {
        if (q == a || q == b || q == c) continue;
        if (point_in_triangle2(poly[q], poly[a], poly[b], poly[c])) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tris.push_back({a, b, c});
      idx.erase(idx.begin() + i);
      clipped = true;
      break;
    }
    if (!clipped) {
      if (++guard > 2) throw std::runtime_error("ear clipping failed: polygon not simple?");
      // Flat corners can stall the scan; drop the flattest one and retry.
      std::size_t flattest = 0;
      double best = 1e300;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        int a = idx[(i + idx.size() - 1) % idx.size()];
        int b = idx[i];
        int c = idx[(i + 1) % idx.size()];
        double cr = std::abs(cross(a, b, c));
        if (cr < best) {
          best = cr;
          flattest = i;
        }
      }
      idx.erase(idx.begin() + flattest);
    }
  }
  if (idx.size() == 3) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace

BoundaryMesh build_koch_extrusion(int level, double height) {
  if (level < 0 || level > 5) throw std::invalid_argument("koch level out of range [0, 5]");
  std::vector<Pt2> profile = koch_profile(level);
  if (polygon_area2(profile) < 0.0) throw std::runtime_error("profile orientation");

  const int np = static_cast<int>(profile.size());
  // z-rows sized to match the profile segment length.
  const double seg = 1.0 / std::pow(3.0, level);
  const int rows = std::max(1, static_cast<int>(std::lround(height / seg)));

  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(np) * (rows + 1));
  for (int r = 0; r <= rows; ++r) {
    double z = height * r / rows;
    for (const Pt2& p : profile) verts.push_back({p.x, p.y, z});
  }

  std::vector<std::array<int, 3>> tris;
  tris.reserve(static_cast<std::size_t>(np) * rows * 2 + 2 * (np - 2));
  auto vid = [np](int r, int i) { return r * np + (i % np); };
  for (int r = 0; r < rows; ++r)
    for (int i = 0; i < np; ++i) {
      int a = vid(r, i), b = vid(r, i + 1), c = vid(r + 1, i), d = vid(r + 1, i + 1);
      tris.push_back({a, b, d});
      tris.push_back({a, d, c});
    }

  auto cap = triangulate(profile);
  for (const auto& t : cap) {
    tris.push_back({t[0], t[2], t[1]});                                  // bottom, faces -z
    tris.push_back({vid(rows, t[0]), vid(rows, t[1]), vid(rows, t[2])}); // top, faces +z
  }
  return BoundaryMesh(std::move(verts), std::move(tris));
}

}  // namespace hyperrh
