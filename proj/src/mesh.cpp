#include "hyperrh/mesh.hpp"
#include <algorithm>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperrh/errors.hpp"

namespace hyperrh {

FractalDescriptor FractalDescriptor::unit_ball(double d) {
  FractalDescriptor f;
  f.family = GeometryFamily::UnitBall;
  f.d = d;
  f.analytic_box_dimension = 2.0;
  return f;
}

FractalDescriptor FractalDescriptor::koch_extrusion(int level, double d) {
  FractalDescriptor f;
  f.family = GeometryFamily::KochExtrusion;
  f.level = level;
  f.d = d;
  f.analytic_box_dimension = 1.0 + std::log(4.0) / std::log(3.0);
  return f;
}

BoundaryMesh::BoundaryMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (triangles_.empty()) throw std::invalid_argument("empty mesh");

  // Edge manifoldness: every undirected edge must appear in exactly two
  // triangles, once per direction.
  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& t : triangles_)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      edge_use[{std::min(a, b), std::max(a, b)}] += (a < b) ? 1 : 4;
    }
  edges_closed_ = true;
  for (const auto& [e, u] : edge_use)
    if (u != 5) edges_closed_ = false;  // 1 forward + 1 backward

  double vol6 = 0.0;
  for (const auto& t : triangles_) {
    const Vec3 &a = vertices_[t[0]], &b = vertices_[t[1]], &c = vertices_[t[2]];
    vol6 += a.dot(b.cross(c));
  }
  if (vol6 < 0.0) {
    for (auto& t : triangles_) std::swap(t[1], t[2]);
    vol6 = -vol6;
  }
  signed_volume_ = vol6 / 6.0;

  centroids_.reserve(triangles_.size());
  normals_.reserve(triangles_.size());
  areas_.reserve(triangles_.size());
  Vec3 weighted_normal_sum{};
  std::vector<double> edge_lengths;
  edge_lengths.reserve(3 * triangles_.size());
  for (const auto& t : triangles_) {
    const Vec3 &a = vertices_[t[0]], &b = vertices_[t[1]], &c = vertices_[t[2]];
    Vec3 cr = (b - a).cross(c - a);
    double a2 = cr.norm();
    if (a2 <= 0.0) throw std::invalid_argument("degenerate triangle");
    centroids_.push_back((a + b + c) * (1.0 / 3.0));
    normals_.push_back(cr * (1.0 / a2));
    areas_.push_back(0.5 * a2);
    total_area_ += 0.5 * a2;
    weighted_normal_sum += cr * 0.5;
    edge_lengths.push_back((b - a).norm());
    edge_lengths.push_back((c - b).norm());
    edge_lengths.push_back((a - c).norm());
  }
  closure_defect_ = weighted_normal_sum.norm() / total_area_;
  // Median edge length: robust against cap slivers from polygon
  // triangulation.
  auto mid = edge_lengths.begin() + edge_lengths.size() / 2;
  std::nth_element(edge_lengths.begin(), mid, edge_lengths.end());
  spacing_ = *mid;

  tree_ = std::make_shared<AabbTree>(vertices_, triangles_);
}

std::array<Vec3, 3> BoundaryMesh::corners(std::size_t e) const {
  const auto& t = triangles_[e];
  return {vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]};
}

void BoundaryMesh::save_off(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "OFF\n" << vertices_.size() << ' ' << triangles_.size() << " 0\n";
  out.precision(17);
  for (const Vec3& v : vertices_) out << v.x << ' ' << v.y << ' ' << v.z << '\n';
  for (const auto& t : triangles_) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

BoundaryMesh BoundaryMesh::load_off(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string tag;
  in >> tag;
  if (tag != "OFF") throw std::runtime_error(path + ": not an OFF file");
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> nv >> nf >> ne;
  std::vector<Vec3> verts(nv);
  for (auto& v : verts) in >> v.x >> v.y >> v.z;
  std::vector<std::array<int, 3>> tris(nf);
  for (auto& t : tris) {
    int k = 0;
    in >> k;
    if (k != 3) throw std::runtime_error(path + ": only triangle faces supported");
    in >> t[0] >> t[1] >> t[2];
  }
  if (!in) throw std::runtime_error(path + ": truncated OFF file");
  return BoundaryMesh(std::move(verts), std::move(tris));
}

BoundaryMesh build_boundary_mesh(const FractalDescriptor& desc, int resolution) {
  switch (desc.family) {
    case GeometryFamily::UnitBall:
      return build_unit_sphere(resolution);
    case GeometryFamily::KochExtrusion:
      return build_koch_extrusion(desc.level);
  }
  throw std::invalid_argument("unsupported geometry family");
}

}  // namespace hyperrh
