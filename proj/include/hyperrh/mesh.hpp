#pragma once
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperrh/aabb_tree.hpp"
#include "hyperrh/geom.hpp"

namespace hyperrh {

enum class GeometryFamily { UnitBall, KochExtrusion };

// Which surface to build and, for prefractals, how deep to iterate. The
// analytic box dimension is 2 for the ball and 1 + log4/log3 for the
// Koch-profile extrusion.
struct FractalDescriptor {
  GeometryFamily family = GeometryFamily::UnitBall;
  int level = 0;              // Koch iteration depth
  double d = 2.5;             // summability exponent used by the solver
  std::optional<double> analytic_box_dimension;

  static FractalDescriptor unit_ball(double d = 2.5);
  static FractalDescriptor koch_extrusion(int level, double d = 2.4);
};

// Closed triangle mesh with outward orientation. Construction computes
// per-element centroid/area/normal, verifies that every edge is shared by
// exactly two triangles, flips orientation if the signed volume is negative,
// and builds the distance/containment tree.
class BoundaryMesh {
 public:
  BoundaryMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  std::size_t element_count() const { return triangles_.size(); }

  const Vec3& centroid(std::size_t e) const { return centroids_[e]; }
  const Vec3& normal(std::size_t e) const { return normals_[e]; }
  double area(std::size_t e) const { return areas_[e]; }
  std::array<Vec3, 3> corners(std::size_t e) const;

  double total_area() const { return total_area_; }
  double signed_volume() const { return signed_volume_; }
  // Mean edge length; the local resolution scale.
  double spacing() const { return spacing_; }
  // |sum_e area_e * n_e| / total area; divergence-theorem closure defect.
  double normal_closure_defect() const { return closure_defect_; }
  bool edges_closed() const { return edges_closed_; }

  const AabbTree& tree() const { return *tree_; }
  bool contains(const Vec3& p) const { return tree_->contains(p); }
  double distance(const Vec3& p) const { return tree_->distance(p); }
  Box3 bounding_box() const { return tree_->root_box(); }

  void save_off(const std::string& path) const;
  static BoundaryMesh load_off(const std::string& path);

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Vec3> centroids_, normals_;
  std::vector<double> areas_;
  double total_area_ = 0.0, signed_volume_ = 0.0, spacing_ = 0.0, closure_defect_ = 0.0;
  bool edges_closed_ = false;
  std::shared_ptr<const AabbTree> tree_;
};

// Icosphere with 20 * 4^subdivisions triangles projected onto the unit
// sphere; 5120 triangles at subdivisions = 4.
BoundaryMesh build_unit_sphere(int subdivisions);

// Prism over a square profile whose four sides are replaced by outward
// triadic Koch curves at the given level; extruded over z in [0, height].
// Level 0 is a plain box. The lateral wall dominates the box-counting
// scaling; the caps are flat.
BoundaryMesh build_koch_extrusion(int level, double height = 2.0);

// Dispatch on the descriptor. resolution: sphere subdivisions (default 4).
BoundaryMesh build_boundary_mesh(const FractalDescriptor& desc, int resolution = 4);

}  // namespace hyperrh
