#pragma once
#include <vector>

#include "hyperrh/geom.hpp"

namespace hyperrh {

// Static AABB tree over a triangle soup; median-split build, stack traversal.
// Queries are const and safe to run concurrently.
class AabbTree {
 public:
  AabbTree() = default;
  AabbTree(const std::vector<Vec3>& vertices, const std::vector<std::array<int, 3>>& triangles);

  bool empty() const { return nodes_.empty(); }
  const Box3& root_box() const { return nodes_[0].box; }

  // Distance from a point to the surface; optionally reports the closest
  // triangle.
  double distance(const Vec3& p, int* tri_index = nullptr) const;

  // Exact distance from a solid axis-aligned box to the surface (0 on
  // intersection).
  double distance(const Box3& box) const;

  bool intersects(const Box3& box) const;

  // Parity of crossings along a fixed ray; the direction avoids axis-aligned
  // faces and a second direction breaks near-edge hits.
  bool contains(const Vec3& p) const;

 private:
  struct Node {
    Box3 box;
    int left = -1, right = -1;  // children; leaf when left < 0
    int begin = 0, end = 0;     // triangle index range for leaves
  };

  int build(int begin, int end);
  int count_crossings(const Vec3& p, const Vec3& dir, bool& degenerate) const;

  std::vector<Node> nodes_;
  std::vector<int> order_;  // triangle indices, partitioned by the build
  std::vector<std::array<Vec3, 3>> tris_;
  std::vector<Box3> tri_boxes_;
};

}  // namespace hyperrh
