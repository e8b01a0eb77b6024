#pragma once
#include <map>
#include <vector>

#include "hyperrh/mesh.hpp"

namespace hyperrh {

// Dyadic cube accepted by the Whitney criterion |Q| <= dist(Q, Gamma), where
// |Q| is the diameter and the distance is measured from the solid cube to the
// surface. The parent-rejection argument bounds dist(Q, Gamma) <= 4|Q|.
struct WhitneyCube {
  Vec3 center;
  double side = 0.0;
  int depth = 0;
  double dist = 0.0;
  bool inside = false;  // which side of Gamma the cube lies on

  double diameter() const { return side * std::sqrt(3.0); }
  Box3 box() const {
    Vec3 h{side * 0.5, side * 0.5, side * 0.5};
    return {center - h, center + h};
  }
};

// Max-depth leaf that is still too close to Gamma to be accepted; tiles the
// unresolved collar.
struct CollarCell {
  Vec3 center;
  double side = 0.0;
  int depth = 0;
  double dist = 0.0;
  bool center_inside = false;
};

struct WhitneyOptions {
  int max_depth = 6;
  // Keep cubes on the exterior side as well (needed by the extension).
  bool two_sided = false;
  // Root side = inflation * largest bounding-box extent.
  double root_inflation = 1.6;
};

// Whitney decomposition of the domain bounded by the mesh (and of the
// exterior collar in two-sided mode). Construction is single-threaded and
// deterministic; the result is immutable.
class WhitneyCubeSet {
 public:
  static WhitneyCubeSet decompose(const BoundaryMesh& mesh, const WhitneyOptions& opt);

  const std::vector<WhitneyCube>& cubes() const { return cubes_; }
  const std::vector<CollarCell>& collar() const { return collar_; }
  int max_depth() const { return opt_.max_depth; }
  double root_side() const { return root_side_; }

  // Volume of the accepted interior cubes.
  double covered_volume() const;

  // d-sum of the interior decomposition, total and per depth.
  double d_sum(double d) const;
  std::map<int, double> d_sum_by_depth(double d) const;

  // Fraction of cubes violating |Q| <= dist <= 4|Q| (0 for a correct build).
  double proportionality_violations() const;

 private:
  WhitneyOptions opt_;
  double root_side_ = 0.0;
  std::vector<WhitneyCube> cubes_;
  std::vector<CollarCell> collar_;
};

}  // namespace hyperrh
