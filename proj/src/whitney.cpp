#include "hyperrh/whitney.hpp"

#include <cmath>

namespace hyperrh {

namespace {

struct Builder {
  const BoundaryMesh& mesh;
  const WhitneyOptions& opt;
  std::vector<WhitneyCube>& cubes;
  std::vector<CollarCell>& collar;

  void visit(const Vec3& center, double side, int depth) {
    Vec3 h{side * 0.5, side * 0.5, side * 0.5};
    Box3 box{center - h, center + h};
    const double dist = mesh.tree().distance(box);
    const double diam = side * std::sqrt(3.0);

    if (dist >= diam) {
      // Separated from Gamma: the whole cube lies on one side.
      bool inside = mesh.contains(center);
      if (inside || opt.two_sided) cubes.push_back({center, side, depth, dist, inside});
      return;
    }
    if (depth >= opt.max_depth) {
      collar.push_back({center, side, depth, dist, mesh.contains(center)});
      return;
    }
    const double q = side * 0.25;
    for (int c = 0; c < 8; ++c) {
      Vec3 cc{center.x + ((c & 1) ? q : -q), center.y + ((c & 2) ? q : -q),
              center.z + ((c & 4) ? q : -q)};
      visit(cc, side * 0.5, depth + 1);
    }
  }
};

}  // namespace

WhitneyCubeSet WhitneyCubeSet::decompose(const BoundaryMesh& mesh, const WhitneyOptions& opt) {
  WhitneyCubeSet set;
  set.opt_ = opt;
  Box3 bb = mesh.bounding_box();
  Vec3 ext = bb.hi - bb.lo;
  set.root_side_ = opt.root_inflation * std::max({ext.x, ext.y, ext.z});
  Builder b{mesh, opt, set.cubes_, set.collar_};
  b.visit(bb.center(), set.root_side_, 0);
  return set;
}

double WhitneyCubeSet::covered_volume() const {
  double v = 0.0;
  for (const auto& q : cubes_)
    if (q.inside) v += q.side * q.side * q.side;
  return v;
}

double WhitneyCubeSet::d_sum(double d) const {
  double s = 0.0;
  for (const auto& q : cubes_)
    if (q.inside) s += std::pow(q.diameter(), d);
  return s;
}

std::map<int, double> WhitneyCubeSet::d_sum_by_depth(double d) const {
  std::map<int, double> by_depth;
  for (const auto& q : cubes_)
    if (q.inside) by_depth[q.depth] += std::pow(q.diameter(), d);
  return by_depth;
}

double WhitneyCubeSet::proportionality_violations() const {
  if (cubes_.empty()) return 0.0;
  std::size_t bad = 0;
  for (const auto& q : cubes_) {
    double diam = q.diameter();
    if (!(q.dist >= diam && q.dist <= 4.0 * diam)) ++bad;
  }
  return static_cast<double>(bad) / static_cast<double>(cubes_.size());
}

}  // namespace hyperrh
