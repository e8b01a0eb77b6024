#include "hyperrh/whitney.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace hyperrh;

TEST_CASE("whitney cubes: proportionality and disjointness on the ball") {
  auto mesh = build_unit_sphere(3);
  auto w = WhitneyCubeSet::decompose(mesh, {.max_depth = 5, .two_sided = false,
                                            .root_inflation = 1.3});
  REQUIRE(w.cubes().size() > 100);
  CHECK(w.proportionality_violations() == 0.0);

  // Every interior cube lies inside the domain.
  for (std::size_t i = 0; i < w.cubes().size(); i += 17) {
    const auto& q = w.cubes()[i];
    CHECK(q.inside);
    CHECK(mesh.contains(q.center));
    CHECK(q.dist >= q.diameter());
    CHECK(q.dist <= 4.0 * q.diameter());
  }

  // Monte-Carlo oracle for the union volume: cubes are disjoint and inside,
  // so the sampled union volume must match the summed cube volume.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 200000;
  int in_cubes = 0, in_ball = 0;
  for (int t = 0; t < n; ++t) {
    Vec3 p{uni(rng), uni(rng), uni(rng)};
    if (p.norm() >= 1.0) continue;
    ++in_ball;
    int owners = 0;
    for (const auto& q : w.cubes()) {
      if (std::abs(p.x - q.center.x) < 0.5 * q.side &&
          std::abs(p.y - q.center.y) < 0.5 * q.side &&
          std::abs(p.z - q.center.z) < 0.5 * q.side)
        ++owners;
    }
    CHECK(owners <= 1);  // disjoint interiors
    in_cubes += owners;
  }
  double ball_vol = 4.0 / 3.0 * std::acos(-1.0);
  double mc_union = ball_vol * in_cubes / in_ball;
  CHECK(std::abs(mc_union - w.covered_volume()) / w.covered_volume() < 0.02);
}

TEST_CASE("coverage grows with depth") {
  auto mesh = build_unit_sphere(3);
  double prev = 0.0;
  for (int depth : {4, 5, 6}) {
    auto w = WhitneyCubeSet::decompose(mesh, {.max_depth = depth, .two_sided = false,
                                              .root_inflation = 1.3});
    double cov = w.covered_volume();
    CHECK(cov > prev);
    prev = cov;
  }
  // Depth 6 leaves a collar of roughly two finest-cube diameters.
  CHECK(prev > 0.65 * mesh.signed_volume());
}

TEST_CASE("axis-aligned box domain decomposes cleanly") {
  // Unit box domain given by its 12-triangle mesh.
  std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                         {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  std::vector<std::array<int, 3>> f = {{0, 2, 1}, {0, 3, 2}, {4, 5, 6}, {4, 6, 7},
                                       {0, 1, 5}, {0, 5, 4}, {1, 2, 6}, {1, 6, 5},
                                       {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7}};
  BoundaryMesh box(std::move(v), std::move(f));
  REQUIRE(box.edges_closed());
  auto w = WhitneyCubeSet::decompose(box, {.max_depth = 6, .two_sided = false,
                                           .root_inflation = 1.2});
  CHECK(w.proportionality_violations() == 0.0);
  CHECK(w.covered_volume() > 0.55);
  CHECK(w.covered_volume() < 1.0);
}

TEST_CASE("two-sided decomposition covers an exterior collar") {
  auto mesh = build_unit_sphere(2);
  auto w = WhitneyCubeSet::decompose(mesh, {.max_depth = 5, .two_sided = true,
                                            .root_inflation = 1.6});
  std::size_t outside = 0;
  for (const auto& q : w.cubes())
    if (!q.inside) ++outside;
  CHECK(outside > 100);
  CHECK(w.proportionality_violations() == 0.0);
}

TEST_CASE("d-sum increments separate convergent from divergent exponents") {
  auto mesh = build_koch_extrusion(3, 2.0);
  auto w = WhitneyCubeSet::decompose(mesh, {.max_depth = 7, .two_sided = false,
                                            .root_inflation = 1.1});
  auto flat = w.d_sum_by_depth(2.4);
  auto grow = w.d_sum_by_depth(2.1);
  REQUIRE(flat.size() >= 4);

  auto last_ratio = [](const std::map<int, double>& inc) {
    auto it = inc.rbegin();
    double a = it->second;
    ++it;
    return a / it->second;
  };
  // d above the box dimension: increments level off. Below: keep growing.
  CHECK(last_ratio(flat) < 1.15);
  CHECK(last_ratio(grow) > 1.20);
  CHECK(w.d_sum(2.4) < w.d_sum(2.1));
}
