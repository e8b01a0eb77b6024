#include "hyperrh/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperrh/boxdim.hpp"

using namespace hyperrh;

TEST_CASE("icosphere: closure, orientation, area") {
  auto mesh = build_unit_sphere(4);
  CHECK(mesh.element_count() == 5120);
  CHECK(mesh.edges_closed());
  CHECK(mesh.normal_closure_defect() <= 1e-8);
  CHECK(mesh.signed_volume() > 0.0);
  // Inscribed polyhedron: area slightly below 4 pi but within 0.5%.
  double sphere_area = 4.0 * std::numbers::pi;
  CHECK(std::abs(mesh.total_area() - sphere_area) / sphere_area < 0.005);
  CHECK(mesh.signed_volume() == doctest::Approx(4.0 / 3.0 * std::numbers::pi).epsilon(0.01));

  // Outward normals on a sphere point along the position vector.
  for (std::size_t e = 0; e < mesh.element_count(); e += 97)
    CHECK(mesh.normal(e).dot(mesh.centroid(e)) > 0.9);
}

TEST_CASE("containment and distance queries") {
  auto mesh = build_unit_sphere(3);
  CHECK(mesh.contains({0, 0, 0}));
  CHECK(mesh.contains({0.6, 0.3, -0.4}));
  CHECK_FALSE(mesh.contains({1.2, 0, 0}));
  CHECK_FALSE(mesh.contains({3, 3, 3}));

  // Distance from center roughly 1 (inradius of the faceted sphere).
  CHECK(mesh.distance({0, 0, 0}) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(mesh.distance({2.0, 0, 0}) == doctest::Approx(1.0).epsilon(0.01));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  for (int t = 0; t < 200; ++t) {
    Vec3 p{uni(rng), uni(rng), uni(rng)};
    double r = p.norm();
    if (r < 0.99) CHECK(mesh.contains(p));
    if (r > 1.01) CHECK_FALSE(mesh.contains(p));
  }
}

TEST_CASE("triangle-box distance against sampled oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    Vec3 a{uni(rng), uni(rng), uni(rng)}, b{uni(rng), uni(rng), uni(rng)},
        c{uni(rng), uni(rng), uni(rng)};
    Vec3 lo{uni(rng), uni(rng), uni(rng)};
    Box3 box{lo, lo + Vec3{0.4, 0.3, 0.5}};
    double exact = triangle_box_distance(box, a, b, c);

    // Sampled upper bound: dense barycentric grid against the box.
    double best = 1e300;
    const int n = 24;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Vec3 p = a + (b - a) * (double(i) / n) + (c - a) * (double(j) / n);
        best = std::min(best, std::sqrt(box.dist_sq(p)));
      }
    CHECK(exact <= best + 1e-12);
    CHECK(exact >= best - 0.08);  // grid resolution slack
  }
}

TEST_CASE("koch extrusion: base cases and face counts") {
  auto box = build_koch_extrusion(0);
  CHECK(box.edges_closed());
  CHECK(box.signed_volume() == doctest::Approx(2.0).epsilon(1e-12));  // 1 x 1 x 2 prism

  auto k1 = build_koch_extrusion(1);
  CHECK(k1.edges_closed());
  CHECK(k1.signed_volume() > 2.0);  // outward bulges add volume

  auto k3 = build_koch_extrusion(3);
  CHECK(k3.edges_closed());
  CHECK(k3.normal_closure_defect() <= 1e-8);
  // Profile has 4 * 4^3 segments; lateral wall = segments * rows * 2.
  std::size_t segments = 4 * 64;
  std::size_t caps = 2 * (segments - 2);
  std::size_t rows = (k3.element_count() - caps) / (2 * segments);
  CHECK(k3.element_count() == caps + 2 * segments * rows);
  CHECK(rows >= 27);

  CHECK(k3.contains({0.5, 0.5, 1.0}));
  CHECK_FALSE(k3.contains({0.5, 0.5, 2.5}));
  CHECK_FALSE(k3.contains({2.0, 0.5, 1.0}));
}

TEST_CASE("OFF round trip") {
  auto mesh = build_unit_sphere(1);
  std::string path = "/tmp/hyperrh_sphere1.off";
  mesh.save_off(path);
  auto back = BoundaryMesh::load_off(path);
  REQUIRE(back.vertices().size() == mesh.vertices().size());
  REQUIRE(back.element_count() == mesh.element_count());
  CHECK(back.total_area() == doctest::Approx(mesh.total_area()).epsilon(1e-12));
  std::remove(path.c_str());
}

TEST_CASE("box dimension of the sphere is 2") {
  auto mesh = build_unit_sphere(4);
  auto est = box_dimension_estimate(mesh, 0.08, 0.8, 7);
  CHECK(std::abs(est.dimension - 2.0) <= 0.1);
  CHECK_THROWS_AS(box_dimension_estimate(mesh, 1e-4, 0.1, 4), std::invalid_argument);
}

TEST_CASE("box dimension of the koch extrusion") {
  auto mesh = build_koch_extrusion(3);
  double tau_min = 1.0 / 27.0;
  auto est = box_dimension_estimate(mesh, tau_min, 12.0 * tau_min, 6);
  double target = 1.0 + std::log(4.0) / std::log(3.0);
  CHECK(std::abs(est.dimension - target) <= 0.08);
}

TEST_CASE("d-summability integral trend") {
  auto mesh = build_unit_sphere(3);
  auto est = box_dimension_estimate(mesh, 0.12, 0.9, 7);
  // d = 2.5 > 2: integrand ~ tau^{-0.5}, integrable; increments shrink.
  auto partial = d_summability_partial_integrals(est, 2.5);
  REQUIRE(partial.size() >= 3);
  double inc_first = partial[1] - partial[0];
  double inc_last = partial[partial.size() - 1] - partial[partial.size() - 2];
  CHECK(inc_last < inc_first);
}
