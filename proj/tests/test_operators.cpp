#include "hyperrh/operators.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace hyperrh;

namespace {

FieldFn poly_fn(const PolyField& u) {
  return {[u](std::span<const double> x) { return u.eval(x); }, 99};
}

}  // namespace

TEST_CASE("dirac_poly on simple fields") {
  auto st = StructuralSet::standard(3);

  auto du = dirac_poly(PolyField::coordinate(3, 0), st);
  REQUIRE(du.terms().size() == 1);
  CHECK((du.terms().begin()->second - Multivector::basis_blade(3, 0b001)).norm() == 0.0);
  CHECK(du.terms().begin()->first.order() == 0);

  auto q = StructuralSet::random_orthogonal(3, 3);
  auto du2 = dirac_poly(PolyField::one_minus_norm_sq(3), q);
  // -2 x_psi: check by evaluation at a few points.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    double x[3] = {uni(rng), uni(rng), uni(rng)};
    auto expected = remap_to_frame(x, q) * -2.0;
    CHECK((du2.eval(x) - expected).max_abs() <= 1e-14);
  }

  auto c = PolyField::constant(3, Multivector::basis_blade(3, 0b011, 2.0));
  CHECK(dirac_poly(c, st).empty());
}

TEST_CASE("dirac_fd matches exact answers on low-degree fields") {
  auto st = StructuralSet::standard(3);
  double x[3] = {0.3, -0.7, 1.1};

  auto lin = poly_fn(PolyField::coordinate(3, 0));
  CHECK((dirac_fd(lin, st, x, 1e-3) - st.vector(0)).max_abs() <= 1e-10);

  // |x|^2 at (1,0,0): gradient 2 e_1, exact under central differences.
  PolyField normsq = PolyField::one_minus_norm_sq(3);
  normsq *= -1.0;
  normsq.add_term(MultiIndex::zero(3), Multivector::scalar(3, 1.0));
  double e1pt[3] = {1.0, 0.0, 0.0};
  auto g = dirac_fd(poly_fn(normsq), st, e1pt, 1e-3);
  CHECK((g - Multivector::basis_blade(3, 0b001, 2.0)).max_abs() <= 1e-8);
}

TEST_CASE("dirac_fd is second order (Richardson ratio)") {
  FieldFn f{[](std::span<const double> x) {
              Multivector r(3);
              r[0] = std::sin(x[0]) * std::cos(x[1]);
              r[0b011] = std::exp(0.3 * x[2]) * std::sin(x[1]);
              return r;
            },
            99};
  auto st = StructuralSet::random_orthogonal(3, 9);
  double x[3] = {0.4, 0.2, -0.5};

  auto ref = dirac_fd(f, st, x, 1e-5);  // near-exact reference
  double prev = 0.0;
  double h = 0.08;
  for (int lvl = 0; lvl < 3; ++lvl) {
    double err = (dirac_fd(f, st, x, h) - ref).norm();
    if (lvl > 0) {
      double ratio = prev / err;
      CHECK(ratio >= 3.0);
      CHECK(ratio <= 5.0);
    }
    prev = err;
    h *= 0.5;
  }
}

TEST_CASE("factorization residual vanishes for structural frames") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto u = PolyField::random(3, 3, 1000 + s);
    auto frame = StructuralSet::random_orthogonal(3, 7 + s);
    CHECK(factorization_residual(u, frame) <= 1e-12);
  }
  // Harmonic monomial x1 x2 with the standard frame: exactly zero.
  PolyField x1x2(3);
  MultiIndex j11 = MultiIndex::zero(3);
  j11.j[0] = 1;
  j11.j[1] = 1;
  x1x2.add_term(j11, Multivector::scalar(3, 1.0));
  CHECK(factorization_residual(x1x2, StructuralSet::standard(3)) == 0.0);
}

TEST_CASE("factorization fails for a non-orthonormal frame") {
  PolyField x1sq(3);
  MultiIndex j2 = MultiIndex::zero(3);
  j2.j[0] = 2;
  x1sq.add_term(j2, Multivector::scalar(3, 1.0));
  std::vector<std::vector<double>> bad = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(factorization_residual(x1sq, bad) > 0.1);
}

TEST_CASE("second order operator reduces to minus Laplacian for phi = psi") {
  auto q = StructuralSet::random_orthogonal(3, 21);
  auto u = PolyField::random(3, 3, 77);
  auto lhs = second_order_apply(u, q, q);
  auto minus_lap = u.laplacian();
  minus_lap *= -1.0;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    double x[3] = {uni(rng), uni(rng), uni(rng)};
    CHECK((lhs.eval(x) - minus_lap.eval(x)).max_abs() <= 1e-12);
  }
}

TEST_CASE("swapped-pair frame kills 1 - |x|^2 in m = 4") {
  auto phi = StructuralSet::standard(4);
  auto psi = phi.pairwise_swapped();
  auto u = PolyField::one_minus_norm_sq(4);
  CHECK(second_order_apply(u, phi, psi).max_coeff_abs() == 0.0);

  // Same u with phi = psi: the operator gives -Laplace(u) = +2m = 8.
  auto same = second_order_apply(u, phi, phi);
  double origin[4] = {0, 0, 0, 0};
  CHECK(same.eval(origin).scalar_part() == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("second_order_fd agrees with the symbolic operator") {
  auto phi = StructuralSet::random_orthogonal(3, 31);
  auto psi = StructuralSet::random_orthogonal(3, 32);
  auto u = PolyField::random(3, 3, 55);
  double x[3] = {0.2, -0.4, 0.6};
  auto exact = second_order_apply(u, phi, psi).eval(x);
  auto fd = second_order_fd(poly_fn(u), phi, psi, x, 1e-3);
  CHECK((exact - fd).max_abs() <= 1e-7);
}

TEST_CASE("counterexample certificate") {
  for (int m : {4, 6}) {
    auto rep = counterexample_report(m);
    CHECK(rep.harmonicity_residual == 0.0);
    CHECK(rep.center_value == 1.0);
    CHECK(rep.boundary_max_abs <= 1e-12);
    CHECK(rep.laplacian_value == doctest::Approx(-2.0 * m).epsilon(1e-15));
  }
  CHECK_THROWS_AS(counterexample_report(3), OddDimension);
}

TEST_CASE("operators are right-module linear") {
  auto psi = StructuralSet::random_orthogonal(3, 41);
  auto u = PolyField::random(3, 2, 99);
  auto lambda = Multivector::basis_blade(3, 0b101, 1.5) + Multivector::scalar(3, 0.5);
  auto a = dirac_poly(u.right_multiplied(lambda), psi);
  auto b = dirac_poly(u, psi).right_multiplied(lambda);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    double x[3] = {uni(rng), uni(rng), uni(rng)};
    CHECK((a.eval(x) - b.eval(x)).max_abs() <= 1e-13);
  }
}
