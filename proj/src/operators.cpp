#include "hyperrh/operators.hpp"

#include <cmath>
#include <random>

namespace hyperrh {

namespace {

PolyField dirac_poly_frame(const PolyField& u, std::span<const Multivector> frame) {
  const int m = u.dim();
  if (static_cast<int>(frame.size()) != m) throw DimensionMismatch("frame dimension mismatch");
  PolyField r(m);
  for (int i = 0; i < m; ++i) {
    PolyField du = u.derivative(i);
    for (const auto& [j, c] : du.terms()) r.add_term(j, frame[i] * c);
  }
  return r;
}

}  // namespace

PolyField dirac_poly(const PolyField& u, const StructuralSet& psi) {
  std::vector<Multivector> frame;
  for (int i = 0; i < psi.dim(); ++i) frame.push_back(psi.vector(i));
  return dirac_poly_frame(u, frame);
}

PolyField second_order_apply(const PolyField& u, const StructuralSet& phi,
                             const StructuralSet& psi) {
  return dirac_poly(dirac_poly(u, psi), phi);
}

double factorization_residual(const PolyField& u, const StructuralSet& psi) {
  PolyField r = second_order_apply(u, psi, psi);
  r += u.laplacian();
  return r.max_coeff_abs();
}

double factorization_residual(const PolyField& u,
                              std::span<const std::vector<double>> frame) {
  const int m = u.dim();
  std::vector<Multivector> vecs;
  vecs.reserve(frame.size());
  for (const auto& v : frame) vecs.push_back(Multivector::vector(m, v));
  PolyField r = dirac_poly_frame(dirac_poly_frame(u, vecs), vecs);
  r += u.laplacian();
  return r.max_coeff_abs();
}

double default_fd_step(std::span<const double> x) {
  double n = 0.0;
  for (double xi : x) n += xi * xi;
  return 1e-4 * std::max(1.0, std::sqrt(n));
}

Multivector dirac_fd(const FieldFn& u, const StructuralSet& psi,
                     std::span<const double> x, double h) {
  const int m = psi.dim();
  std::vector<double> p(x.begin(), x.end());
  Multivector r(m);
  for (int i = 0; i < m; ++i) {
    p[i] = x[i] + h;
    Multivector up = u.eval(p);
    p[i] = x[i] - h;
    Multivector um = u.eval(p);
    p[i] = x[i];
    geometric_product_add(psi.vector(i), (up - um) * (0.5 / h), r);
  }
  return r;
}

Multivector second_order_fd(const FieldFn& u, const StructuralSet& phi,
                            const StructuralSet& psi, std::span<const double> x,
                            double h) {
  const int m = psi.dim();
  std::vector<double> p(x.begin(), x.end());
  Multivector r(m);
  const Multivector u0 = u.eval(p);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      Multivector dki(m);
      if (k == i) {
        p[i] = x[i] + h;
        Multivector up = u.eval(p);
        p[i] = x[i] - h;
        Multivector um = u.eval(p);
        p[i] = x[i];
        dki = (up - 2.0 * u0 + um) * (1.0 / (h * h));
      } else {
        p[k] = x[k] + h;
        p[i] = x[i] + h;
        Multivector upp = u.eval(p);
        p[i] = x[i] - h;
        Multivector upm = u.eval(p);
        p[k] = x[k] - h;
        Multivector umm = u.eval(p);
        p[i] = x[i] + h;
        Multivector ump = u.eval(p);
        p[k] = x[k];
        p[i] = x[i];
        dki = (upp - upm - ump + umm) * (0.25 / (h * h));
      }
      geometric_product_add(phi.vector(k) * psi.vector(i), dki, r);
    }
  }
  return r;
}

CounterexampleReport counterexample_report(int m, std::uint64_t seed) {
  if (m % 2 != 0) throw OddDimension("swapped-pair frame needs even dimension");
  if (m < 4 || m > kMaxDim) throw DimensionMismatch("dimension must be even in [4, 8]");
  // A signed permutation frame is orthonormal without rounding, so the
  // cancellation below is exact in floating point.
  StructuralSet phi = StructuralSet::random_signed_permutation(m, seed);
  StructuralSet psi = phi.pairwise_swapped();

  PolyField u = PolyField::one_minus_norm_sq(m);
  PolyField res = second_order_apply(u, phi, psi);

  CounterexampleReport rep{m, phi, psi, res.max_coeff_abs(), 0.0, 0.0, 0.0};
  std::vector<double> origin(m, 0.0);
  rep.center_value = u.eval(origin).scalar_part();
  rep.laplacian_value = u.laplacian().eval(origin).scalar_part();

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 64; ++s) {
    std::vector<double> x(m);
    double n = 0.0;
    do {
      n = 0.0;
      for (double& xi : x) {
        xi = gauss(rng);
        n += xi * xi;
      }
    } while (n == 0.0);
    n = std::sqrt(n);
    for (double& xi : x) xi /= n;
    rep.boundary_max_abs = std::max(rep.boundary_max_abs, std::abs(u.eval(x).scalar_part()));
  }
  return rep;
}

}  // namespace hyperrh
