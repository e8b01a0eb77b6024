#include "hyperrh/kernels.hpp"

#include <cmath>
#include <numbers>

#include "hyperrh/operators.hpp"

namespace hyperrh {

double unit_sphere_area(int m) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

KernelContext::KernelContext(StructuralSet phi_, StructuralSet psi_)
    : m(phi_.dim()), phi(std::move(phi_)), psi(std::move(psi_)),
      sigma_m(unit_sphere_area(m)), sum_psi_phi(m) {
  if (psi.dim() != m) throw DimensionMismatch("frame dimension mismatch");
  if (m < 3) throw DimensionMismatch("kernel context needs m >= 3");
  for (int i = 0; i < m; ++i)
    geometric_product_add(psi.vector(i), phi.vector(i), sum_psi_phi);
}

namespace {
double norm_of(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return std::sqrt(s);
}
}  // namespace

Multivector eval_K_psi(const KernelContext& ctx, std::span<const double> x) {
  const double r = norm_of(x);
  if (r < kOriginRadius) throw OriginSingularity("kernel evaluated at the origin");
  const double scale = -1.0 / (ctx.sigma_m * std::pow(r, ctx.m));
  return remap_to_frame(x, ctx.psi) * scale;
}

Multivector eval_K_phi(const KernelContext& ctx, std::span<const double> x) {
  const double r = norm_of(x);
  if (r < kOriginRadius) throw OriginSingularity("kernel evaluated at the origin");
  const double scale = -1.0 / (ctx.sigma_m * std::pow(r, ctx.m));
  return remap_to_frame(x, ctx.phi) * scale;
}

Multivector eval_K_phipsi(const KernelContext& ctx, std::span<const double> x) {
  const double r = norm_of(x);
  if (r < kOriginRadius) throw OriginSingularity("kernel evaluated at the origin");
  const int m = ctx.m;
  Multivector num = geometric_product(remap_to_frame(x, ctx.psi), remap_to_frame(x, ctx.phi)) *
                    ((2.0 - m) * std::pow(r, -double(m)));
  num += ctx.sum_psi_phi * std::pow(r, 2.0 - m);
  // Normalized so that phi_d psi_d K_phipsi = -delta: the minus sign built
  // into the volume potential -int K(y-x) v(y) dy then makes it a right
  // inverse of phi_d psi_d, and psi_d K_phipsi = -K_phi holds as well.
  return num * (1.0 / (2.0 * ctx.sigma_m * (m - 2.0)));
}

KernelResiduals kernel_harmonicity_residual(const KernelContext& ctx,
                                            std::span<const double> x, double h) {
  FieldFn kpp{[&ctx](std::span<const double> y) { return eval_K_phipsi(ctx, y); }, 8};
  KernelResiduals res;
  res.second_order = second_order_fd(kpp, ctx.phi, ctx.psi, x, h).norm();
  Multivector first = dirac_fd(kpp, ctx.psi, x, h) + eval_K_phi(ctx, x);
  res.first_order = first.norm();
  return res;
}

}  // namespace hyperrh
