#pragma once
#include <span>

#include "hyperrh/structural_set.hpp"

namespace hyperrh {

// Area of the unit sphere in R^m.
double unit_sphere_area(int m);

// Evaluation context for the Cauchy kernels. m >= 3: the closed forms carry
// (2-m) denominators and the m=2 logarithmic case is out of scope.
struct KernelContext {
  KernelContext(StructuralSet phi_, StructuralSet psi_);

  int m;
  StructuralSet phi;
  StructuralSet psi;
  double sigma_m;
  Multivector sum_psi_phi;  // sum_i psi^i phi^i, grades {0,2}
};

inline constexpr double kOriginRadius = 1e-14;

// First-order kernel K_psi(x) = -x_psi / (sigma_m |x|^m); grade 1,
// homogeneous of degree 1-m.
Multivector eval_K_psi(const KernelContext& ctx, std::span<const double> x);

// Same closed form over the phi frame (needed by the transform relations).
Multivector eval_K_phi(const KernelContext& ctx, std::span<const double> x);

// Second-order kernel
//   K_phipsi(x) = [(2-m)|x|^{-m} x_psi x_phi + |x|^{2-m} sum_i psi^i phi^i]
//                 / (2 sigma_m (m-2));
// grades {0,2}, homogeneous of degree 2-m. Normalized against the transform
// relations: psi_d K_phipsi = -K_phi and phi_d psi_d K_phipsi = -delta, so
// the volume potential -int K_phipsi(y-x) v(y) dy is a right inverse of
// phi_d psi_d. For phi = psi it collapses to the scalar
// |x|^{2-m} / (sigma_m (2-m)), i.e. the Laplace fundamental solution.
Multivector eval_K_phipsi(const KernelContext& ctx, std::span<const double> x);

struct KernelResiduals {
  double second_order = 0.0;  // |phi_d psi_d K_phipsi|(x)
  double first_order = 0.0;   // |psi_d K_phipsi + K_phi|(x)
};

// Finite-difference residuals of the kernel identities; both vanish at O(h^2)
// away from the origin.
KernelResiduals kernel_harmonicity_residual(const KernelContext& ctx,
                                            std::span<const double> x, double h);

}  // namespace hyperrh
