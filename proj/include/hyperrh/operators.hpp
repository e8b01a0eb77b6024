#pragma once
#include <functional>
#include <span>
#include <vector>

#include "hyperrh/poly_field.hpp"
#include "hyperrh/structural_set.hpp"

namespace hyperrh {

// Arbitrary multivector-valued field of a point, with its declared smoothness
// (number of continuous derivatives the evaluator is good for).
struct FieldFn {
  std::function<Multivector(std::span<const double>)> eval;
  int smoothness = 2;
};

// Generalized Dirac operator, exact on polynomials: sum_i psi^i d/dx_i with
// the frame vector multiplying from the left.
PolyField dirac_poly(const PolyField& u, const StructuralSet& psi);

// phi-then-psi second-order operator phi_d(psi_d u), exact.
PolyField second_order_apply(const PolyField& u, const StructuralSet& phi,
                             const StructuralSet& psi);

// Max-norm of psi_d psi_d u + Laplace(u); vanishes exactly for structural
// frames.
double factorization_residual(const PolyField& u, const StructuralSet& psi);

// Same residual for an arbitrary candidate frame (no orthonormality check),
// used to show the factorization fails off the structural condition.
double factorization_residual(const PolyField& u,
                              std::span<const std::vector<double>> frame);

// Step used by the finite-difference operators when none is given.
double default_fd_step(std::span<const double> x);

// Central-difference Dirac operator, O(h^2) for C^3 fields.
Multivector dirac_fd(const FieldFn& u, const StructuralSet& psi,
                     std::span<const double> x, double h);

// Central-difference second-order operator phi_d psi_d u, O(h^2).
Multivector second_order_fd(const FieldFn& u, const StructuralSet& phi,
                            const StructuralSet& psi, std::span<const double> x,
                            double h);

// Certificate that u = 1 - |x|^2 solves the swapped-frame second-order
// equation while being nonzero inside the unit ball: the equation is elliptic
// but has no maximum principle.
struct CounterexampleReport {
  int m = 0;
  StructuralSet phi;
  StructuralSet psi;
  double harmonicity_residual = 0.0;  // max coefficient of phi_d psi_d u
  double center_value = 0.0;          // u(0), expected 1
  double boundary_max_abs = 0.0;      // max |u| over unit-sphere samples
  double laplacian_value = 0.0;       // scalar of Laplace(u), expected -2m
};

CounterexampleReport counterexample_report(int m, std::uint64_t seed = 2024);

}  // namespace hyperrh
