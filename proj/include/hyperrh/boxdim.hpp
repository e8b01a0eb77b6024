#pragma once
#include <span>
#include <vector>

#include "hyperrh/mesh.hpp"

namespace hyperrh {

// Quasi-uniform deterministic point sample of the surface (barycentric
// lattice per triangle, spacing-controlled).
std::vector<Vec3> sample_surface(const BoundaryMesh& mesh, double spacing);

// Greedy ball cover of the sample at radius tau: scan in fixed order, open a
// ball at every uncovered point. Upper bound on the covering number.
std::size_t covering_number(std::span<const Vec3> samples, double tau);

struct CoverPoint {
  double tau = 0.0;
  std::size_t balls = 0;
};

struct BoxDimensionEstimate {
  double dimension = 0.0;  // regression slope of log N vs log(1/tau)
  double intercept = 0.0;
  std::vector<CoverPoint> curve;
};

// Covering numbers on a geometric tau-grid and the fitted box dimension.
// tau_min must stay above the sampling resolution; the sample spacing is
// tied to tau_min / 3.
BoxDimensionEstimate box_dimension_estimate(const BoundaryMesh& mesh, double tau_min,
                                            double tau_max, int levels);

// Partial integrals of N(tau) tau^{d-1} from tau down to tau_max, one entry
// per grid point (decreasing tau): flattening increments indicate a
// convergent improper integral, i.e. d-summability.
std::vector<double> d_summability_partial_integrals(const BoxDimensionEstimate& est, double d);

}  // namespace hyperrh
