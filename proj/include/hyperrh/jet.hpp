#pragma once
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "hyperrh/mesh.hpp"
#include "hyperrh/poly_field.hpp"
#include "hyperrh/structural_set.hpp"

namespace hyperrh {

// One boundary sample of a first-order jet: value and the m first partials.
struct JetSample {
  Vec3 point;
  Multivector g0;
  std::array<Multivector, 3> gj;
};

// Smooth field with closed-form gradient, used to restrict jets to a surface
// and as the analytic extension backend.
struct AnalyticField {
  std::function<Multivector(const Vec3&)> value;
  std::function<std::array<Multivector, 3>(const Vec3&)> gradient;
};

struct CompatibilityReport {
  double fitted_constant = 0.0;  // max residual / |x-y|^{1+alpha-|j|}
  double order0_constant = 0.0;
  double order1_constant = 0.0;
  std::size_t worst_a = 0, worst_b = 0;
};

// First-order Lipschitz boundary datum: samples of {g, grad g} on Gamma with
// Hoelder exponent alpha. Immutable after construction; nearest-sample
// queries are deterministic (lowest index wins ties).
class LipschitzJet {
 public:
  LipschitzJet(double alpha, std::vector<JetSample> samples);

  double alpha() const { return alpha_; }
  const std::vector<JetSample>& samples() const { return samples_; }
  bool zero() const;

  std::size_t nearest(const Vec3& x) const;

  // Degree-1 Taylor polynomial of the jet at sample k, evaluated at x.
  Multivector taylor(std::size_t k, const Vec3& x) const;

  // Trace values at a boundary point (nearest-sample Taylor for the value,
  // sample gradient for the derivative).
  Multivector value_at(const Vec3& y) const;
  Multivector dirac_trace(const StructuralSet& psi, const Vec3& y) const;

  // Fitted compatibility constant over sample pairs (subsampled above
  // max_points, deterministically).
  CompatibilityReport compatibility_residual(std::size_t max_points = 1500) const;

  void save_csv(const std::string& path) const;
  static LipschitzJet load_csv(const std::string& path, double alpha);

  // Scale/add, used by the linearity checks.
  LipschitzJet scaled(double c) const;
  LipschitzJet plus(const LipschitzJet& other) const;

 private:
  double alpha_;
  std::vector<JetSample> samples_;
  // hash grid over sample points
  double cell_ = 0.0;
  Vec3 origin_{};
  std::vector<std::vector<int>> grid_;
  int nx_ = 0, ny_ = 0, nz_ = 0;
  int cell_index(const Vec3& p) const;
};

// Restricts a smooth field to the mesh: samples at all vertices and element
// centroids, so surface quadrature nodes carry exact jet data.
LipschitzJet jet_from_function(const AnalyticField& f, const BoundaryMesh& mesh, double alpha);

// Constant and polynomial conveniences.
AnalyticField analytic_constant(const Multivector& c);
AnalyticField analytic_from_poly(const PolyField& u);

}  // namespace hyperrh
