#pragma once
#include <memory>
#include <unordered_map>

#include "hyperrh/jet.hpp"
#include "hyperrh/whitney.hpp"

namespace hyperrh {

// Multivector-valued C^2 germ: value, gradient, symmetric Hessian.
// Hessian order: xx, yy, zz, xy, xz, yz.
struct MVJet2 {
  Multivector v;
  std::array<Multivector, 3> g;
  std::array<Multivector, 6> h;

  explicit MVJet2(int m = 3)
      : v(m), g{Multivector(m), Multivector(m), Multivector(m)},
        h{Multivector(m), Multivector(m), Multivector(m),
          Multivector(m), Multivector(m), Multivector(m)} {}

  // psi-Dirac from the gradient: sum_i psi^i g_i.
  Multivector dirac(const StructuralSet& psi) const;
  // Second-order operator from the Hessian: sum_{k,i} phi^k psi^i d_k d_i.
  Multivector second_order(const StructuralSet& phi, const StructuralSet& psi) const;
};

// Field defined off Gamma with two derivatives available everywhere the
// solver integrates.
class ExtensionBackend {
 public:
  virtual ~ExtensionBackend() = default;
  virtual MVJet2 eval(const Vec3& x) const = 0;
};

// Analytic backend: the extension of a jet restricted from a global
// polynomial is the polynomial itself. Exact derivatives; ground truth for
// the constructive backend.
class PolyExtension final : public ExtensionBackend {
 public:
  explicit PolyExtension(const PolyField& u);
  MVJet2 eval(const Vec3& x) const override;

 private:
  PolyField u_;
  std::array<PolyField, 3> du_;
  std::array<PolyField, 6> d2u_;
};

// Constructive Whitney extension: degree-1 Taylor polynomials of the jet at
// per-cube nearest samples, blended by a C^2 partition of unity over the
// two-sided Whitney cubes (inflated 3/2, bump plateau covering the cube), all
// multiplied by a radial cutoff equal to 1 on a neighborhood of the domain.
class SteinExtension final : public ExtensionBackend {
 public:
  SteinExtension(std::shared_ptr<const LipschitzJet> jet, const BoundaryMesh& mesh,
                 int max_depth = 5);

  MVJet2 eval(const Vec3& x) const override;

  // Sum of the normalized bump values at x; 1 wherever the cover is active.
  double partition_sum(const Vec3& x) const;
  // Radius beyond which the extension vanishes identically.
  double support_radius() const { return cutoff_r1_; }
  std::size_t cube_count() const { return cubes_.size(); }

 private:
  struct PuCube {
    Vec3 center;
    double side;
    int depth;
    std::size_t sample;  // nearest jet sample
  };

  std::shared_ptr<const LipschitzJet> jet_;
  std::vector<PuCube> cubes_;
  Vec3 root_lo_{};
  double root_side_ = 0.0;
  Vec3 cutoff_center_{};
  double cutoff_r0_ = 0.0, cutoff_r1_ = 0.0;
  int min_depth_ = 0, max_depth_ = 0;
  // (depth, lattice cell) -> cube indices
  std::unordered_map<std::uint64_t, std::vector<int>> grid_;

  void collect(const Vec3& x, std::vector<int>& out) const;
};

}  // namespace hyperrh
