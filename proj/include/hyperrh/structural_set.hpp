#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "hyperrh/multivector.hpp"

namespace hyperrh {

// Tolerance on <psi^i, psi^j> - delta_ij accepted at construction.
inline constexpr double kStructuralTol = 1e-12;

struct StructuralValidation {
  bool ok = false;
  double max_deviation = 0.0;
};

// Checks the orthonormality condition psi^i psi^j + psi^j psi^i = -2 delta_ij,
// reported as the max deviation of the Gram matrix from the identity.
StructuralValidation validate_structural_set(std::span<const std::vector<double>> vectors);

// Ordered orthonormal frame of R^m used as Dirac-operator coefficients.
// Downstream code may assume the orthonormality condition holds: the
// constructor rejects frames deviating by more than kStructuralTol.
class StructuralSet {
 public:
  explicit StructuralSet(std::vector<std::vector<double>> vectors);

  static StructuralSet standard(int m);
  // Rows of a random orthogonal matrix (QR of a Gaussian sample).
  static StructuralSet random_orthogonal(int m, std::uint64_t seed);
  // Signed permutation of the standard frame; exactly orthonormal in
  // floating point.
  static StructuralSet random_signed_permutation(int m, std::uint64_t seed);
  // Swaps frame vectors pairwise: {v2, v1, v4, v3, ...}. Requires even m.
  StructuralSet pairwise_swapped() const;

  int dim() const { return m_; }
  const std::vector<double>& coords(int i) const { return vectors_[i]; }
  // psi^i as a grade-1 multivector.
  const Multivector& vector(int i) const { return frame_[i]; }
  bool is_standard() const;

 private:
  int m_;
  std::vector<std::vector<double>> vectors_;
  std::vector<Multivector> frame_;
};

// Embedding of a point: x -> sum_i x_i e_i.
Multivector embed_vector(std::span<const double> x, int m);

// Frame remap x -> x_psi = sum_i x_i psi^i.
Multivector remap_to_frame(std::span<const double> x, const StructuralSet& psi);

}  // namespace hyperrh
