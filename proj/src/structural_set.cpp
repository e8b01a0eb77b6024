#include "hyperrh/structural_set.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hyperrh {

StructuralValidation validate_structural_set(std::span<const std::vector<double>> vectors) {
  StructuralValidation v;
  const std::size_t m = vectors.size();
  for (const auto& vec : vectors)
    if (vec.size() != m) return {false, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < m; ++k) dot += vectors[i][k] * vectors[j][k];
      const double target = (i == j) ? 1.0 : 0.0;
      v.max_deviation = std::max(v.max_deviation, std::abs(dot - target));
    }
  }
  v.ok = v.max_deviation <= kStructuralTol;
  return v;
}

StructuralSet::StructuralSet(std::vector<std::vector<double>> vectors)
    : m_(static_cast<int>(vectors.size())), vectors_(std::move(vectors)) {
  if (m_ < kMinDim || m_ > kMaxDim) throw DimensionMismatch("structural set dimension out of range");
  auto v = validate_structural_set(vectors_);
  if (!v.ok)
    throw std::invalid_argument("not a structural set: max Gram deviation " +
                                std::to_string(v.max_deviation));
  frame_.reserve(m_);
  for (int i = 0; i < m_; ++i) frame_.push_back(Multivector::vector(m_, vectors_[i]));
}

StructuralSet StructuralSet::standard(int m) {
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) v[i][i] = 1.0;
  return StructuralSet(std::move(v));
}

StructuralSet StructuralSet::random_orthogonal(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  std::vector<std::vector<double>> v(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) v[i][j] = q(j, i);
  return StructuralSet(std::move(v));
}

StructuralSet StructuralSet::random_signed_permutation(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) v[i][perm[i]] = (rng() & 1) ? 1.0 : -1.0;
  return StructuralSet(std::move(v));
}

StructuralSet StructuralSet::pairwise_swapped() const {
  if (m_ % 2 != 0) throw OddDimension("pairwise swap needs even dimension");
  std::vector<std::vector<double>> v;
  v.reserve(m_);
  for (int i = 0; i < m_; i += 2) {
    v.push_back(vectors_[i + 1]);
    v.push_back(vectors_[i]);
  }
  return StructuralSet(std::move(v));
}

bool StructuralSet::is_standard() const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (vectors_[i][j] != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

Multivector embed_vector(std::span<const double> x, int m) {
  return Multivector::vector(m, x);
}

Multivector remap_to_frame(std::span<const double> x, const StructuralSet& psi) {
  const int m = psi.dim();
  if (static_cast<int>(x.size()) != m) throw DimensionMismatch("point dimension != m");
  std::vector<double> y(m, 0.0);
  for (int i = 0; i < m; ++i) {
    const auto& c = psi.coords(i);
    for (int j = 0; j < m; ++j) y[j] += x[i] * c[j];
  }
  return Multivector::vector(m, y);
}

}  // namespace hyperrh
