#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>

#include "hyperrh/multivector.hpp"

namespace hyperrh {

// Exponent tuple of a monomial x_1^{j_1} ... x_m^{j_m}.
struct MultiIndex {
  std::array<std::uint8_t, kMaxDim> j{};
  int m = 0;

  int order() const {
    int s = 0;
    for (int i = 0; i < m; ++i) s += j[i];
    return s;
  }
  auto operator<=>(const MultiIndex&) const = default;

  static MultiIndex zero(int m) {
    MultiIndex r;
    r.m = m;
    return r;
  }
  static MultiIndex unit(int m, int axis) {
    MultiIndex r = zero(m);
    r.j[axis] = 1;
    return r;
  }
};

// Polynomial field u(x) = sum_j c_j x^j with multivector coefficients.
// Differentiation is term-wise and exact; no truncation happens anywhere,
// which makes these fields the ground truth for operator identities.
class PolyField {
 public:
  explicit PolyField(int m) : m_(m) {}

  int dim() const { return m_; }
  bool empty() const { return terms_.empty(); }
  const std::map<MultiIndex, Multivector>& terms() const { return terms_; }

  // Adds c * x^j, merging with an existing term.
  void add_term(const MultiIndex& j, const Multivector& c);

  Multivector eval(std::span<const double> x) const;
  PolyField derivative(int axis) const;
  PolyField laplacian() const;

  PolyField& operator+=(const PolyField& rhs);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  PolyField& operator*=(double s);

  // Right module action: every coefficient becomes c * lambda.
  PolyField right_multiplied(const Multivector& lambda) const;

  // Largest |coefficient| across all terms; zero polynomial gives 0.
  double max_coeff_abs() const;

  static PolyField constant(int m, const Multivector& c);
  // x_k as a scalar-coefficient field.
  static PolyField coordinate(int m, int axis);
  // 1 - |x|^2.
  static PolyField one_minus_norm_sq(int m);
  // Random field with all multi-indices of order <= degree and coefficients
  // uniform in [-1, 1] over all blades.
  static PolyField random(int m, int degree, std::uint64_t seed);

 private:
  int m_;
  std::map<MultiIndex, Multivector> terms_;
};

}  // namespace hyperrh
