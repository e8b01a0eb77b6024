#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperrh/errors.hpp"

namespace hyperrh {

// Supported generator counts. Coefficient storage is dense (2^m doubles), so
// the cap keeps a single value at or below 2 KiB.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

namespace blade {

// Sign of e_A * e_B under e_i e_j = -e_j e_i (i != j) and e_i^2 = -1.
// A and B are bitmasks; bit i-1 set means generator e_i is present.
int product_sign(unsigned a, unsigned b);

// Multiplication table for one dimension: signs[a * 2^m + b] and the result
// blade a ^ b. Built once per m, immutable afterwards.
const std::vector<std::int8_t>& sign_table(int m);

// Blade name as concatenated generator digits: 0b101 -> "13", 0 -> "".
std::string name(unsigned mask);
unsigned parse_name(const std::string& digits, int m);

}  // namespace blade

// Element of the real Clifford algebra with negative-definite signature.
// coeffs()[b] multiplies the basis blade whose generator set is the bitmask b;
// index 0 is the scalar part.
class Multivector {
 public:
  Multivector() : m_(kMinDim), coeffs_(4, 0.0) {}
  explicit Multivector(int m);
  Multivector(int m, std::vector<double> coeffs);

  static Multivector scalar(int m, double value);
  static Multivector basis_blade(int m, unsigned mask, double value = 1.0);
  // Grade-1 element sum_i x[i] e_{i+1}.
  static Multivector vector(int m, std::span<const double> x);

  int dim() const { return m_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](unsigned mask) const { return coeffs_[mask]; }
  double& operator[](unsigned mask) { return coeffs_[mask]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double scalar_part() const { return coeffs_[0]; }
  // Euclidean norm of the coefficient vector.
  double norm() const;
  double max_abs() const;
  bool is_finite() const;

  // Coefficients of grade-1 blades as an m-vector.
  std::vector<double> grade1() const;
  // Largest |coefficient| outside the given set of grades.
  double off_grade_max(std::span<const int> grades) const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  friend Multivector operator*(const Multivector& a, const Multivector& b);

 private:
  int m_;
  std::vector<double> coeffs_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

// dst += a * b without allocating. All three must share the dimension.
void geometric_product_add(const Multivector& a, const Multivector& b, Multivector& dst);

// Inverse through the left-regular representation: solves L_a x = e_0 where
// L_a is the 2^m x 2^m matrix of left multiplication by a. Throws
// SingularMultivector when cond(L_a) exceeds 1e12.
Multivector multivector_inverse(const Multivector& a);

// Blade-map text form, e.g. {"m":3,"coeffs":{"":1.0,"12":-2.0}}.
std::string to_blade_map(const Multivector& a, double drop_below = 0.0);
Multivector from_blade_map(const std::string& json_text);

}  // namespace hyperrh
