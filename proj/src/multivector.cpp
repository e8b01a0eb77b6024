#include "hyperrh/multivector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>

#include <nlohmann/json.hpp>

namespace hyperrh {

namespace blade {

int product_sign(unsigned a, unsigned b) {
  // Count transpositions needed to merge the generator lists.
  int swaps = 0;
  unsigned t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  // Each repeated generator contributes e_i^2 = -1.
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

const std::vector<std::int8_t>& sign_table(int m) {
  static std::array<std::vector<std::int8_t>, kMaxDim + 1> tables;
  static std::array<std::once_flag, kMaxDim + 1> flags;
  if (m < kMinDim || m > kMaxDim) throw DimensionMismatch("dimension out of range");
  std::call_once(flags[m], [m] {
    const unsigned n = 1u << m;
    auto& t = tables[m];
    t.resize(std::size_t(n) * n);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        t[std::size_t(a) * n + b] = static_cast<std::int8_t>(product_sign(a, b));
  });
  return tables[m];
}

std::string name(unsigned mask) {
  std::string s;
  for (int i = 0; i < kMaxDim; ++i)
    if (mask & (1u << i)) s += static_cast<char>('1' + i);
  return s;
}

unsigned parse_name(const std::string& digits, int m) {
  unsigned mask = 0;
  for (char c : digits) {
    if (c < '1' || c > '0' + m) throw ConfigError("bad blade name: " + digits);
    unsigned bit = 1u << (c - '1');
    if (mask & bit) throw ConfigError("repeated generator in blade name: " + digits);
    mask |= bit;
  }
  return mask;
}

}  // namespace blade

Multivector::Multivector(int m) : m_(m) {
  if (m < kMinDim || m > kMaxDim) throw DimensionMismatch("dimension out of range");
  coeffs_.assign(std::size_t(1) << m, 0.0);
}

Multivector::Multivector(int m, std::vector<double> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  if (m < kMinDim || m > kMaxDim) throw DimensionMismatch("dimension out of range");
  if (coeffs_.size() != (std::size_t(1) << m))
    throw DimensionMismatch("coefficient count does not match 2^m");
}

Multivector Multivector::scalar(int m, double value) {
  Multivector r(m);
  r.coeffs_[0] = value;
  return r;
}

Multivector Multivector::basis_blade(int m, unsigned mask, double value) {
  Multivector r(m);
  if (mask >= r.coeffs_.size()) throw DimensionMismatch("blade mask out of range");
  r.coeffs_[mask] = value;
  return r;
}

Multivector Multivector::vector(int m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m) throw DimensionMismatch("vector length != m");
  Multivector r(m);
  for (int i = 0; i < m; ++i) r.coeffs_[1u << i] = x[i];
  return r;
}

double Multivector::norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

double Multivector::max_abs() const {
  double s = 0.0;
  for (double c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

bool Multivector::is_finite() const {
  for (double c : coeffs_)
    if (!std::isfinite(c)) return false;
  return true;
}

std::vector<double> Multivector::grade1() const {
  std::vector<double> x(m_);
  for (int i = 0; i < m_; ++i) x[i] = coeffs_[1u << i];
  return x;
}

double Multivector::off_grade_max(std::span<const int> grades) const {
  double worst = 0.0;
  for (unsigned b = 0; b < coeffs_.size(); ++b) {
    int g = std::popcount(b);
    bool listed = std::find(grades.begin(), grades.end(), g) != grades.end();
    if (!listed) worst = std::max(worst, std::abs(coeffs_[b]));
  }
  return worst;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (m_ != rhs.m_) throw DimensionMismatch("dimension mismatch in +");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (m_ != rhs.m_) throw DimensionMismatch("dimension mismatch in -");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

void geometric_product_add(const Multivector& a, const Multivector& b, Multivector& dst) {
  if (a.dim() != b.dim() || a.dim() != dst.dim())
    throw DimensionMismatch("dimension mismatch in product");
  const int m = a.dim();
  const unsigned n = 1u << m;
  const auto& signs = blade::sign_table(m);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (unsigned i = 0; i < n; ++i) {
    const double ai = ca[i];
    if (ai == 0.0) continue;
    const std::int8_t* row = &signs[std::size_t(i) * n];
    for (unsigned j = 0; j < n; ++j) dst[i ^ j] += row[j] * ai * cb[j];
  }
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  Multivector r(a.dim());
  geometric_product_add(a, b, r);
  return r;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector multivector_inverse(const Multivector& a) {
  const int m = a.dim();
  const unsigned n = 1u << m;
  const auto& signs = blade::sign_table(m);
  // Column j holds the coefficients of a * e_j.
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (unsigned i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const std::int8_t* row = &signs[std::size_t(i) * n];
    for (unsigned j = 0; j < n; ++j) L(i ^ j, j) += row[j] * ai;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularMultivector("left-multiplication matrix numerically singular");
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n);
  e0(0) = 1.0;
  Eigen::VectorXd x = svd.solve(e0);
  std::vector<double> c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = x(i);
  return Multivector(m, std::move(c));
}

std::string to_blade_map(const Multivector& a, double drop_below) {
  nlohmann::ordered_json j;
  j["m"] = a.dim();
  nlohmann::ordered_json cm = nlohmann::ordered_json::object();
  for (unsigned b = 0; b < a.size(); ++b)
    if (std::abs(a[b]) > drop_below || (b == 0 && a.norm() == 0.0))
      cm[blade::name(b)] = a[b];
  j["coeffs"] = cm;
  return j.dump();
}

Multivector from_blade_map(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  const int m = j.at("m").get<int>();
  Multivector r(m);
  for (auto& [key, val] : j.at("coeffs").items())
    r[blade::parse_name(key, m)] = val.get<double>();
  return r;
}

}  // namespace hyperrh
