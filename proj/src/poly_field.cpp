#include "hyperrh/poly_field.hpp"

#include <cmath>
#include <random>

namespace hyperrh {

void PolyField::add_term(const MultiIndex& j, const Multivector& c) {
  if (j.m != m_ || c.dim() != m_) throw DimensionMismatch("term dimension mismatch");
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) it->second += c;
  if (it->second.max_abs() == 0.0) terms_.erase(it);
}

Multivector PolyField::eval(std::span<const double> x) const {
  Multivector r(m_);
  for (const auto& [j, c] : terms_) {
    double mono = 1.0;
    for (int i = 0; i < m_; ++i)
      for (int p = 0; p < j.j[i]; ++p) mono *= x[i];
    r += c * mono;
  }
  return r;
}

PolyField PolyField::derivative(int axis) const {
  PolyField r(m_);
  for (const auto& [j, c] : terms_) {
    if (j.j[axis] == 0) continue;
    MultiIndex d = j;
    d.j[axis] -= 1;
    r.add_term(d, c * static_cast<double>(j.j[axis]));
  }
  return r;
}

PolyField PolyField::laplacian() const {
  PolyField r(m_);
  for (int i = 0; i < m_; ++i) r += derivative(i).derivative(i);
  return r;
}

PolyField& PolyField::operator+=(const PolyField& rhs) {
  if (rhs.m_ != m_) throw DimensionMismatch("field dimension mismatch");
  for (const auto& [j, c] : rhs.terms_) add_term(j, c);
  return *this;
}

PolyField& PolyField::operator*=(double s) {
  for (auto& [j, c] : terms_) c *= s;
  return *this;
}

PolyField PolyField::right_multiplied(const Multivector& lambda) const {
  PolyField r(m_);
  for (const auto& [j, c] : terms_) r.add_term(j, c * lambda);
  return r;
}

double PolyField::max_coeff_abs() const {
  double worst = 0.0;
  for (const auto& [j, c] : terms_) worst = std::max(worst, c.max_abs());
  return worst;
}

PolyField PolyField::constant(int m, const Multivector& c) {
  PolyField r(m);
  r.add_term(MultiIndex::zero(m), c);
  return r;
}

PolyField PolyField::coordinate(int m, int axis) {
  PolyField r(m);
  r.add_term(MultiIndex::unit(m, axis), Multivector::scalar(m, 1.0));
  return r;
}

PolyField PolyField::one_minus_norm_sq(int m) {
  PolyField r(m);
  r.add_term(MultiIndex::zero(m), Multivector::scalar(m, 1.0));
  for (int i = 0; i < m; ++i) {
    MultiIndex j = MultiIndex::zero(m);
    j.j[i] = 2;
    r.add_term(j, Multivector::scalar(m, -1.0));
  }
  return r;
}

namespace {
void enumerate_indices(int m, int degree, int axis, MultiIndex& cur,
                       std::vector<MultiIndex>& out) {
  if (axis == m) {
    out.push_back(cur);
    return;
  }
  for (int p = 0; p + cur.order() <= degree; ++p) {
    cur.j[axis] = static_cast<std::uint8_t>(p);
    enumerate_indices(m, degree, axis + 1, cur, out);
  }
  cur.j[axis] = 0;
}
}  // namespace

PolyField PolyField::random(int m, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<MultiIndex> idx;
  MultiIndex cur = MultiIndex::zero(m);
  enumerate_indices(m, degree, 0, cur, idx);
  PolyField r(m);
  for (const auto& j : idx) {
    Multivector c(m);
    for (unsigned b = 0; b < c.size(); ++b) c[b] = uni(rng);
    r.add_term(j, c);
  }
  return r;
}

}  // namespace hyperrh
