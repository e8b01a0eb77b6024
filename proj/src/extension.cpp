#include "hyperrh/extension.hpp"

#include <algorithm>
#include <cmath>

namespace hyperrh {

Multivector MVJet2::dirac(const StructuralSet& psi) const {
  Multivector r(v.dim());
  for (int i = 0; i < 3; ++i) geometric_product_add(psi.vector(i), g[i], r);
  return r;
}

Multivector MVJet2::second_order(const StructuralSet& phi, const StructuralSet& psi) const {
  // Hessian slot for the (k, i) pair.
  static constexpr int slot[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
  Multivector r(v.dim());
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      geometric_product_add(phi.vector(k) * psi.vector(i), h[slot[k][i]], r);
  return r;
}

PolyExtension::PolyExtension(const PolyField& u)
    : u_(u),
      du_{u.derivative(0), u.derivative(1), u.derivative(2)},
      d2u_{u.derivative(0).derivative(0), u.derivative(1).derivative(1),
           u.derivative(2).derivative(2), u.derivative(0).derivative(1),
           u.derivative(0).derivative(2), u.derivative(1).derivative(2)} {}

MVJet2 PolyExtension::eval(const Vec3& x) const {
  auto a = x.to_array();
  MVJet2 r(u_.dim());
  r.v = u_.eval(a);
  for (int i = 0; i < 3; ++i) r.g[i] = du_[i].eval(a);
  for (int i = 0; i < 6; ++i) r.h[i] = d2u_[i].eval(a);
  return r;
}

namespace {

// Scalar C^2 germ with the same Hessian packing as MVJet2.
struct Jet2 {
  double v = 0.0;
  std::array<double, 3> g{};
  std::array<double, 6> h{};
};

// Quintic step: 0 at 0 and 1 at 1 with two flat derivatives at both ends.
void smoothstep5(double u, double& s, double& s1, double& s2) {
  s = ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
  s1 = ((30.0 * u - 60.0) * u + 30.0) * u * u;
  s2 = ((120.0 * u - 180.0) * u + 60.0) * u;
}

// Cubes are inflated by 3/2 and the plateau ends exactly at the original
// cube corners (|t| = 2/3): the bump is identically 1 on its own cube, so
// the partition denominator never drops below 1, while the transition shell
// stays wide enough to keep the derivative constants moderate.
constexpr double kInflate = 1.5;
constexpr double kPlateau = 2.0 / 3.0;

void profile1d(double t, double& b, double& b1, double& b2) {
  double a = std::abs(t);
  if (a <= kPlateau) {
    b = 1.0;
    b1 = b2 = 0.0;
    return;
  }
  if (a >= 1.0) {
    b = b1 = b2 = 0.0;
    return;
  }
  const double w = 1.0 - kPlateau;
  double s, s1, s2;
  smoothstep5((a - kPlateau) / w, s, s1, s2);
  b = 1.0 - s;
  b1 = -(s1 / w) * (t < 0 ? -1.0 : 1.0);
  b2 = -s2 / (w * w);
}

// Tensor bump over the inflated cube, as a C^2 germ in x.
Jet2 bump(const Vec3& x, const Vec3& center, double half_width) {
  double b[3], b1[3], b2[3];
  for (int i = 0; i < 3; ++i) {
    double t = (x[i] - center[i]) / half_width;
    profile1d(t, b[i], b1[i], b2[i]);
    b1[i] /= half_width;
    b2[i] /= half_width * half_width;
  }
  Jet2 r;
  r.v = b[0] * b[1] * b[2];
  r.g = {b1[0] * b[1] * b[2], b[0] * b1[1] * b[2], b[0] * b[1] * b1[2]};
  r.h[0] = b2[0] * b[1] * b[2];
  r.h[1] = b[0] * b2[1] * b[2];
  r.h[2] = b[0] * b[1] * b2[2];
  r.h[3] = b1[0] * b1[1] * b[2];
  r.h[4] = b1[0] * b[1] * b1[2];
  r.h[5] = b[0] * b1[1] * b1[2];
  return r;
}

// mvjet += scalar_jet * (linear multivector polynomial P with value p0 at x
// and constant gradient pg).
void accumulate_term(MVJet2& acc, const Jet2& s, const Multivector& p0,
                     const std::array<Multivector, 3>& pg) {
  static constexpr int pair_i[6] = {0, 1, 2, 0, 0, 1};
  static constexpr int pair_j[6] = {0, 1, 2, 1, 2, 2};
  acc.v += p0 * s.v;
  for (int i = 0; i < 3; ++i) acc.g[i] += p0 * s.g[i] + pg[i] * s.v;
  for (int k = 0; k < 6; ++k) {
    int i = pair_i[k], j = pair_j[k];
    acc.h[k] += p0 * s.h[k] + pg[i] * s.g[j] + pg[j] * s.g[i];
  }
}

// Component-wise quotient rule: out = N / S for scalar S.
MVJet2 divide(const MVJet2& num, const Jet2& s) {
  static constexpr int pair_i[6] = {0, 1, 2, 0, 0, 1};
  static constexpr int pair_j[6] = {0, 1, 2, 1, 2, 2};
  MVJet2 r(num.v.dim());
  const double inv = 1.0 / s.v;
  r.v = num.v * inv;
  for (int i = 0; i < 3; ++i) r.g[i] = (num.g[i] - r.v * s.g[i]) * inv;
  for (int k = 0; k < 6; ++k) {
    int i = pair_i[k], j = pair_j[k];
    r.h[k] = (num.h[k] - r.g[i] * s.g[j] - r.g[j] * s.g[i] - r.v * s.h[k]) * inv;
  }
  return r;
}

}  // namespace

SteinExtension::SteinExtension(std::shared_ptr<const LipschitzJet> jet,
                               const BoundaryMesh& mesh, int max_depth)
    : jet_(std::move(jet)) {
  WhitneyOptions opt{max_depth, true, 1.6};
  auto w = WhitneyCubeSet::decompose(mesh, opt);
  Box3 bb = mesh.bounding_box();
  Vec3 ext = bb.hi - bb.lo;
  root_side_ = w.root_side();
  root_lo_ = bb.center() - Vec3{root_side_, root_side_, root_side_} * 0.5;

  cubes_.reserve(w.cubes().size() + w.collar().size());
  for (const auto& q : w.cubes())
    cubes_.push_back({q.center, q.side, q.depth, jet_->nearest(q.center)});
  // Collar leaves tile what the proper cubes leave open near Gamma.
  for (const auto& c : w.collar())
    cubes_.push_back({c.center, c.side, c.depth, jet_->nearest(c.center)});

  min_depth_ = max_depth;
  max_depth_ = 0;
  for (const auto& q : cubes_) {
    min_depth_ = std::min(min_depth_, q.depth);
    max_depth_ = std::max(max_depth_, q.depth);
  }
  for (int i = 0; i < static_cast<int>(cubes_.size()); ++i) {
    const auto& q = cubes_[i];
    double s = root_side_ / (1 << q.depth);
    auto cx = static_cast<std::int64_t>(std::floor((q.center.x - root_lo_.x) / s));
    auto cy = static_cast<std::int64_t>(std::floor((q.center.y - root_lo_.y) / s));
    auto cz = static_cast<std::int64_t>(std::floor((q.center.z - root_lo_.z) / s));
    std::uint64_t key = (static_cast<std::uint64_t>(q.depth) << 58) ^
                        (static_cast<std::uint64_t>(cx & 0xfffff) << 38) ^
                        (static_cast<std::uint64_t>(cy & 0xfffff) << 18) ^
                        static_cast<std::uint64_t>(cz & 0x3ffff);
    grid_[key].push_back(i);
  }

  cutoff_center_ = bb.center();
  double circum = 0.5 * ext.norm();
  cutoff_r0_ = 2.0 * circum;
  cutoff_r1_ = 2.5 * circum;
}

void SteinExtension::collect(const Vec3& x, std::vector<int>& out) const {
  out.clear();
  for (int depth = min_depth_; depth <= max_depth_; ++depth) {
    double s = root_side_ / (1 << depth);
    auto bx = static_cast<std::int64_t>(std::floor((x.x - root_lo_.x) / s));
    auto by = static_cast<std::int64_t>(std::floor((x.y - root_lo_.y) / s));
    auto bz = static_cast<std::int64_t>(std::floor((x.z - root_lo_.z) / s));
    const double reach = 0.5 * kInflate * s;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          std::uint64_t key = (static_cast<std::uint64_t>(depth) << 58) ^
                              (static_cast<std::uint64_t>((bx + dx) & 0xfffff) << 38) ^
                              (static_cast<std::uint64_t>((by + dy) & 0xfffff) << 18) ^
                              static_cast<std::uint64_t>((bz + dz) & 0x3ffff);
          auto it = grid_.find(key);
          if (it == grid_.end()) continue;
          for (int i : it->second) {
            const auto& q = cubes_[i];
            if (std::abs(x.x - q.center.x) < reach && std::abs(x.y - q.center.y) < reach &&
                std::abs(x.z - q.center.z) < reach)
              out.push_back(i);
          }
        }
  }
  std::sort(out.begin(), out.end());
}

MVJet2 SteinExtension::eval(const Vec3& x) const {
  const int m = jet_->samples().front().g0.dim();
  thread_local std::vector<int> active;
  collect(x, active);
  if (active.empty()) return MVJet2(m);

  Jet2 S;
  MVJet2 N(m);
  for (int i : active) {
    const auto& q = cubes_[i];
    Jet2 b = bump(x, q.center, 0.5 * kInflate * q.side);
    S.v += b.v;
    for (int k = 0; k < 3; ++k) S.g[k] += b.g[k];
    for (int k = 0; k < 6; ++k) S.h[k] += b.h[k];
    const JetSample& smp = jet_->samples()[q.sample];
    accumulate_term(N, b, jet_->taylor(q.sample, x), smp.gj);
  }
  if (S.v <= 0.0) return MVJet2(m);
  MVJet2 e = divide(N, S);

  // Radial cutoff: identity inside cutoff_r0_, vanishes beyond cutoff_r1_.
  Vec3 rel = x - cutoff_center_;
  double r = rel.norm();
  if (r <= cutoff_r0_) return e;
  if (r >= cutoff_r1_) return MVJet2(m);
  double w = cutoff_r1_ - cutoff_r0_;
  double s, s1, s2;
  smoothstep5((r - cutoff_r0_) / w, s, s1, s2);
  Jet2 chi;
  chi.v = 1.0 - s;
  double f1 = -s1 / w, f2 = -s2 / (w * w);
  Vec3 u = rel * (1.0 / r);
  static constexpr int pair_i[6] = {0, 1, 2, 0, 0, 1};
  static constexpr int pair_j[6] = {0, 1, 2, 1, 2, 2};
  for (int i = 0; i < 3; ++i) chi.g[i] = f1 * u[i];
  for (int k = 0; k < 6; ++k) {
    int i = pair_i[k], j = pair_j[k];
    double uij = u[i] * u[j];
    chi.h[k] = f2 * uij + f1 * (((i == j) ? 1.0 : 0.0) - uij) / r;
  }
  MVJet2 out(m);
  accumulate_term(out, chi, e.v, e.g);  // linear part of e times chi
  // accumulate_term assumes constant gradient; add the Hessian of e times chi.
  for (int k = 0; k < 6; ++k) out.h[k] += e.h[k] * chi.v;
  return out;
}

double SteinExtension::partition_sum(const Vec3& x) const {
  thread_local std::vector<int> active;
  collect(x, active);
  if (active.empty()) return 0.0;
  double S = 0.0;
  for (int i : active) {
    const auto& q = cubes_[i];
    S += bump(x, q.center, 0.5 * kInflate * q.side).v;
  }
  if (S <= 0.0) return 0.0;
  double total = 0.0;
  for (int i : active) {
    const auto& q = cubes_[i];
    total += bump(x, q.center, 0.5 * kInflate * q.side).v / S;
  }
  return total;
}

}  // namespace hyperrh
