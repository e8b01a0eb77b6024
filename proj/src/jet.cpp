#include "hyperrh/jet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace hyperrh {

LipschitzJet::LipschitzJet(double alpha, std::vector<JetSample> samples)
    : alpha_(alpha), samples_(std::move(samples)) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (samples_.size() < 2) throw std::invalid_argument("jet needs at least 2 samples");

  Box3 bb = Box3::empty();
  for (const auto& s : samples_) bb.expand(s.point);
  Vec3 ext = bb.hi - bb.lo;
  double maxext = std::max({ext.x, ext.y, ext.z, 1e-9});
  // Aim for a handful of samples per cell.
  cell_ = maxext / std::max(2.0, std::cbrt(double(samples_.size())));
  origin_ = bb.lo - Vec3{cell_, cell_, cell_} * 0.5;
  nx_ = static_cast<int>(std::floor((bb.hi.x - origin_.x) / cell_)) + 2;
  ny_ = static_cast<int>(std::floor((bb.hi.y - origin_.y) / cell_)) + 2;
  nz_ = static_cast<int>(std::floor((bb.hi.z - origin_.z) / cell_)) + 2;
  grid_.assign(static_cast<std::size_t>(nx_) * ny_ * nz_, {});
  for (int i = 0; i < static_cast<int>(samples_.size()); ++i)
    grid_[cell_index(samples_[i].point)].push_back(i);
}

int LipschitzJet::cell_index(const Vec3& p) const {
  auto clampi = [](int v, int n) { return std::min(std::max(v, 0), n - 1); };
  int ix = clampi(static_cast<int>(std::floor((p.x - origin_.x) / cell_)), nx_);
  int iy = clampi(static_cast<int>(std::floor((p.y - origin_.y) / cell_)), ny_);
  int iz = clampi(static_cast<int>(std::floor((p.z - origin_.z) / cell_)), nz_);
  return (ix * ny_ + iy) * nz_ + iz;
}

bool LipschitzJet::zero() const {
  for (const auto& s : samples_) {
    if (s.g0.max_abs() != 0.0) return false;
    for (const auto& g : s.gj)
      if (g.max_abs() != 0.0) return false;
  }
  return true;
}

std::size_t LipschitzJet::nearest(const Vec3& x) const {
  auto clampi = [](int v, int n) { return std::min(std::max(v, 0), n - 1); };
  int ix = clampi(static_cast<int>(std::floor((x.x - origin_.x) / cell_)), nx_);
  int iy = clampi(static_cast<int>(std::floor((x.y - origin_.y) / cell_)), ny_);
  int iz = clampi(static_cast<int>(std::floor((x.z - origin_.z) / cell_)), nz_);

  double best = std::numeric_limits<double>::infinity();
  int best_i = -1;
  // Grow rings until the best hit beats the next ring's lower bound.
  for (int ring = 0; ring < std::max({nx_, ny_, nz_}); ++ring) {
    if (best_i >= 0 && std::sqrt(best) <= (ring - 1) * cell_) break;
    for (int dx = -ring; dx <= ring; ++dx)
      for (int dy = -ring; dy <= ring; ++dy)
        for (int dz = -ring; dz <= ring; ++dz) {
          if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) != ring) continue;
          int cx = ix + dx, cy = iy + dy, cz = iz + dz;
          if (cx < 0 || cy < 0 || cz < 0 || cx >= nx_ || cy >= ny_ || cz >= nz_) continue;
          for (int i : grid_[(static_cast<std::size_t>(cx) * ny_ + cy) * nz_ + cz]) {
            double d = (samples_[i].point - x).norm_sq();
            if (d < best || (d == best && i < best_i)) {
              best = d;
              best_i = i;
            }
          }
        }
  }
  return static_cast<std::size_t>(best_i);
}

Multivector LipschitzJet::taylor(std::size_t k, const Vec3& x) const {
  const JetSample& s = samples_[k];
  Multivector r = s.g0;
  Vec3 d = x - s.point;
  for (int i = 0; i < 3; ++i) r += s.gj[i] * d[i];
  return r;
}

Multivector LipschitzJet::value_at(const Vec3& y) const { return taylor(nearest(y), y); }

Multivector LipschitzJet::dirac_trace(const StructuralSet& psi, const Vec3& y) const {
  const JetSample& s = samples_[nearest(y)];
  Multivector r(s.g0.dim());
  for (int i = 0; i < 3; ++i) geometric_product_add(psi.vector(i), s.gj[i], r);
  return r;
}

CompatibilityReport LipschitzJet::compatibility_residual(std::size_t max_points) const {
  std::size_t stride = 1 + samples_.size() / max_points;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < samples_.size(); i += stride) idx.push_back(i);

  CompatibilityReport rep;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const JetSample &sa = samples_[idx[a]], &sb = samples_[idx[b]];
      double dist = (sa.point - sb.point).norm();
      if (dist < 1e-12) continue;  // duplicate points skipped
      // |j| = 0: value against the Taylor polynomial of the other sample.
      double r0 = (sa.g0 - taylor(idx[b], sa.point)).norm() / std::pow(dist, 1.0 + alpha_);
      // |j| = 1: first derivatives are alpha-Hoelder.
      double r1 = 0.0;
      for (int i = 0; i < 3; ++i)
        r1 = std::max(r1, (sa.gj[i] - sb.gj[i]).norm() / std::pow(dist, alpha_));
      if (std::max(r0, r1) > rep.fitted_constant) {
        rep.fitted_constant = std::max(r0, r1);
        rep.worst_a = idx[a];
        rep.worst_b = idx[b];
      }
      rep.order0_constant = std::max(rep.order0_constant, r0);
      rep.order1_constant = std::max(rep.order1_constant, r1);
    }
  }
  return rep;
}

void LipschitzJet::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  const int m = samples_.front().g0.dim();
  const unsigned n = 1u << m;
  out << "x1,x2,x3";
  for (int comp = 0; comp <= 3; ++comp)
    for (unsigned bl = 0; bl < n; ++bl) out << ",g" << comp << '_' << blade::name(bl);
  out << '\n';
  out.precision(17);
  for (const auto& s : samples_) {
    out << s.point.x << ',' << s.point.y << ',' << s.point.z;
    for (unsigned bl = 0; bl < n; ++bl) out << ',' << s.g0[bl];
    for (int i = 0; i < 3; ++i)
      for (unsigned bl = 0; bl < n; ++bl) out << ',' << s.gj[i][bl];
    out << '\n';
  }
}

LipschitzJet LipschitzJet::load_csv(const std::string& path, double alpha) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  std::getline(in, header);
  std::size_t cols = 1 + std::count(header.begin(), header.end(), ',');
  if (cols < 7 || (cols - 3) % 4 != 0) throw std::runtime_error(path + ": malformed jet CSV");
  unsigned n = static_cast<unsigned>((cols - 3) / 4);
  int m = 0;
  while ((1u << m) < n) ++m;
  if ((1u << m) != n) throw std::runtime_error(path + ": blade count is not a power of two");

  std::vector<JetSample> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    auto next = [&]() {
      if (!std::getline(ss, tok, ',')) throw std::runtime_error(path + ": short row");
      return std::stod(tok);
    };
    double px = next(), py = next(), pz = next();
    JetSample s{{px, py, pz}, Multivector(m), {Multivector(m), Multivector(m), Multivector(m)}};
    for (unsigned bl = 0; bl < n; ++bl) s.g0[bl] = next();
    for (int i = 0; i < 3; ++i)
      for (unsigned bl = 0; bl < n; ++bl) s.gj[i][bl] = next();
    samples.push_back(std::move(s));
  }
  return LipschitzJet(alpha, std::move(samples));
}

LipschitzJet LipschitzJet::scaled(double c) const {
  auto copy = samples_;
  for (auto& s : copy) {
    s.g0 *= c;
    for (auto& g : s.gj) g *= c;
  }
  return LipschitzJet(alpha_, std::move(copy));
}

LipschitzJet LipschitzJet::plus(const LipschitzJet& other) const {
  if (other.samples_.size() != samples_.size())
    throw std::invalid_argument("jet sample sets differ");
  auto copy = samples_;
  for (std::size_t i = 0; i < copy.size(); ++i) {
    copy[i].g0 += other.samples_[i].g0;
    for (int k = 0; k < 3; ++k) copy[i].gj[k] += other.samples_[i].gj[k];
  }
  return LipschitzJet(std::min(alpha_, other.alpha_), std::move(copy));
}

LipschitzJet jet_from_function(const AnalyticField& f, const BoundaryMesh& mesh, double alpha) {
  std::vector<JetSample> samples;
  samples.reserve(mesh.vertices().size() + mesh.element_count());
  for (const Vec3& v : mesh.vertices()) samples.push_back({v, f.value(v), f.gradient(v)});
  for (std::size_t e = 0; e < mesh.element_count(); ++e) {
    const Vec3& c = mesh.centroid(e);
    samples.push_back({c, f.value(c), f.gradient(c)});
  }
  return LipschitzJet(alpha, std::move(samples));
}

AnalyticField analytic_constant(const Multivector& c) {
  const int m = c.dim();
  return {[c](const Vec3&) { return c; },
          [m](const Vec3&) {
            return std::array<Multivector, 3>{Multivector(m), Multivector(m), Multivector(m)};
          }};
}

AnalyticField analytic_from_poly(const PolyField& u) {
  auto dx = std::make_shared<std::array<PolyField, 3>>(
      std::array<PolyField, 3>{u.derivative(0), u.derivative(1), u.derivative(2)});
  auto up = std::make_shared<PolyField>(u);
  return {[up](const Vec3& p) { return up->eval(p.to_array()); },
          [dx](const Vec3& p) {
            auto a = p.to_array();
            return std::array<Multivector, 3>{(*dx)[0].eval(a), (*dx)[1].eval(a),
                                              (*dx)[2].eval(a)};
          }};
}

}  // namespace hyperrh
