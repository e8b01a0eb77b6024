#include "hyperrh/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "hyperrh/errors.hpp"

namespace hyperrh {

std::vector<Vec3> sample_surface(const BoundaryMesh& mesh, double spacing) {
  std::vector<Vec3> pts;
  for (std::size_t e = 0; e < mesh.element_count(); ++e) {
    auto [a, b, c] = mesh.corners(e);
    double longest = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    int n = std::max(1, static_cast<int>(std::ceil(longest / spacing)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + i < n; ++j) {
        // Lower and (when present) upper sub-triangle midpoints of the
        // barycentric lattice cell (i, j).
        double u = (i + 1.0 / 3.0) / n, v = (j + 1.0 / 3.0) / n;
        pts.push_back(a + (b - a) * u + (c - a) * v);
        if (i + j < n - 1) {
          double u2 = (i + 2.0 / 3.0) / n, v2 = (j + 2.0 / 3.0) / n;
          pts.push_back(a + (b - a) * u2 + (c - a) * v2);
        }
      }
  }
  return pts;
}

namespace {

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : {k.x, k.y, k.z}) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::size_t covering_number(std::span<const Vec3> samples, double tau) {
  const double cell = tau;
  auto key_of = [cell](const Vec3& p) {
    return CellKey{static_cast<std::int64_t>(std::floor(p.x / cell)),
                   static_cast<std::int64_t>(std::floor(p.y / cell)),
                   static_cast<std::int64_t>(std::floor(p.z / cell))};
  };
  std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
  for (int i = 0; i < static_cast<int>(samples.size()); ++i)
    grid[key_of(samples[i])].push_back(i);

  std::vector<char> covered(samples.size(), 0);
  std::size_t balls = 0;
  const double tau_sq = tau * tau;
  for (int i = 0; i < static_cast<int>(samples.size()); ++i) {
    if (covered[i]) continue;
    ++balls;
    CellKey k = key_of(samples[i]);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = grid.find(CellKey{k.x + dx, k.y + dy, k.z + dz});
          if (it == grid.end()) continue;
          for (int j : it->second)
            if (!covered[j] && (samples[j] - samples[i]).norm_sq() <= tau_sq) covered[j] = 1;
        }
  }
  return balls;
}

BoxDimensionEstimate box_dimension_estimate(const BoundaryMesh& mesh, double tau_min,
                                            double tau_max, int levels) {
  if (!(tau_min > 0.0) || tau_max <= tau_min || levels < 2)
    throw std::invalid_argument("bad tau range");
  if (tau_min < 0.75 * mesh.spacing())
    throw std::invalid_argument("tau below mesh resolution");

  auto samples = sample_surface(mesh, tau_min / 3.0);

  BoxDimensionEstimate est;
  const double ratio = std::pow(tau_max / tau_min, 1.0 / (levels - 1));
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int l = 0; l < levels; ++l) {
    double tau = tau_min * std::pow(ratio, l);
    std::size_t n = covering_number(samples, tau);
    est.curve.push_back({tau, n});
    double lx = std::log(1.0 / tau), ly = std::log(static_cast<double>(n));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = levels;
  est.dimension = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  est.intercept = (sy - est.dimension * sx) / n;
  return est;
}

std::vector<double> d_summability_partial_integrals(const BoxDimensionEstimate& est, double d) {
  // Trapezoid in tau over the measured curve, accumulated from the largest
  // tau downward, so entry k is the integral from curve tau_k to tau_max.
  auto curve = est.curve;
  std::sort(curve.begin(), curve.end(),
            [](const CoverPoint& a, const CoverPoint& b) { return a.tau > b.tau; });
  std::vector<double> partial;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    double t1 = curve[i].tau, t0 = curve[i + 1].tau;
    double f1 = static_cast<double>(curve[i].balls) * std::pow(t1, d - 1.0);
    double f0 = static_cast<double>(curve[i + 1].balls) * std::pow(t0, d - 1.0);
    acc += 0.5 * (f0 + f1) * (t1 - t0);
    partial.push_back(acc);
  }
  return partial;
}

}  // namespace hyperrh
