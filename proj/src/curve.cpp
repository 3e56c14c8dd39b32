#include "peanofill/curve.hpp"

#include <cmath>

namespace peanofill {

namespace {

const PartitionLevel& level_at(const CurvePartition& cp, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > cp.levels.size()) {
    throw std::out_of_range("curve: level beyond built depth");
  }
  return cp.levels[static_cast<std::size_t>(j - 1)];
}

}  // namespace

long long cell_index(const CurvePartition& cp, double u, int j) {
  if (u < 0.0 || u > 1.0) throw std::invalid_argument("curve: u outside [0,1]");
  const PartitionLevel& lvl = level_at(cp, j);
  long long M = lvl.M;
  long long K = static_cast<long long>(std::floor(u * static_cast<double>(M))) + 1;
  if (K < 1) K = 1;
  if (K > M) K = M;
  return K;
}

CurvePoint eval_f(const CurvePartition& cp, double u, int j) {
  const PartitionLevel& lvl = level_at(cp, j);
  long long K = cell_index(cp, u, j);
  const ConvexRegion& cell = lvl.souls.souls[static_cast<std::size_t>(K - 1)].base();
  CurvePoint out;
  out.point = cp.transform.apply(cell.centroid());
  out.error_radius = cell.diameter() * cp.transform.scale;
  return out;
}

CurveImage image_of_interval(const CurvePartition& cp, double a, double b, int j) {
  if (!(0.0 <= a && a <= b && b <= 1.0)) {
    throw std::invalid_argument("image_of_interval: need 0 <= a <= b <= 1");
  }
  const PartitionLevel& lvl = level_at(cp, j);
  long long Ka = cell_index(cp, a, j);
  long long Kb = cell_index(cp, b, j);
  CurveImage img;
  img.covering_cells = static_cast<int>(Kb - Ka + 1);
  std::vector<Point> pts;
  std::vector<Point> inner_pts;
  double M = static_cast<double>(lvl.M);
  for (long long K = Ka; K <= Kb; ++K) {
    const ConvexRegion& cell = lvl.souls.souls[static_cast<std::size_t>(K - 1)].base();
    const auto& v = cell.vertices();
    pts.insert(pts.end(), v.begin(), v.end());
    double lo = static_cast<double>(K - 1) / M;
    double hi = static_cast<double>(K) / M;
    if (lo >= a - 1e-15 && hi <= b + 1e-15) {
      inner_pts.insert(inner_pts.end(), v.begin(), v.end());
    } else {
      ++img.collar_cells;
    }
  }
  img.region = ConvexRegion::hull_of(pts);
  if (!inner_pts.empty()) img.inner = ConvexRegion::hull_of(inner_pts);
  // Certification: hull area vs telescoped union area of the covering cells.
  std::vector<ConvexRegion> cells;
  for (long long K = Ka; K <= Kb; ++K) {
    cells.push_back(lvl.souls.souls[static_cast<std::size_t>(K - 1)].base());
  }
  double union_area = cells.front().area();
  for (std::size_t i = 1; i < cells.size(); ++i) {
    union_area += cells[i].area() - intersect(cells[i], cells[i - 1]).area();
  }
  img.hull_deficiency = std::max(0.0, img.region.area() - union_area);
  return img;
}

std::vector<Point> sample_curve(const CurvePartition& cp, int n, int j) {
  if (n < 2) throw std::invalid_argument("sample_curve: need n >= 2");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double u = static_cast<double>(i) / (n - 1);
    out.push_back(eval_f(cp, u, j).point);
  }
  return out;
}

}  // namespace peanofill
