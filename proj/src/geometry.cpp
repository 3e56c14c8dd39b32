#include "peanofill/geometry.hpp"

#include <algorithm>
#include <unordered_set>

namespace peanofill {

namespace {

double tri_cross(Point a, Point b, Point c) { return cross(b - a, c - a); }

std::vector<Point> dedup_ring(std::vector<Point> v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const Point& p : v) {
    if (out.empty() || dist(out.back(), p) > 1e-12) out.push_back(p);
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= 1e-12) out.pop_back();
  return out;
}

double ring_area(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    a += cross(p, q);
  }
  return 0.5 * a;
}

// Closest point on segment [a,b] to p.
Point closest_on_segment(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 <= 1e-24) return a;
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

double seg_seg_distance(Point a, Point b, Point c, Point d) {
  // Proper crossing?
  double d1 = tri_cross(a, b, c), d2 = tri_cross(a, b, d);
  double d3 = tri_cross(c, d, a), d4 = tri_cross(c, d, b);
  if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;
  double best = dist(c, closest_on_segment(c, a, b));
  best = std::min(best, dist(d, closest_on_segment(d, a, b)));
  best = std::min(best, dist(a, closest_on_segment(a, c, d)));
  best = std::min(best, dist(b, closest_on_segment(b, c, d)));
  return best;
}

}  // namespace

// --- ConvexRegion -----------------------------------------------------------

ConvexRegion ConvexRegion::from_ccw(std::vector<Point> verts) {
  ConvexRegion r;
  verts = dedup_ring(std::move(verts));
  if (verts.size() >= 3 && ring_area(verts) < 0.0) {
    std::reverse(verts.begin(), verts.end());
  }
  r.verts_ = std::move(verts);
  return r;
}

ConvexRegion ConvexRegion::hull_of(std::span<const Point> pts) {
  std::vector<Point> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end(),
                      [](Point a, Point b) { return dist(a, b) <= 1e-12; }),
          p.end());
  if (p.size() < 3) {
    ConvexRegion r;
    r.verts_ = std::move(p);
    return r;
  }
  std::vector<Point> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {  // lower
    while (k >= 2 && tri_cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && tri_cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return from_ccw(std::move(h));
}

ConvexRegion ConvexRegion::rectangle(double x0, double y0, double x1, double y1) {
  if (x1 < x0) std::swap(x0, x1);
  if (y1 < y0) std::swap(y0, y1);
  return from_ccw({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexRegion ConvexRegion::inscribed_polygon(const Disc& d, int n) {
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double a = 2.0 * M_PI * k / n;
    v.push_back({d.center.x + d.radius * std::cos(a), d.center.y + d.radius * std::sin(a)});
  }
  return from_ccw(std::move(v));
}

double ConvexRegion::area() const {
  if (verts_.size() < 3) return 0.0;
  return std::abs(ring_area(verts_));
}

Point ConvexRegion::centroid() const {
  if (verts_.empty()) throw std::invalid_argument("centroid of empty region");
  if (verts_.size() < 3 || area() <= kEpsArea) {
    Point c{0, 0};
    for (const Point& p : verts_) c = c + p;
    return (1.0 / verts_.size()) * c;
  }
  double a = 0.0;
  Point c{0, 0};
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point& p = verts_[i];
    const Point& q = verts_[(i + 1) % verts_.size()];
    double w = cross(p, q);
    a += w;
    c = c + w * (p + q);
  }
  return (1.0 / (3.0 * a)) * c;
}

std::pair<Point, Point> ConvexRegion::bbox() const {
  if (verts_.empty()) return {{0, 0}, {0, 0}};
  Point lo = verts_[0], hi = verts_[0];
  for (const Point& p : verts_) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

bool ConvexRegion::contains(Point p, double tol) const {
  if (verts_.empty()) return false;
  if (verts_.size() == 1) return dist(p, verts_[0]) <= std::max(tol, 0.0);
  if (verts_.size() == 2) {
    return dist(p, closest_on_segment(p, verts_[0], verts_[1])) <= std::max(tol, 0.0);
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point& a = verts_[i];
    const Point& b = verts_[(i + 1) % verts_.size()];
    double e = norm(b - a);
    if (e <= 1e-15) continue;
    if (tri_cross(a, b, p) < -tol * e) return false;  // signed distance test
  }
  return true;
}

double ConvexRegion::side_depth(Point p) const {
  if (verts_.size() < 3) return -kInfDist;
  double depth = kInfDist;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point& a = verts_[i];
    const Point& b = verts_[(i + 1) % verts_.size()];
    double e = norm(b - a);
    if (e <= 1e-15) continue;
    depth = std::min(depth, tri_cross(a, b, p) / e);
  }
  return depth;
}

double ConvexRegion::extent_x() const {
  if (verts_.empty()) return 0.0;
  auto [lo, hi] = bbox();
  return hi.x - lo.x;
}

double ConvexRegion::extent_y() const {
  if (verts_.empty()) return 0.0;
  auto [lo, hi] = bbox();
  return hi.y - lo.y;
}

double ConvexRegion::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j)
      best = std::max(best, dist(verts_[i], verts_[j]));
  return best;
}

std::vector<Point> ConvexRegion::boundary_samples(double step) const {
  std::vector<Point> out;
  if (verts_.empty()) return out;
  if (verts_.size() < 3) {
    out = verts_;
    return out;
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point& a = verts_[i];
    const Point& b = verts_[(i + 1) % verts_.size()];
    out.push_back(a);
    double len = dist(a, b);
    int n = static_cast<int>(std::floor(len / std::max(step, 1e-6)));
    for (int k = 1; k <= n; ++k) out.push_back(a + (static_cast<double>(k) / (n + 1)) * (b - a));
  }
  return out;
}

// --- operations -------------------------------------------------------------

std::pair<ConvexRegion, FrameTransform> normalize_domain(const ConvexRegion& raw) {
  if (raw.empty()) throw std::invalid_argument("degenerate domain");
  double d = raw.diameter();
  if (d <= kEpsGeom) throw std::invalid_argument("degenerate domain");
  Point c = raw.centroid();
  double scale = std::max(d, 1.0);  // regions already small enough stay unscaled
  std::vector<Point> v;
  v.reserve(raw.size());
  for (const Point& p : raw.vertices()) {
    v.push_back({(p.x - c.x) / scale, (p.y - c.y) / scale});
  }
  ConvexRegion norm = ConvexRegion::from_ccw(std::move(v));
  if (norm.area() <= kEpsArea) throw std::invalid_argument("degenerate domain");
  FrameTransform back{scale, c, false, false};
  return {norm, back};
}

ConvexRegion clip_halfplane(const ConvexRegion& t, Point n, double c) {
  const auto& v = t.vertices();
  if (v.size() < 3) return ConvexRegion();
  std::vector<Point> out;
  out.reserve(v.size() + 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    double da = dot(n, a) - c;
    double db = dot(n, b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      double s = da / (da - db);
      out.push_back(a + s * (b - a));
    }
  }
  return ConvexRegion::from_ccw(std::move(out));
}

ConvexRegion clip_halfplane(const ConvexRegion& t, Axis axis, double bound, Sense sense) {
  Point n = (axis == Axis::X) ? Point{1, 0} : Point{0, 1};
  double c = bound;
  if (sense == Sense::GreaterEq) {
    n = {-n.x, -n.y};
    c = -bound;
  }
  return clip_halfplane(t, n, c);
}

ConvexRegion clip_disc(const ConvexRegion& t, const Disc& b, int n_arc) {
  if (n_arc < 8) throw std::invalid_argument("clip_disc: n_arc must be >= 8");
  if (t.empty() || b.radius <= 0.0) return ConvexRegion();
  // Quick accept: t entirely inside the inscribed polygon's incircle.
  double r_in = b.radius * std::cos(M_PI / n_arc);
  auto [lo, hi] = t.bbox();
  Point corners[4] = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
  double worst = 0.0;
  for (const Point& p : corners) worst = std::max(worst, dist(p, b.center));
  if (worst <= r_in) return t;
  ConvexRegion cur = t;
  for (int k = 0; k < n_arc && !cur.empty(); ++k) {
    double a0 = 2.0 * M_PI * k / n_arc;
    double a1 = 2.0 * M_PI * (k + 1) / n_arc;
    Point p0{b.center.x + b.radius * std::cos(a0), b.center.y + b.radius * std::sin(a0)};
    Point p1{b.center.x + b.radius * std::cos(a1), b.center.y + b.radius * std::sin(a1)};
    // Edge halfplane: keep the side containing the disc center.
    Point n{p1.y - p0.y, p0.x - p1.x};  // inward normal of CCW edge
    double c = dot(n, p0);
    if (dot(n, b.center) > c) {
      n = {-n.x, -n.y};
      c = -c;
    }
    // Skip edges that do not cut the current polygon.
    bool cuts = false;
    for (const Point& q : cur.vertices()) {
      if (dot(n, q) > c) {
        cuts = true;
        break;
      }
    }
    if (cuts) cur = clip_halfplane(cur, n, c);
  }
  return cur;
}

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.empty() || b.empty()) return ConvexRegion();
  ConvexRegion cur = a;
  const auto& v = b.vertices();
  for (std::size_t i = 0; i < v.size() && !cur.empty(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    Point n{q.y - p.y, p.x - q.x};  // outward normal of the CCW edge
    cur = clip_halfplane(cur, n, dot(n, p));
  }
  return cur;
}

double extent(const ConvexRegion& t, ExtentMode mode) {
  if (t.vertices().empty()) throw std::invalid_argument("extent of empty region");
  switch (mode) {
    case ExtentMode::X:
      return t.extent_x();
    case ExtentMode::Y:
      return t.extent_y();
    default:
      return t.diameter();
  }
}

double separation(const ConvexRegion& r, const ConvexRegion& s) {
  if (r.vertices().empty() || s.vertices().empty()) return kInfDist;
  // Overlap check: vertex containment either way.
  for (const Point& p : r.vertices())
    if (s.contains(p, 0.0)) return 0.0;
  for (const Point& p : s.vertices())
    if (r.contains(p, 0.0)) return 0.0;
  const auto& a = r.vertices();
  const auto& b = s.vertices();
  if (a.size() < 3 || b.size() < 3) {
    double best = kInfDist;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        Point a2 = a[(i + 1) % std::max<std::size_t>(a.size(), 1)];
        Point b2 = b[(j + 1) % std::max<std::size_t>(b.size(), 1)];
        best = std::min(best, seg_seg_distance(a[i], a.size() > 1 ? a2 : a[i], b[j],
                                               b.size() > 1 ? b2 : b[j]));
      }
    return best;
  }
  double best = kInfDist;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, seg_seg_distance(a[i], a[(i + 1) % a.size()], b[j],
                                             b[(j + 1) % b.size()]));
      if (best == 0.0) return 0.0;
    }
  }
  return best;
}

Point min_dist_projection(const ConvexRegion& s, const Point& x) {
  if (s.vertices().empty()) throw std::invalid_argument("projection onto empty region");
  if (s.contains(x, kEpsGeom) && s.size() >= 3) {
    throw std::invalid_argument("min_dist_projection: point inside region");
  }
  const auto& v = s.vertices();
  Point best = v[0];
  double bd = dist(x, v[0]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point c = v.size() > 1 ? closest_on_segment(x, v[i], v[(i + 1) % v.size()]) : v[i];
    double d = dist(x, c);
    if (d < bd) {
      bd = d;
      best = c;
    }
  }
  return best;
}

ConvexRegion apply_transform(const ConvexRegion& t, const FrameTransform& f) {
  std::vector<Point> v;
  v.reserve(t.size());
  for (const Point& p : t.vertices()) v.push_back(f.apply(p));
  return ConvexRegion::from_ccw(std::move(v));
}

double deviation(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.vertices().empty()) return 0.0;
  if (b.vertices().empty()) return kInfDist;
  const auto& bv = b.vertices();
  double worst = 0.0;
  for (const Point& p : a.vertices()) {
    if (b.contains(p, 0.0)) continue;
    double d = kInfDist;
    for (std::size_t i = 0; i < bv.size(); ++i) {
      Point c = bv.size() > 1 ? closest_on_segment(p, bv[i], bv[(i + 1) % bv.size()]) : bv[i];
      d = std::min(d, dist(p, c));
    }
    worst = std::max(worst, d);
  }
  return worst;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
  return std::max(deviation(a, b), deviation(b, a));
}

HullDeficiencyResult hull_deficiency(std::span<const Point> sample, double resolution) {
  if (sample.size() < 3) throw std::invalid_argument("hull_deficiency needs >= 3 points");
  ConvexRegion hull = ConvexRegion::hull_of(sample);
  HullDeficiencyResult res;
  if (hull.size() < 3 || hull.area() <= kEpsArea) {
    res.value = 0.0;
    res.degenerate = true;
    return res;
  }
  auto [lo, hi] = hull.bbox();
  double diag = dist(lo, hi);
  double cell = resolution;
  if (cell <= 0.0) {
    // Match the sampling density: a uniform cloud of n points over the hull
    // has spacing ~ sqrt(area/n).
    double density = 1.6 * std::sqrt(hull.area() / static_cast<double>(sample.size()));
    cell = std::max(diag / 128.0, density);
  }
  int nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / cell)));
  int ny = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / cell)));
  if (static_cast<long long>(nx) * ny > 4'000'000LL) {
    cell = diag / 96.0;
    nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / cell)));
    ny = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / cell)));
  }
  std::vector<char> occupied(static_cast<std::size_t>(nx) * ny, 0);
  for (const Point& p : sample) {
    int ix = std::clamp(static_cast<int>((p.x - lo.x) / cell), 0, nx - 1);
    int iy = std::clamp(static_cast<int>((p.y - lo.y) / cell), 0, ny - 1);
    occupied[static_cast<std::size_t>(iy) * nx + ix] = 1;
  }
  // Count interior probe cells (center well inside hull) that no sample hit.
  double miss_area = 0.0;
  double margin = cell * 1.5;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      if (occupied[static_cast<std::size_t>(iy) * nx + ix]) continue;
      Point c{lo.x + (ix + 0.5) * cell, lo.y + (iy + 0.5) * cell};
      if (hull.side_depth(c) > margin) miss_area += cell * cell;
    }
  }
  res.value = miss_area;
  return res;
}

std::uint64_t fingerprint(const ConvexRegion& t) {
  const auto& v = t.vertices();
  if (v.empty() || t.area() <= kEpsArea) return 0;
  auto quant = [](double x) {
    return static_cast<std::int64_t>(std::llround(x * 1e9));
  };
  // Rotate to start at the lexicographically smallest quantized vertex.
  std::size_t start = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    auto a = std::make_pair(quant(v[i].x), quant(v[i].y));
    auto b = std::make_pair(quant(v[start].x), quant(v[start].y));
    if (a < b) start = i;
  }
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t x) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ull;
  };
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& p = v[(start + k) % v.size()];
    mix(quant(p.x));
    mix(quant(p.y));
  }
  return h == 0 ? 1 : h;
}

// --- Region -----------------------------------------------------------------

std::vector<Point> Region::boundary_samples(double step) const {
  std::vector<Point> out;
  if (outer_.vertices().empty()) return out;
  for (const Point& p : outer_.boundary_samples(step)) {
    if (inner_.empty() || !inner_.contains(p, -1e-12)) out.push_back(p);
  }
  if (!inner_.empty()) {
    for (const Point& p : inner_.boundary_samples(step)) {
      if (outer_.contains(p, 1e-12)) out.push_back(p);
    }
  }
  if (out.empty()) out.push_back(outer_.vertices().front());
  return out;
}

double Region::diameter() const {
  if (empty()) return 0.0;
  if (pure_convex()) return outer_.diameter();
  auto pts = boundary_samples(0.01);
  ConvexRegion hull = ConvexRegion::hull_of(pts);
  double best = 0.0;
  const auto& v = hull.vertices().size() >= 2 ? hull.vertices() : pts;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, dist(v[i], v[j]));
  return best;
}

double separation(const Region& r, const Region& s, double sample_step) {
  if (r.empty() || s.empty()) return kInfDist;
  if (r.pure_convex() && s.pure_convex()) return separation(r.outer(), s.outer());
  auto [rlo, rhi] = r.bbox();
  auto [slo, shi] = s.bbox();
  double gx = std::max({slo.x - rhi.x, rlo.x - shi.x, 0.0});
  double gy = std::max({slo.y - rhi.y, rlo.y - shi.y, 0.0});
  double bbox_gap = std::hypot(gx, gy);
  auto a = r.boundary_samples(sample_step);
  auto b = s.boundary_samples(sample_step);
  // Overlap: sample of one inside the other.
  for (const Point& p : a)
    if (s.contains(p, 1e-12)) return 0.0;
  for (const Point& p : b)
    if (r.contains(p, 1e-12)) return 0.0;
  double best = kInfDist;
  for (const Point& p : a)
    for (const Point& q : b) best = std::min(best, dist(p, q));
  return std::max(best, bbox_gap);
}

bool regions_equal(const Region& a, const Region& b, double tol) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() != b.empty()) return false;
  if (std::abs(a.area() - b.area()) > tol) return false;
  for (const Point& p : a.boundary_samples(0.02)) {
    if (!b.contains(p, tol)) return false;
  }
  for (const Point& p : b.boundary_samples(0.02)) {
    if (!a.contains(p, tol)) return false;
  }
  return true;
}

std::uint64_t fingerprint(const Region& r) {
  if (r.empty()) return 0;
  std::uint64_t ho = fingerprint(r.outer());
  std::uint64_t hi = fingerprint(r.inner());
  std::uint64_t h = ho * 1099511628211ull ^ (hi + 0x9e3779b97f4a7c15ull);
  return h == 0 ? 1 : h;
}

}  // namespace peanofill
