#include "peanofill/rho_convex.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace peanofill {

namespace {

// Inscribed polygon of the ball with the tangency point as an exact vertex.
ConvexRegion ball_polygon(const Disc& b, Point tangency, int n_arc) {
  double phase = std::atan2(tangency.y - b.center.y, tangency.x - b.center.x);
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(n_arc));
  for (int k = 0; k < n_arc; ++k) {
    double a = phase + 2.0 * M_PI * k / n_arc;
    v.push_back({b.center.x + b.radius * std::cos(a), b.center.y + b.radius * std::sin(a)});
  }
  return ConvexRegion::from_ccw(std::move(v));
}

ConvexRegion clip_to_ball(const ConvexRegion& t, const Disc& b, Point tangency, int n_arc) {
  ConvexRegion poly = ball_polygon(b, tangency, n_arc);
  return intersect(t, poly);
}

}  // namespace

RhoFamily make_rho_family(double rho, ConvexRegion domain, int n_arc) {
  if (rho < 1.0) throw std::invalid_argument("rho must be >= 1");
  if (domain.empty()) throw std::invalid_argument("empty domain");
  if (domain.diameter() > 1.0 + 1e-9) {
    throw std::invalid_argument("domain not normalized (diameter > 1)");
  }
  return RhoFamily{rho, std::move(domain), n_arc};
}

Cap support_cap(const ConvexRegion& s, const Point& x, const RhoFamily& fam) {
  if (s.empty()) throw std::invalid_argument("support_cap: empty support set");
  if (!fam.domain.contains(x, 1e-7)) throw std::invalid_argument("support_cap: x outside domain");
  if (s.contains(x, kEpsGeom)) throw std::invalid_argument("support_cap: x inside support set");
  Point p = min_dist_projection(s, x);
  double d = dist(x, p);
  if (d <= kEpsGeom) throw std::invalid_argument("support_cap: x on the support boundary");
  Point dir = (1.0 / d) * (x - p);
  Disc ball{{p.x - fam.rho * dir.x, p.y - fam.rho * dir.y}, fam.rho};
  Cap cap;
  cap.source_ball = ball;
  cap.witness = x;
  cap.contact = p;
  cap.region = clip_to_ball(fam.domain, ball, p, fam.n_arc);
  return cap;
}

Cap cap_from_contact(const Point& y, const Point& x, const RhoFamily& fam) {
  double d = dist(x, y);
  if (d <= kEpsGeom) throw std::invalid_argument("cap_from_contact: coincident points");
  Point dir = (1.0 / d) * (x - y);
  Disc ball{{y.x - fam.rho * dir.x, y.y - fam.rho * dir.y}, fam.rho};
  Cap cap;
  cap.source_ball = ball;
  cap.witness = x;
  cap.contact = y;
  cap.region = clip_to_ball(fam.domain, ball, y, fam.n_arc);
  return cap;
}

bool is_rho_convex_at(const ConvexRegion& t, const Point& x, const RhoFamily& fam) {
  if (t.empty()) throw std::invalid_argument("is_rho_convex_at: empty region");
  double depth = t.side_depth(x);
  if (std::abs(depth) > 1e-5) {
    throw std::invalid_argument("is_rho_convex_at: x not on the boundary");
  }
  constexpr double kEpsLoc = 0.05;  // fixed local scale in the normalized frame
  double tol = fam.sagitta() + 1e-5;

  // Candidate outward normals from the incident edges.
  const auto& v = t.vertices();
  std::vector<Point> normals;
  auto push_normal = [&normals](Point a, Point b) {
    Point e = b - a;
    double len = norm(e);
    if (len <= 1e-14) return;
    normals.push_back({e.y / len, -e.x / len});  // outward for CCW
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point a = v[i];
    Point b = v[(i + 1) % v.size()];
    // Edge incident to x?
    Point ab = b - a;
    double len2 = dot(ab, ab);
    double ti = len2 > 0 ? std::clamp(dot(x - a, ab) / len2, 0.0, 1.0) : 0.0;
    Point cp = a + ti * ab;
    if (dist(cp, x) <= 1e-5) push_normal(a, b);
  }
  if (normals.empty()) return false;
  // Interpolated candidates across the normal cone.
  std::vector<Point> cands = normals;
  if (normals.size() >= 2) {
    Point n1 = normals.front(), n2 = normals.back();
    for (double w : {0.25, 0.5, 0.75}) {
      Point m{(1 - w) * n1.x + w * n2.x, (1 - w) * n1.y + w * n2.y};
      double len = norm(m);
      if (len > 1e-12) cands.push_back({m.x / len, m.y / len});
    }
  }

  // Local boundary points of t near x.
  std::vector<Point> local;
  for (const Point& p : t.boundary_samples(kEpsLoc / 8)) {
    if (dist(p, x) <= kEpsLoc) local.push_back(p);
  }
  for (const Point& p : v) {
    if (dist(p, x) <= kEpsLoc) local.push_back(p);
  }

  for (const Point& n : cands) {
    Point center{x.x - fam.rho * n.x, x.y - fam.rho * n.y};
    double worst = 0.0;
    for (const Point& p : local) {
      worst = std::max(worst, dist(p, center) - fam.rho);
      if (worst > tol) break;
    }
    if (worst <= tol) return true;
  }
  return false;
}

FRhoReport check_F_rho(const ConvexRegion& t, const RhoFamily& fam, int n_samples,
                       std::uint64_t seed) {
  FRhoReport rep;
  rep.tol = 2.0 * fam.sagitta() + 1e-4;
  if (t.empty()) throw std::invalid_argument("check_F_rho: empty region");
  auto [lo, hi] = fam.domain.bbox();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
  int tried = 0;
  const int budget = n_samples * 60;
  while (rep.samples_used < n_samples && tried < budget) {
    ++tried;
    Point x{ux(rng), uy(rng)};
    if (!fam.domain.contains(x, 0.0)) continue;
    if (t.contains(x, 1e-4)) continue;  // keep a small standoff from t
    Cap cap = support_cap(t, x, fam);
    ++rep.samples_used;
    double dev = deviation(t, cap.region);
    if (dev > rep.worst_violation) {
      rep.worst_violation = dev;
      if (dev > rep.tol) rep.witness = x;
    }
  }
  rep.pass = rep.worst_violation <= rep.tol;
  return rep;
}

std::vector<Point> bow(const Point& x, const Point& y, const RhoFamily& fam, BowSide side) {
  double c = dist(x, y);
  if (c <= kEpsGeom) throw std::invalid_argument("bow: coincident endpoints");
  if (c > 1.0 + 1e-12) throw std::invalid_argument("bow: chord exceeds the domain scale");
  if (c >= 2.0 * fam.rho - 1e-12) {
    throw std::invalid_argument("bow: chord reaches the semicircle limit");
  }
  Point mid = 0.5 * (x + y);
  Point dirv = (1.0 / c) * (y - x);
  Point left_n{-dirv.y, dirv.x};
  double h = std::sqrt(std::max(0.0, fam.rho * fam.rho - 0.25 * c * c));
  // Arc bulging to `side` means the center sits on the opposite side.
  double s = (side == BowSide::Left) ? -1.0 : 1.0;
  Point center = mid + (s * h) * left_n;
  double a0 = std::atan2(x.y - center.y, x.x - center.x);
  double a1 = std::atan2(y.y - center.y, y.x - center.x);
  double sweep = a1 - a0;
  while (sweep > M_PI) sweep -= 2 * M_PI;
  while (sweep < -M_PI) sweep += 2 * M_PI;
  int n = std::max(8, static_cast<int>(std::ceil(std::abs(sweep) / (2 * M_PI / fam.n_arc))));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double a = a0 + sweep * k / n;
    pts.push_back({center.x + fam.rho * std::cos(a), center.y + fam.rho * std::sin(a)});
  }
  pts.front() = x;
  pts.back() = y;
  return pts;
}

}  // namespace peanofill
