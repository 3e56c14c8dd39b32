#pragma once
// 2D convex-region kernel: clipping, extents, separation, projections,
// reflections. Everything downstream (sequences, nets, the partition
// builder) works over these values.
//
// Representation notes:
// - ConvexRegion is a closed convex polygon, vertices CCW, no repeated
//   adjacent vertices. The empty region is a valid value.
// - Circular arcs are discretized as inscribed n-gon edges, so every
//   disc clip UNDERestimates the true intersection by at most the
//   sagitta r*(1-cos(pi/n_arc)).
// - Region represents a closed set difference outer \ int(inner) with
//   both parts convex (inner possibly empty). Distance/emptiness
//   queries on such differences go through boundary sampling.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace peanofill {

inline constexpr double kEpsGeom = 1e-9;   // orientation slack, normalized frame
inline constexpr double kEpsSep = 1e-6;    // threshold realizing "inf > 0" separateness
inline constexpr double kEpsArea = 1e-10;  // below this a polygon counts as empty
inline constexpr int kDefaultArcSegments = 64;
inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

struct Disc {
  Point center;
  double radius = 0.0;
};

enum class Axis { X, Y };
enum class Sense { LessEq, GreaterEq };
enum class ExtentMode { X, Y, Diameter };

// Closed convex polygon, CCW. May be empty.
class ConvexRegion {
 public:
  ConvexRegion() = default;

  // Takes vertices assumed convex/CCW; cleans duplicates, enforces CCW.
  static ConvexRegion from_ccw(std::vector<Point> verts);
  // Convex hull of arbitrary points.
  static ConvexRegion hull_of(std::span<const Point> pts);
  static ConvexRegion rectangle(double x0, double y0, double x1, double y1);
  // Inscribed n-gon of the disc (subset of the disc).
  static ConvexRegion inscribed_polygon(const Disc& d, int n);

  bool empty() const { return verts_.size() < 3 || area() <= kEpsArea; }
  const std::vector<Point>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }

  double area() const;
  Point centroid() const;
  std::pair<Point, Point> bbox() const;  // (min corner, max corner)
  bool contains(Point p, double tol = kEpsGeom) const;
  // Signed "depth": >=0 inside (distance to boundary), <0 outside (negated
  // max halfplane violation; a lower bound on the true exterior distance
  // near the region).
  double side_depth(Point p) const;

  double extent_x() const;
  double extent_y() const;
  double diameter() const;

  std::vector<Point> boundary_samples(double step) const;

 private:
  std::vector<Point> verts_;
};

// --- transforms -----------------------------------------------------------

// p -> scale * N(p) + offset where N applies axis_swap first, then x_negate.
struct FrameTransform {
  double scale = 1.0;
  Point offset{};
  bool axis_swap = false;
  bool x_negate = false;

  Point apply(Point p) const {
    Point q = p;
    if (axis_swap) q = {q.y, q.x};
    if (x_negate) q = {-q.x, q.y};
    return {scale * q.x + offset.x, scale * q.y + offset.y};
  }
  Point apply_inverse(Point p) const {
    Point q{(p.x - offset.x) / scale, (p.y - offset.y) / scale};
    if (x_negate) q = {-q.x, q.y};
    if (axis_swap) q = {q.y, q.x};
    return q;
  }
  static FrameTransform identity() { return {}; }
  static FrameTransform swap_xy() { return {1.0, {}, true, false}; }
  static FrameTransform negate_x() { return {1.0, {}, false, true}; }
};

// --- kernel operations -----------------------------------------------------

// Scales/translates raw onto diameter <= 1 inside [-1,1]^2, centered at the
// origin. The returned transform maps the normalized region back onto raw.
// Throws std::invalid_argument on empty or zero-area input.
std::pair<ConvexRegion, FrameTransform> normalize_domain(const ConvexRegion& raw);

// Exact clip by the halfplane dot(n,p) <= c.
ConvexRegion clip_halfplane(const ConvexRegion& t, Point n, double c);
ConvexRegion clip_halfplane(const ConvexRegion& t, Axis axis, double bound, Sense sense);

// Polygonal approximation of t ∩ b (inscribed-polygon edges, result ⊆ t∩b).
ConvexRegion clip_disc(const ConvexRegion& t, const Disc& b, int n_arc = kDefaultArcSegments);

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b);

double extent(const ConvexRegion& t, ExtentMode mode);

// Infimum distance between the regions; 0 if they touch/overlap; +inf when
// either is empty (empty sets count as separated).
double separation(const ConvexRegion& r, const ConvexRegion& s);

// Nearest point of s to x. Requires x outside of s (throws otherwise).
Point min_dist_projection(const ConvexRegion& s, const Point& x);

ConvexRegion apply_transform(const ConvexRegion& t, const FrameTransform& f);

// One-sided deviation sup_{a in A} d(a, B) and the symmetric Hausdorff
// distance, exact for convex polygons (attained at vertices).
double deviation(const ConvexRegion& a, const ConvexRegion& b);
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

struct HullDeficiencyResult {
  double value = 0.0;
  bool degenerate = false;  // hull had (near-)zero area
};

// area(hull(sample)) minus occupancy-estimated covered area. Requires at
// least 3 points; `resolution` <= typical sample spacing keeps the estimate
// meaningful (0 picks hull-diagonal/96).
HullDeficiencyResult hull_deficiency(std::span<const Point> sample, double resolution = 0.0);

// Canonical fingerprint: hash of vertices quantized at 1e-9 starting from the
// lexicographically smallest vertex. Equal sets built by identical clip
// pipelines fingerprint equal.
std::uint64_t fingerprint(const ConvexRegion& t);

// --- set differences -------------------------------------------------------

// Closed difference outer \ int(inner), inner ⊆ outer convex (or empty).
// Pure convex sets have an empty inner.
class Region {
 public:
  Region() = default;
  explicit Region(ConvexRegion outer) : outer_(std::move(outer)) {}
  Region(ConvexRegion outer, ConvexRegion inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}

  static Region empty_region() { return Region(); }

  bool empty() const { return area() <= kEpsArea; }
  bool pure_convex() const { return inner_.empty(); }
  double area() const { return std::max(0.0, outer_.area() - inner_.area()); }
  const ConvexRegion& outer() const { return outer_; }
  const ConvexRegion& inner() const { return inner_; }

  bool contains(Point p, double tol = kEpsGeom) const {
    if (!outer_.contains(p, tol)) return false;
    if (inner_.empty()) return true;
    return !inner_.contains(p, -tol);  // strictly interior points are removed
  }

  // Boundary-aware samples: outer boundary outside inner, inner boundary
  // inside outer.
  std::vector<Point> boundary_samples(double step) const;
  double diameter() const;
  std::pair<Point, Point> bbox() const { return outer_.bbox(); }

 private:
  ConvexRegion outer_;
  ConvexRegion inner_;
};

// Sampled infimum distance between closed differences (+inf when empty).
double separation(const Region& r, const Region& s, double sample_step = 0.01);
bool regions_equal(const Region& a, const Region& b, double tol = 1e-7);
std::uint64_t fingerprint(const Region& r);

}  // namespace peanofill
