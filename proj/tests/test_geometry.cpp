#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "peanofill/geometry.hpp"

using namespace peanofill;

namespace {

ConvexRegion unit_square() { return ConvexRegion::rectangle(0, 0, 1, 1); }

ConvexRegion random_convex(std::mt19937_64& rng, double scale = 1.0, Point center = {0, 0}) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Point> pts;
  for (int i = 0; i < 14; ++i) pts.push_back({center.x + scale * u(rng), center.y + scale * u(rng)});
  return ConvexRegion::hull_of(pts);
}

// Boundary plus interior grid samples, dense enough for the occupancy
// estimator inside hull_deficiency.
void area_samples(const ConvexRegion& r, double step, std::vector<Point>& out) {
  for (const Point& p : r.boundary_samples(step)) out.push_back(p);
  auto [lo, hi] = r.bbox();
  for (double x = lo.x; x <= hi.x + step / 2; x += step)
    for (double y = lo.y; y <= hi.y + step / 2; y += step)
      if (r.contains({x, y}, 0.0)) out.push_back({x, y});
}

}  // namespace

TEST_CASE("normalize_domain scales a large square into the frame") {
  ConvexRegion big = ConvexRegion::rectangle(0, 0, 4, 4);
  auto [norm, back] = normalize_domain(big);
  CHECK(norm.diameter() <= 1.0 + 1e-12);
  CHECK(norm.extent_x() <= 1.0 / std::sqrt(2.0) + 1e-9);
  auto [lo, hi] = norm.bbox();
  CHECK(lo.x >= -1.0);
  CHECK(hi.x <= 1.0);
  CHECK(lo.y >= -1.0);
  CHECK(hi.y <= 1.0);
  // Round-trip onto the original.
  ConvexRegion round = apply_transform(norm, back);
  CHECK(hausdorff(round, big) < 1e-9);
}

TEST_CASE("normalize_domain leaves a small centered triangle nearly unchanged") {
  ConvexRegion tri = ConvexRegion::from_ccw({{-0.2, -0.1}, {0.3, -0.1}, {0.0, 0.2}});
  auto [norm, back] = normalize_domain(tri);
  CHECK(back.scale == doctest::Approx(1.0));
  CHECK(hausdorff(apply_transform(norm, back), tri) < 1e-12);
}

TEST_CASE("normalize_domain rejects degenerate input") {
  ConvexRegion seg = ConvexRegion::from_ccw({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(normalize_domain(seg), std::invalid_argument);
  CHECK_THROWS_AS(normalize_domain(ConvexRegion()), std::invalid_argument);
}

TEST_CASE("clip_halfplane basics") {
  ConvexRegion sq = unit_square();
  ConvexRegion left = clip_halfplane(sq, Axis::X, 0.5, Sense::LessEq);
  CHECK(left.area() == doctest::Approx(0.5));
  CHECK(left.extent_x() == doctest::Approx(0.5));
  CHECK(hausdorff(clip_halfplane(sq, Axis::X, 2.0, Sense::LessEq), sq) < 1e-12);
  CHECK(clip_halfplane(sq, Axis::X, 2.0, Sense::GreaterEq).empty());
}

TEST_CASE("clip_disc covers the trivial cases") {
  ConvexRegion sq = unit_square();
  CHECK(hausdorff(clip_disc(sq, {{0, 0}, 10.0}), sq) < 1e-12);
  CHECK(clip_disc(sq, {{5, 5}, 0.5}).empty());
  CHECK_THROWS_AS(clip_disc(sq, {{0, 0}, 1.0}, 4), std::invalid_argument);
}

TEST_CASE("clip_disc area approaches the true disc area as n_arc grows") {
  ConvexRegion sq = ConvexRegion::rectangle(-1, -1, 1, 1);
  double r = 0.5;
  double exact = M_PI * r * r;
  double prev_err = 1.0;
  for (int n : {16, 32, 64, 128}) {
    ConvexRegion c = clip_disc(sq, {{0, 0}, r}, n);
    double err = exact - c.area();
    CHECK(err >= -1e-12);  // inscribed: result area never exceeds the disc's
    CHECK(err < prev_err);
    // Inscribed n-gon area identity.
    double ngon = 0.5 * n * r * r * std::sin(2 * M_PI / n);
    CHECK(c.area() == doctest::Approx(ngon).epsilon(1e-9));
    prev_err = err;
  }
  // Hausdorff bound from the sagitta.
  ConvexRegion c64 = clip_disc(sq, {{0, 0}, r}, 64);
  ConvexRegion fine = clip_disc(sq, {{0, 0}, r}, 1024);
  CHECK(hausdorff(c64, fine) <= r * (1 - std::cos(M_PI / 64)) + 1e-9);
}

TEST_CASE("extent modes") {
  ConvexRegion r = ConvexRegion::rectangle(0, 0, 0.7, 0.1);
  CHECK(extent(r, ExtentMode::X) == doctest::Approx(0.7));
  CHECK(extent(r, ExtentMode::Y) == doctest::Approx(0.1));
  CHECK(extent(r, ExtentMode::Diameter) == doctest::Approx(std::sqrt(0.49 + 0.01)));
  CHECK_THROWS_AS(extent(ConvexRegion(), ExtentMode::X), std::invalid_argument);
}

TEST_CASE("separation distances and the empty sentinel") {
  ConvexRegion a = unit_square();
  ConvexRegion b = ConvexRegion::rectangle(2, 0, 3, 1);
  CHECK(separation(a, b) == doctest::Approx(1.0));
  ConvexRegion c = ConvexRegion::rectangle(0.5, 0.5, 1.5, 1.5);
  CHECK(separation(a, c) == 0.0);
  CHECK(separation(a, ConvexRegion()) == kInfDist);
  CHECK(separation(a, b) == separation(b, a));
}

TEST_CASE("separation lower-bounds sampled pair distances") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    ConvexRegion a = random_convex(rng, 0.5, {-0.6, 0});
    ConvexRegion b = random_convex(rng, 0.5, {0.6, 0});
    if (a.empty() || b.empty()) continue;
    double s = separation(a, b);
    for (const Point& p : a.boundary_samples(0.05))
      for (const Point& q : b.boundary_samples(0.05)) CHECK(s <= dist(p, q) + 1e-12);
  }
}

TEST_CASE("min_dist_projection") {
  ConvexRegion sq = unit_square();
  Point p1 = min_dist_projection(sq, {2, 0.5});
  CHECK(p1.x == doctest::Approx(1.0));
  CHECK(p1.y == doctest::Approx(0.5));
  Point p2 = min_dist_projection(sq, {2, 2});
  CHECK(p2.x == doctest::Approx(1.0));
  CHECK(p2.y == doctest::Approx(1.0));
  ConvexRegion disc = clip_disc(ConvexRegion::rectangle(-2, -2, 2, 2), {{0, 0}, 1.0});
  Point p3 = min_dist_projection(disc, {2, 0});
  CHECK(dist(p3, {1, 0}) < 2e-3);  // within arc tolerance
  CHECK_THROWS_AS(min_dist_projection(sq, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("apply_transform involutions and extent bookkeeping") {
  ConvexRegion r = ConvexRegion::rectangle(0, 0, 2, 1);
  ConvexRegion back = apply_transform(apply_transform(r, FrameTransform::negate_x()),
                                      FrameTransform::negate_x());
  CHECK(hausdorff(back, r) < 1e-12);
  ConvexRegion sw = apply_transform(r, FrameTransform::swap_xy());
  CHECK(sw.extent_x() == doctest::Approx(r.extent_y()));
  CHECK(sw.extent_y() == doctest::Approx(r.extent_x()));
  ConvexRegion same = apply_transform(r, FrameTransform::identity());
  CHECK(hausdorff(same, r) == 0.0);
}

TEST_CASE("hull_deficiency separates convex from non-convex samples") {
  // Dense triangle sample: deficiency ~ 0.
  std::vector<Point> tri;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; i + j <= 40; ++j) tri.push_back({i / 40.0, j / 40.0});
  auto r1 = hull_deficiency(tri);
  CHECK(!r1.degenerate);
  CHECK(r1.value < 5e-3);

  // L-shaped union: strictly positive.
  std::vector<Point> ell;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      double x = i / 40.0, y = j / 40.0;
      if (x <= 0.5 || y <= 0.5) ell.push_back({x, y});
    }
  auto r2 = hull_deficiency(ell);
  CHECK(r2.value > 0.05);

  // Collinear points: degenerate flag, zero deficiency.
  std::vector<Point> col{{0, 0}, {0.5, 0.5}, {1, 1}};
  auto r3 = hull_deficiency(col);
  CHECK(r3.degenerate);
  CHECK(r3.value == 0.0);
  CHECK_THROWS_AS(hull_deficiency(std::vector<Point>{{0, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("clip operations are monotone") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    ConvexRegion outer = random_convex(rng, 1.0);
    if (outer.empty()) continue;
    ConvexRegion innerr = clip_disc(outer, {{outer.centroid()}, 0.3});
    Disc d{{0.1, 0.0}, 0.45};
    ConvexRegion co = clip_disc(outer, d);
    ConvexRegion ci = clip_disc(innerr, d);
    // ci ⊆ co and co ⊆ outer.
    for (const Point& p : ci.vertices()) CHECK(co.contains(p, 1e-7));
    for (const Point& p : co.vertices()) CHECK(outer.contains(p, 1e-7));
    ConvexRegion h = clip_halfplane(outer, Axis::Y, 0.1, Sense::LessEq);
    for (const Point& p : h.vertices()) CHECK(outer.contains(p, 1e-9));
  }
}

TEST_CASE("lemma 3.1.8 style oracle on constructed pairs") {
  // Pairs with separated differences and nonempty intersection: the union is
  // convex. 500 seeded cases via overlapping clips of a common region.
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int it = 0; it < 700 && checked < 500; ++it) {
    ConvexRegion base = random_convex(rng, 1.2);
    if (base.empty() || base.extent_x() < 0.4) continue;
    auto [lo, hi] = base.bbox();
    double a = lo.x + (0.25 + 0.2 * u(rng)) * (hi.x - lo.x);
    double b = lo.x + (0.55 + 0.2 * u(rng)) * (hi.x - lo.x);
    ConvexRegion t = clip_halfplane(base, Axis::X, b, Sense::LessEq);
    ConvexRegion tbar = clip_halfplane(base, Axis::X, a, Sense::GreaterEq);
    if (t.empty() || tbar.empty()) continue;
    // Preconditions: differences separated, intersection nonempty.
    ConvexRegion diff1 = clip_halfplane(base, Axis::X, a, Sense::LessEq);
    ConvexRegion diff2 = clip_halfplane(base, Axis::X, b, Sense::GreaterEq);
    if (!diff1.empty() && !diff2.empty() && separation(diff1, diff2) <= kEpsSep) continue;
    if (separation(t, tbar) != 0.0) continue;
    ++checked;
    std::vector<Point> sample;
    area_samples(t, 0.02, sample);
    area_samples(tbar, 0.02, sample);
    auto hd = hull_deficiency(sample, 0.03);
    CHECK(hd.value <= 1e-3 * base.area() + 1e-9);
  }
  CHECK(checked == 500);
}

TEST_CASE("fingerprints are stable under vertex rotation") {
  ConvexRegion a = ConvexRegion::from_ccw({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ConvexRegion b = ConvexRegion::from_ccw({{1, 1}, {0, 1}, {0, 0}, {1, 0}});
  CHECK(fingerprint(a) == fingerprint(b));
  ConvexRegion c = ConvexRegion::from_ccw({{0, 0}, {1, 0}, {1, 1}, {0, 1.0000001}});
  CHECK(fingerprint(a) != fingerprint(c));
}

TEST_CASE("Region differences behave as closed crescents") {
  ConvexRegion outer = unit_square();
  ConvexRegion inner = ConvexRegion::rectangle(0, 0, 0.5, 1.0);
  Region crescent(outer, inner);
  CHECK(crescent.area() == doctest::Approx(0.5));
  CHECK(crescent.contains({0.75, 0.5}));
  CHECK(crescent.contains({0.5, 0.5}));   // shared boundary stays in the closure
  CHECK(!crescent.contains({0.25, 0.5}, -1e-9));
  CHECK(crescent.diameter() > 1.0);
  Region empty_r;
  CHECK(separation(empty_r, crescent) == kInfDist);
  Region far(ConvexRegion::rectangle(3, 0, 4, 1));
  double s = separation(crescent, far);
  CHECK(s == doctest::Approx(2.0).epsilon(0.02));
}
