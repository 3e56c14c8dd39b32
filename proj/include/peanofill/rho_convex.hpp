#pragma once
// Strict-convexity machinery: support balls and caps, membership in the
// rho-convex family over a fixed normalized domain, and bows (radius-rho
// arcs whose diameter equals the chord).
//
// With d(domain) <= 1 <= rho, a radius-rho circle meets the domain in a
// single short arc (any two domain points subtend an angle <= 1 radian at
// the circle center), so the domain splits into at most two pieces and the
// piece on the ball side is exactly the disc clip. The cap construction
// relies on this throughout.

#include <optional>
#include <vector>

#include "peanofill/geometry.hpp"

namespace peanofill {

struct RhoFamily {
  double rho = 1.0;          // >= 1
  ConvexRegion domain;       // normalized: diameter <= 1
  int n_arc = kDefaultArcSegments;

  double sagitta() const { return rho * (1.0 - std::cos(M_PI / n_arc)); }
};

RhoFamily make_rho_family(double rho, ConvexRegion domain, int n_arc = kDefaultArcSegments);

struct Cap {
  ConvexRegion region;   // domain minus the witness-side component
  Disc source_ball;
  Point witness;
  Point contact;         // tangency point on the support set
};

// Ball of radius fam.rho tangent to s at the minimal-distance projection of
// x, lying on the far side from x; cap = domain clipped to the ball side.
// Requires x in domain \ s (and off the boundary of s).
Cap support_cap(const ConvexRegion& s, const Point& x, const RhoFamily& fam);

// Same construction for a single contact point y (the support set {y}).
Cap cap_from_contact(const Point& y, const Point& x, const RhoFamily& fam);

// Local rho-convexity at a boundary point: some radius-rho ball through x
// contains t near x (within the family's arc tolerance).
bool is_rho_convex_at(const ConvexRegion& t, const Point& x, const RhoFamily& fam);

struct FRhoReport {
  bool pass = true;
  int samples_used = 0;
  double worst_violation = 0.0;
  std::optional<Point> witness;  // exterior sample that exposed the failure
  double tol = 0.0;
};

// Theorem-style membership test: for sampled exterior points x the support
// cap of t must contain t. Deterministic for a fixed seed.
FRhoReport check_F_rho(const ConvexRegion& t, const RhoFamily& fam, int n_samples = 200,
                       std::uint64_t seed = 1);

// Minor arc of a radius-rho circle through x and y, bulging toward `side`
// (relative to the direction x -> y). Throws on coincident endpoints or a
// chord longer than (or equal to, the semicircle case) 2*rho.
enum class BowSide { Left, Right };
std::vector<Point> bow(const Point& x, const Point& y, const RhoFamily& fam, BowSide side);

}  // namespace peanofill
