#pragma once
// Curve evaluation over a built partition stack: f(u) with a certified
// error radius, interval images, and uniform sampling.

#include "peanofill/construction.hpp"

namespace peanofill {

struct CurvePartition {
  std::vector<PartitionLevel> levels;
  ConvexRegion domain;            // normalized frame
  FrameTransform transform;       // maps normalized points back to the input frame
};

struct CurvePoint {
  Point point;          // in the original frame
  double error_radius;  // cell diameter in the original frame
};

// Cell index K(j) for a parameter u (1-based, boundary goes to the left cell
// except at u = 0).
long long cell_index(const CurvePartition& cp, double u, int j);

// Centroid of the depth-j cell containing u, with its certified radius.
CurvePoint eval_f(const CurvePartition& cp, double u, int j);

struct CurveImage {
  ConvexRegion region;  // certified-convex cover of f([a,b]) at level j
  ConvexRegion inner;   // union of cells with intervals strictly inside (a,b)
  int covering_cells = 0;
  int collar_cells = 0;  // boundary cells beyond the strict interior (<= 2)
  double hull_deficiency = 0.0;
};

CurveImage image_of_interval(const CurvePartition& cp, double a, double b, int j);

// f on a uniform grid of n parameters, in the original frame.
std::vector<Point> sample_curve(const CurvePartition& cp, int n, int j);

}  // namespace peanofill
