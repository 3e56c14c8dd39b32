#pragma once
// SVG emitter: one group per level with opacity by depth, optional curve
// polyline. Deterministic output for fixed inputs.

#include <string>

#include "peanofill/curve.hpp"

namespace peanofill {

struct SvgOptions {
  int level = -1;          // -1 = all levels
  int curve_samples = 0;   // 0 = no polyline
  int curve_level = 0;     // 0 = deepest
  int pixels = 800;
};

std::string render_svg(const CurvePartition& cp, const SvgOptions& opts);
void save_svg(const CurvePartition& cp, const SvgOptions& opts, const std::string& path);

}  // namespace peanofill
