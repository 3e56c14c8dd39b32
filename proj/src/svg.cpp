#include "peanofill/svg.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace peanofill {

namespace {

const char* kLevelColors[] = {"#4878a8", "#a85048", "#58a868", "#a08030", "#7858a8", "#48a0a0"};

void emit_poly(std::ostringstream& os, const ConvexRegion& r, const char* color, double opacity) {
  if (r.vertices().empty()) return;
  os << "<path d=\"M";
  bool first = true;
  for (const Point& p : r.vertices()) {
    if (!first) os << " L";
    os << p.x << ' ' << -p.y;  // flip y so the frame reads math-style
    first = false;
  }
  os << " Z\" fill=\"" << color << "\" fill-opacity=\"" << opacity
     << "\" stroke=\"#203040\" stroke-opacity=\"0.35\" stroke-width=\"0.002\"/>\n";
}

}  // namespace

std::string render_svg(const CurvePartition& cp, const SvgOptions& opts) {
  if (opts.level > 0 && static_cast<std::size_t>(opts.level) > cp.levels.size()) {
    throw std::out_of_range("render_svg: level beyond built depth");
  }
  std::ostringstream os;
  os << std::setprecision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.pixels << "\" height=\""
     << opts.pixels << "\" viewBox=\"-1 -1 2 2\">\n";
  os << "<rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"#fbfaf6\"/>\n";
  int from = (opts.level > 0) ? opts.level : 1;
  int to = (opts.level > 0) ? opts.level : static_cast<int>(cp.levels.size());
  for (int j = from; j <= to; ++j) {
    const PartitionLevel& lvl = cp.levels[static_cast<std::size_t>(j - 1)];
    double opacity = 0.10 + 0.12 * j / std::max<std::size_t>(cp.levels.size(), 1);
    os << "<g id=\"level-" << j << "\">\n";
    const char* color = kLevelColors[(j - 1) % 6];
    for (const Soul& s : lvl.souls.souls) emit_poly(os, s.base(), color, opacity);
    os << "</g>\n";
  }
  if (opts.curve_samples >= 2) {
    int j = opts.curve_level > 0 ? opts.curve_level : static_cast<int>(cp.levels.size());
    auto pts = sample_curve(cp, opts.curve_samples, j);
    os << "<path d=\"M";
    bool first = true;
    for (const Point& raw : pts) {
      Point p = cp.transform.apply_inverse(raw);  // back to the normalized frame
      if (!first) os << " L";
      os << p.x << ' ' << -p.y;
      first = false;
    }
    os << "\" fill=\"none\" stroke=\"#c03020\" stroke-width=\"0.004\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void save_svg(const CurvePartition& cp, const SvgOptions& opts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << render_svg(cp, opts);
}

}  // namespace peanofill
