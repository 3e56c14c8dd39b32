#include "peanofill/offspring.hpp"

#include <algorithm>
#include <cmath>

namespace peanofill {

namespace {

// Canonical polygon for a closed convex set difference outer \ int(inner),
// when that difference happens to be convex (single dividing edge). Returns
// an empty optional otherwise.
std::optional<ConvexRegion> convex_difference_exact(const ConvexRegion& outer,
                                                    const ConvexRegion& inner) {
  if (inner.empty()) return outer;
  ConvexRegion common = intersect(outer, inner);
  double want = outer.area() - common.area();
  if (want <= kEpsArea) return ConvexRegion();
  const auto& v = inner.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    Point n{q.y - p.y, p.x - q.x};  // inward normal of the CCW edge
    double nn = norm(n);
    if (nn <= 1e-15) continue;
    // Keep the side away from the inner region.
    ConvexRegion cand = clip_halfplane(outer, {-n.x / nn, -n.y / nn}, -dot(n, p) / nn);
    if (std::abs(cand.area() - want) <= 1e-9 + 1e-6 * want) return cand;
  }
  return std::nullopt;
}

std::uint64_t set_fingerprint(const Region& r) {
  if (r.empty()) return 0;
  if (r.pure_convex()) return fingerprint(r.outer());
  auto exact = convex_difference_exact(r.outer(), r.inner());
  if (exact.has_value() && !exact->empty()) return fingerprint(*exact);
  return fingerprint(r);
}

Region clip_region_sweep(const Region& r, double position, double rho, int n_arc) {
  if (r.empty()) return Region();
  ConvexRegion o = sweep_clip(r.outer(), position, rho, n_arc);
  if (o.area() <= kEpsArea) return Region();
  if (r.pure_convex()) return Region(std::move(o));
  ConvexRegion in = sweep_clip(r.inner(), position, rho, n_arc);
  Region out = in.empty() ? Region(std::move(o)) : Region(std::move(o), std::move(in));
  return out.empty() ? Region() : out;
}

ConvexRegion swap_convex(const ConvexRegion& c) {
  return apply_transform(c, FrameTransform::swap_xy());
}

}  // namespace

Soul swap_soul(const Soul& s) {
  return Soul::with_remainder(swap_convex(s.base()), swap_convex(s.remainder()));
}

Region swap_region(const Region& r) {
  if (r.empty()) return Region();
  if (r.pure_convex()) return Region(swap_convex(r.outer()));
  return Region(swap_convex(r.outer()), swap_convex(r.inner()));
}

// --- stretches ---------------------------------------------------------------

void StretchMap::validate() const {
  if (static_cast<int>(targets.size()) != target_len || target_len < source_len ||
      source_len < 1) {
    throw std::invalid_argument("stretch map: inconsistent lengths");
  }
  int prev = 0;
  std::vector<char> hit(static_cast<std::size_t>(source_len) + 1, 0);
  for (int k : targets) {
    if (k < prev || k < 1 || k > source_len) {
      throw std::invalid_argument("stretch map: not nondecreasing in range");
    }
    // Surjectivity requires unit steps.
    if (k > prev + 1) throw std::invalid_argument("stretch map: skips a source index");
    hit[static_cast<std::size_t>(k)] = 1;
    prev = k;
  }
  for (int i = 1; i <= source_len; ++i) {
    if (!hit[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("stretch map: not surjective");
    }
  }
}

StretchMap StretchMap::identity(int n) {
  StretchMap m;
  m.source_len = n;
  m.target_len = n;
  m.targets.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.targets[static_cast<std::size_t>(i)] = i + 1;
  return m;
}

StretchMap StretchMap::repeat_index(int n, int index, int extra) {
  if (index < 1 || index > n || extra < 0) {
    throw std::invalid_argument("repeat_index: bad arguments");
  }
  StretchMap m;
  m.source_len = n;
  m.target_len = n + extra;
  for (int i = 1; i <= index; ++i) m.targets.push_back(i);
  for (int e = 0; e < extra; ++e) m.targets.push_back(index);
  for (int i = index + 1; i <= n; ++i) m.targets.push_back(i);
  return m;
}

SetSequence stretch(const SetSequence& seq, const StretchMap& map) {
  return SetSequence(stretch(seq.entries, map));
}

std::pair<StretchMap, StretchMap> merge_skeletons(const Skeleton& chi, const Skeleton& psi,
                                                  double gamma) {
  int m = static_cast<int>(chi.length());
  int n = static_cast<int>(psi.length());
  if (m < 1 || n < 1) throw std::invalid_argument("merge_skeletons: empty skeleton");
  const double slack = 1e-9;
  if (std::abs(chi.front() - psi.front()) > gamma + slack ||
      std::abs(chi.back() - psi.back()) > gamma + slack) {
    throw std::invalid_argument("merge_skeletons: endpoint gap exceeds gamma");
  }
  std::vector<int> ai, aj;
  int i = m, j = n;
  while (i + j > 2) {
    ai.push_back(i);
    aj.push_back(j);
    if (i == 1) {
      --j;
    } else if (j == 1) {
      --i;
    } else if (chi.chi[static_cast<std::size_t>(i - 1)] >=
               psi.chi[static_cast<std::size_t>(j - 1)]) {
      --i;
    } else {
      --j;
    }
  }
  ai.push_back(1);
  aj.push_back(1);
  ai.push_back(1);
  aj.push_back(1);
  std::reverse(ai.begin(), ai.end());
  std::reverse(aj.begin(), aj.end());
  StretchMap ma{std::move(ai), m, m + n};
  StretchMap mb{std::move(aj), n, m + n};
  ma.validate();
  mb.validate();
  return {ma, mb};
}

OffspringParams make_offspring_params(const NetParams& net, Axis axis) {
  OffspringParams p;
  p.net = net;
  p.axis = axis;
  p.m_prime = 2 * (2 * net.n1 + net.n_star);
  return p;
}

// --- pipeline stages -----------------------------------------------------------

AlignedSequences align_net_antinet(const Soul& soul, const Net& plus, const Net& minus,
                                   const OffspringParams& params) {
  (void)soul;
  auto [map_plus, map_minus] = merge_skeletons(plus.skeleton, minus.skeleton, params.net.gamma);
  AlignedSequences out;
  out.net = stretch(plus.stages, map_plus);
  out.chi_plus = stretch(plus.skeleton.chi, map_plus);
  out.net_positions = stretch(plus.positions, map_plus);
  out.anti = stretch(minus.stages, map_minus);
  out.chi_minus = stretch(minus.skeleton.chi, map_minus);
  out.anti_positions = stretch(minus.positions, map_minus);
  double gap = 0.0;
  for (std::size_t k = 0; k < out.chi_plus.size(); ++k) {
    gap = std::max(gap, std::abs(out.chi_plus[k] - out.chi_minus[k]));
  }
  out.skeleton_gap = gap;
  return out;
}

StationInsertion insert_station(const AlignedSequences& aligned, const Station& station,
                                const Soul& soul, const OffspringParams& params) {
  StationInsertion out;
  const int L = static_cast<int>(aligned.net.size());
  const int n_star = static_cast<int>(params.net.n_star);
  const double gamma = params.net.gamma;
  Region t1 = soul.disturbance();

  if (t1.empty()) {
    out.l0 = 1;
    StretchMap pad = StretchMap::repeat_index(L, 1, n_star);
    out.net = stretch(aligned.net, pad);
    out.anti = stretch(aligned.anti, pad);
    out.chi_minus = stretch(aligned.chi_minus, pad);
    out.net_positions = stretch(aligned.net_positions, pad);
    out.station.assign(static_cast<std::size_t>(L + n_star), Region());
    return out;
  }

  auto [t1lo, t1hi] = t1.bbox();
  int l0 = -1;
  for (int l = 1; l <= L; ++l) {
    if (t1hi.x <= aligned.chi_minus[static_cast<std::size_t>(l - 1)] + gamma + 1e-9) {
      l0 = l;
      break;
    }
  }
  if (l0 < 0) {
    throw std::logic_error("insert_station: no band admits the disturbance");
  }
  bool faithful = t1lo.x >= aligned.chi_minus[static_cast<std::size_t>(l0 - 1)] - gamma - 1e-9;

  if (faithful) {
    out.l0 = l0;
    StretchMap pad = StretchMap::repeat_index(L, l0, n_star);
    out.net = stretch(aligned.net, pad);
    out.anti = stretch(aligned.anti, pad);
    out.chi_minus = stretch(aligned.chi_minus, pad);
    out.net_positions = stretch(aligned.net_positions, pad);
    out.station.reserve(static_cast<std::size_t>(L + n_star));
    for (int k = 0; k < l0; ++k) out.station.emplace_back();
    for (const Region& piece : station.stages) out.station.push_back(piece);
    for (int k = l0 + n_star; k < L + n_star; ++k) out.station.push_back(t1);
    if (static_cast<int>(out.station.size()) != L + n_star) {
      throw std::logic_error("insert_station: length bookkeeping failed");
    }
    return out;
  }

  // Distributed insertion: the disturbance spans the sweep axis, so its
  // pieces ride one position behind the net clips.
  out.spread = true;
  out.l0 = l0;
  StretchMap pad = StretchMap::repeat_index(L, L, n_star);
  out.net = stretch(aligned.net, pad);
  out.anti = stretch(aligned.anti, pad);
  out.chi_minus = stretch(aligned.chi_minus, pad);
  out.net_positions = stretch(aligned.net_positions, pad);
  std::size_t n_hat = out.net.size();
  out.station.assign(n_hat, Region());
  for (std::size_t k = 1; k + 1 < n_hat; ++k) {
    out.station[k] =
        clip_region_sweep(t1, out.net_positions[k - 1], params.net.rho_net, kDefaultArcSegments);
  }
  out.station[n_hat - 1] = t1;
  return out;
}

OffspringResult combine_and_intersect(const StationInsertion& quintuple, const Soul& soul,
                                      const OffspringParams& params) {
  OffspringResult res;
  res.quintuple = quintuple;
  res.spread_station = quintuple.spread;
  const std::size_t n_hat = quintuple.net.size();
  res.n_hat = static_cast<long long>(n_hat);
  const std::uint64_t fp_base = fingerprint(soul.base());
  const std::uint64_t fp_t1 = fingerprint(soul.disturbance());

  // t# = station ⊕ stretched net, realized structurally.
  std::vector<ConvexRegion> sharp(n_hat);
  for (std::size_t k = 0; k < n_hat; ++k) {
    const Region& piece = quintuple.station[k];
    if (piece.empty()) {
      sharp[k] = quintuple.net[k];
      continue;
    }
    if (fingerprint(piece) == fp_t1) {
      // Full disturbance on board: the sweep clip of the whole base.
      sharp[k] = sweep_clip(soul.base(), quintuple.net_positions[k], params.net.rho_net,
                            kDefaultArcSegments);
      continue;
    }
    std::vector<Point> pts = quintuple.net[k].vertices();
    for (const Point& p : piece.boundary_samples(0.01)) pts.push_back(p);
    sharp[k] = ConvexRegion::hull_of(pts);
  }
  sharp.back() = soul.base();  // station and net both end full

  // Cells: t#(l) ∩ anti(l), with object reuse for the shared identities.
  res.cells.resize(n_hat);
  for (std::size_t k = 0; k < n_hat; ++k) {
    const ConvexRegion& a = quintuple.anti[k];
    if (fingerprint(a) == fp_base) {
      res.cells[k] = sharp[k];
    } else if (fingerprint(sharp[k]) == fp_base) {
      res.cells[k] = a;
    } else {
      res.cells[k] = intersect(sharp[k], a);
    }
    if (res.cells[k].empty()) {
      throw std::runtime_error("combine_and_intersect: empty cell produced");
    }
  }

  // Doubled souls with shared adjacent intersections.
  std::vector<ConvexRegion> inner(n_hat);
  std::vector<std::uint64_t> cell_fp(n_hat);
  for (std::size_t k = 0; k < n_hat; ++k) cell_fp[k] = fingerprint(res.cells[k]);
  for (std::size_t k = 1; k < n_hat; ++k) {
    inner[k] = (cell_fp[k] == cell_fp[k - 1]) ? res.cells[k]
                                              : intersect(res.cells[k], res.cells[k - 1]);
  }
  res.souls.souls.reserve(2 * n_hat);
  for (std::size_t k = 0; k < n_hat; ++k) {
    const ConvexRegion& cell = res.cells[k];
    ConvexRegion rem_odd = (k == 0) ? cell : inner[k];
    ConvexRegion rem_even = (k + 1 < n_hat) ? inner[k + 1] : cell;
    res.souls.souls.push_back(Soul::with_remainder(cell, rem_odd));
    res.souls.souls.push_back(Soul::with_remainder(cell, rem_even));
  }
  if (static_cast<long long>(res.souls.length()) != params.m_prime) {
    throw std::logic_error("combine_and_intersect: offspring length != m'");
  }
  for (const Soul& s : res.souls.souls) {
    Region d = s.disturbance();
    if (d.empty()) continue;
    res.max_disturbance_diameter = std::max(res.max_disturbance_diameter, d.diameter());
    auto [dlo, dhi] = d.bbox();
    res.max_disturbance_axis_extent =
        std::max(res.max_disturbance_axis_extent, dhi.x - dlo.x);
  }
  return res;
}

// --- builder ---------------------------------------------------------------------

OffspringBuilder::OffspringBuilder(OffspringParams params, RhoFamily fam)
    : params_(std::move(params)), fam_work_(std::move(fam)) {
  if (params_.axis == Axis::Y) {
    fam_work_.domain = swap_convex(fam_work_.domain);
  }
}

const Net& OffspringBuilder::net_for(const ConvexRegion& remainder) {
  std::uint64_t key = fingerprint(remainder);
  auto it = net_cache_.find(key);
  if (it != net_cache_.end()) return it->second;
  Net net = build_net_alpha(remainder, params_.net, fam_work_);
  return net_cache_.emplace(key, std::move(net)).first->second;
}

const Net& OffspringBuilder::anti_for(const ConvexRegion& base) {
  std::uint64_t key = fingerprint(base);
  auto it = anti_cache_.find(key);
  if (it != anti_cache_.end()) return it->second;
  Net net = build_anti_net(base, params_.net, fam_work_);
  return anti_cache_.emplace(key, std::move(net)).first->second;
}

const Station& OffspringBuilder::station_for(const ConvexRegion& base,
                                             const ConvexRegion& remainder) {
  std::uint64_t key = set_fingerprint(Region(base, remainder));
  auto it = station_cache_.find(key);
  if (it != station_cache_.end()) return it->second;
  Station st = build_station(base, remainder, params_.net, fam_work_);
  return station_cache_.emplace(key, std::move(st)).first->second;
}

OffspringResult OffspringBuilder::make_x(const Soul& soul) {
  const Net& plus = net_for(soul.remainder());
  const Net& minus = anti_for(soul.base());
  AlignedSequences aligned = align_net_antinet(soul, plus, minus, params_);
  Region t1 = soul.disturbance();
  Station st;
  if (!t1.empty()) {
    auto [t1lo, t1hi] = t1.bbox();
    // Station construction pays off only on the banded path.
    bool banded = (t1hi.x - t1lo.x) <= 2.0 * params_.net.gamma + 1e-9;
    if (banded) st = station_for(soul.base(), soul.remainder());
  }
  StationInsertion ins = insert_station(aligned, st, soul, params_);
  return combine_and_intersect(ins, soul, params_);
}

OffspringResult OffspringBuilder::make_offspring(const Soul& soul) {
  if (params_.axis == Axis::X) return make_x(soul);
  OffspringResult res = make_x(swap_soul(soul));
  for (ConvexRegion& c : res.cells) c = swap_convex(c);
  for (Soul& s : res.souls.souls) s = swap_soul(s);
  return res;
}

}  // namespace peanofill
