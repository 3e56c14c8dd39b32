#include "peanofill/seq_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace peanofill {

namespace {

constexpr double kSampleStep = 0.01;

bool bbox_gap_exceeds(const Region& a, const Region& b, double gap) {
  if (a.empty() || b.empty()) return true;
  auto [alo, ahi] = a.bbox();
  auto [blo, bhi] = b.bbox();
  double gx = std::max({blo.x - ahi.x, alo.x - bhi.x, 0.0});
  double gy = std::max({blo.y - ahi.y, alo.y - bhi.y, 0.0});
  return std::hypot(gx, gy) > gap;
}

bool region_subset_of_union(const Region& q, const SetSequence& s, std::size_t from1,
                            std::size_t to1, double tol) {
  if (q.empty()) return true;
  if (from1 > to1) return false;
  auto samples = q.boundary_samples(kSampleStep);
  for (const Point& p : samples) {
    bool covered = false;
    for (std::size_t i = from1; i <= to1 && !covered; ++i) {
      covered = s.at1(i).contains(p, tol);
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<int> nonempty_indices(const SetSequence& s) {
  std::vector<int> idx;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    if (!s.at1(i).empty()) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

// Nonempty subsequence with fingerprints, for the embed/equiv relations.
struct NonemptyTrace {
  std::vector<int> positions;
  std::vector<const Region*> entries;
};

NonemptyTrace trace_of(const SetSequence& s) {
  NonemptyTrace t;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    if (!s.at1(i).empty()) {
      t.positions.push_back(static_cast<int>(i));
      t.entries.push_back(&s.at1(i));
    }
  }
  return t;
}

bool traces_equal(const NonemptyTrace& a, const NonemptyTrace& b, double tol, bool reverse_b) {
  if (a.entries.size() != b.entries.size()) return false;
  std::size_t n = a.entries.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Region& ra = *a.entries[i];
    const Region& rb = *b.entries[reverse_b ? n - 1 - i : i];
    if (fingerprint(ra) == fingerprint(rb) && fingerprint(ra) != 0) continue;
    if (!regions_equal(ra, rb, tol)) return false;
  }
  return true;
}

}  // namespace

// --- Soul -------------------------------------------------------------------

Soul Soul::whole(ConvexRegion base) {
  Soul s;
  s.remainder_ = base;
  s.base_ = std::move(base);
  return s;
}

Soul Soul::with_remainder(ConvexRegion base, ConvexRegion remainder) {
  Soul s;
  s.base_ = std::move(base);
  s.remainder_ = std::move(remainder);
  return s;
}

bool Soul::disturbance_empty() const {
  return std::abs(base_.area() - remainder_.area()) <= kEpsArea ||
         fingerprint(base_) == fingerprint(remainder_);
}

Region Soul::disturbance() const {
  if (disturbance_empty()) return Region();
  return Region(base_, remainder_);
}

// --- sequences ---------------------------------------------------------------

SetSequence SetSequence::of_regions(std::vector<ConvexRegion> regions) {
  std::vector<Region> e;
  e.reserve(regions.size());
  for (auto& r : regions) e.emplace_back(std::move(r));
  return SetSequence(std::move(e));
}

SetSequence SetSequence::reversed() const {
  SetSequence out = *this;
  std::reverse(out.entries.begin(), out.entries.end());
  return out;
}

SetSequence SoulSequence::bases() const {
  std::vector<Region> e;
  e.reserve(souls.size());
  for (const Soul& s : souls) e.emplace_back(s.base());
  return SetSequence(std::move(e));
}

SetSequence SoulSequence::disturbances() const {
  std::vector<Region> e;
  e.reserve(souls.size());
  for (const Soul& s : souls) e.push_back(s.disturbance());
  return SetSequence(std::move(e));
}

SoulSequence SoulSequence::reversed() const {
  SoulSequence out = *this;
  std::reverse(out.souls.begin(), out.souls.end());
  return out;
}

bool IndexMask::selects(int k) const {
  switch (kind) {
    case Kind::Odd:
      return k % 2 == 1;
    case Kind::Even:
      return k % 2 == 0;
    default:
      return std::find(indices.begin(), indices.end(), k) != indices.end();
  }
}

// --- operators ---------------------------------------------------------------

Region difference_region(const Region& a, const Region& b) {
  if (a.empty()) return Region();
  if (b.empty()) return a;
  if (!a.pure_convex()) {
    // a = outer \ inner; removing b as well keeps the outer ring but the
    // union of holes is not a single convex inner. Overcover: drop the hole
    // only if b swallows it.
    ConvexRegion merged_inner = intersect(a.outer(), b.outer());
    if (!b.pure_convex()) merged_inner = intersect(merged_inner, b.outer());
    // Conservative: keep the larger hole.
    if (merged_inner.area() >= a.inner().area()) return Region(a.outer(), merged_inner);
    return a;
  }
  ConvexRegion inner = intersect(a.outer(), b.outer());
  if (!b.pure_convex()) {
    // a \ (bo \ bi) = (a \ bo) ∪ (a ∩ bi); representable when a ⊆ bo.
    ConvexRegion kept = intersect(a.outer(), b.inner());
    if (std::abs(inner.area() - a.area()) <= kEpsArea) {
      return Region(a.outer(), ConvexRegion()).empty() ? Region() : Region(kept);
    }
  }
  if (inner.area() <= kEpsArea) return a;
  if (std::abs(inner.area() - a.outer().area()) <= kEpsArea) return Region();
  return Region(a.outer(), inner);
}

SetSequence delta(const SetSequence& seq, DeltaDirection dir) {
  std::size_t m = seq.length();
  SetSequence out = SetSequence::empties(m);
  if (m == 0) return out;
  if (dir == DeltaDirection::Forward) {
    for (std::size_t k = 2; k <= m; ++k) out.at1(k) = difference_region(seq.at1(k), seq.at1(k - 1));
  } else {
    for (std::size_t k = 1; k + 1 <= m; ++k)
      out.at1(k) = difference_region(seq.at1(k), seq.at1(k + 1));
  }
  return out;
}

SetSequence restrict(const SetSequence& seq, const IndexMask& mask) {
  if (mask.kind == IndexMask::Kind::Explicit) {
    for (int k : mask.indices) {
      if (k < 1 || static_cast<std::size_t>(k) > seq.length()) {
        throw std::out_of_range("restrict: mask index out of range");
      }
    }
  }
  SetSequence out = seq;
  for (std::size_t k = 1; k <= seq.length(); ++k) {
    if (!mask.selects(static_cast<int>(k))) out.at1(k) = Region();
  }
  return out;
}

std::pair<Region, Region> ends(const SetSequence& seq) {
  if (seq.length() == 0) throw std::invalid_argument("ends of empty sequence");
  return {seq.entries.front(), seq.entries.back()};
}

PrecedesResult precedes_check(const SetSequence& q, const SetSequence& r, const SetSequence& s,
                              double tol) {
  PrecedesResult res;
  if (q.length() != r.length() || q.length() != s.length()) {
    throw std::invalid_argument("precedes: length mismatch");
  }
  auto qi = nonempty_indices(q);
  auto ri = nonempty_indices(r);
  for (int k : qi) {
    const Region& qk = q.at1(static_cast<std::size_t>(k));
    // Cache: once q(k) is covered by s([k+1, l0-1]) it is covered for l >= l0.
    int covered_from = -1;
    for (int l : ri) {
      if (l <= k) continue;
      const Region& rl = r.at1(static_cast<std::size_t>(l));
      if (bbox_gap_exceeds(qk, rl, kEpsSep)) continue;  // separated, cheap
      if (fingerprint(qk) == fingerprint(rl) && fingerprint(qk) != 0) continue;
      if (covered_from >= 0 && l >= covered_from) continue;
      if (separation(qk, rl) > kEpsSep) continue;
      if (regions_equal(qk, rl, tol)) continue;
      if (l - k >= 2) {
        if (region_subset_of_union(qk, s, static_cast<std::size_t>(k + 1),
                                   static_cast<std::size_t>(l - 1), tol)) {
          covered_from = l;
          continue;
        }
        if (region_subset_of_union(rl, s, static_cast<std::size_t>(k + 1),
                                   static_cast<std::size_t>(l - 1), tol)) {
          continue;
        }
      }
      res.holds = false;
      res.k = k;
      res.l = l;
      res.detail = "no precedence alternative holds";
      return res;
    }
  }
  return res;
}

bool precedes(const SetSequence& q, const SetSequence& r, const SetSequence& s) {
  return precedes_check(q, r, s).holds;
}

SetSequence anti_order(const std::vector<SetSequence>& seqs) {
  if (seqs.empty()) throw std::invalid_argument("anti_order: empty block list");
  SetSequence out;
  for (std::size_t b = 0; b < seqs.size(); ++b) {
    SetSequence blk = (b % 2 == 1) ? seqs[b].reversed() : seqs[b];
    out.entries.insert(out.entries.end(), blk.entries.begin(), blk.entries.end());
  }
  return out;
}

SoulSequence anti_order(const std::vector<SoulSequence>& seqs) {
  if (seqs.empty()) throw std::invalid_argument("anti_order: empty block list");
  SoulSequence out;
  for (std::size_t b = 0; b < seqs.size(); ++b) {
    SoulSequence blk = (b % 2 == 1) ? seqs[b].reversed() : seqs[b];
    out.souls.insert(out.souls.end(), blk.souls.begin(), blk.souls.end());
  }
  return out;
}

SetSequence otimes(const ConvexRegion& rbar, const SetSequence& s) {
  SetSequence out = SetSequence::empties(s.length());
  if (rbar.empty()) return out;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    const Region& e = s.at1(i);
    if (e.empty()) continue;
    ConvexRegion o = intersect(rbar, e.outer());
    if (o.area() <= kEpsArea) continue;
    ConvexRegion in = e.pure_convex() ? ConvexRegion() : intersect(rbar, e.inner());
    Region r = in.empty() ? Region(o) : Region(o, in);
    if (!r.empty()) out.at1(i) = std::move(r);
  }
  return out;
}

SetSequence oplus(const SetSequence& r, const SetSequence& s, std::vector<bool>* certified) {
  if (r.length() != s.length()) throw std::invalid_argument("oplus: length mismatch");
  SetSequence out = SetSequence::empties(r.length());
  if (certified) certified->assign(r.length(), true);
  for (std::size_t i = 1; i <= r.length(); ++i) {
    const Region& a = r.at1(i);
    const Region& b = s.at1(i);
    if (a.empty()) {
      out.at1(i) = b;
      continue;
    }
    if (b.empty()) {
      out.at1(i) = a;
      continue;
    }
    // Merge as certified convex hull of both outers.
    std::vector<Point> pts = a.outer().vertices();
    const auto& bv = b.outer().vertices();
    pts.insert(pts.end(), bv.begin(), bv.end());
    ConvexRegion hull = ConvexRegion::hull_of(pts);
    bool ok = true;
    for (const Point& p : hull.boundary_samples(kSampleStep)) {
      if (!a.contains(p, 1e-7) && !b.contains(p, 1e-7)) {
        ok = false;
        break;
      }
    }
    if (certified) (*certified)[i - 1] = ok;
    out.at1(i) = Region(hull);
  }
  return out;
}

bool relate(SeqRelation kind, const SetSequence& r, const SetSequence& s, double tol) {
  switch (kind) {
    case SeqRelation::Orthogonal: {
      if (r.length() != s.length()) throw std::invalid_argument("relate ⊥: length mismatch");
      for (std::size_t i = 1; i <= r.length(); ++i) {
        const Region& a = r.at1(i);
        const Region& b = s.at1(i);
        if (a.empty() || b.empty()) continue;
        ConvexRegion lens = intersect(a.outer(), b.outer());
        if (lens.area() <= kEpsArea) continue;
        // Interior samples of the lens must not live in both closed sets.
        bool clash = false;
        Point c = lens.centroid();
        std::vector<Point> probe = lens.boundary_samples(kSampleStep);
        probe.push_back(c);
        for (const Point& p : probe) {
          if (a.contains(p, -tol) && b.contains(p, -tol)) {
            clash = true;
            break;
          }
        }
        if (clash) return false;
      }
      return true;
    }
    case SeqRelation::Before: {
      auto ri = nonempty_indices(r);
      auto si = nonempty_indices(s);
      if (ri.empty() || si.empty()) return true;
      return ri.back() < si.front();
    }
    case SeqRelation::Far: {
      if (r.length() != s.length()) throw std::invalid_argument("relate ≪: length mismatch");
      for (std::size_t k = 1; k <= r.length(); ++k) {
        if (r.at1(k).empty()) continue;
        for (std::size_t l = k + 1; l <= s.length(); ++l) {
          if (s.at1(l).empty()) continue;
          if (bbox_gap_exceeds(r.at1(k), s.at1(l), kEpsSep)) continue;
          if (separation(r.at1(k), s.at1(l)) <= kEpsSep) return false;
        }
      }
      return true;
    }
    case SeqRelation::Embeds: {
      // r ≻≻ s: nonempty entries of r, in order, equal those of s.
      return traces_equal(trace_of(r), trace_of(s), tol, false);
    }
    case SeqRelation::Equiv:
      return traces_equal(trace_of(r), trace_of(s), tol, false);
    case SeqRelation::RevEquiv:
      return traces_equal(trace_of(r), trace_of(s), tol, true);
  }
  return false;
}

SetSequence shift_embed(const SetSequence& p, int block_index, int sign, int total_blocks) {
  if (block_index < 1 || block_index > total_blocks) {
    throw std::out_of_range("shift_embed: block index out of range");
  }
  std::size_t m = p.length();
  SetSequence out = SetSequence::empties(m * static_cast<std::size_t>(total_blocks));
  SetSequence src = (sign < 0) ? p.reversed() : p;
  std::size_t base = m * static_cast<std::size_t>(block_index - 1);
  for (std::size_t i = 1; i <= m; ++i) out.at1(base + i) = src.at1(i);
  return out;
}

// --- validator ----------------------------------------------------------------

std::string ValidationReport::to_json() const {
  std::ostringstream os;
  os << "{\"criterion\":\"" << criterion << "\",\"pass\":" << (pass ? "true" : "false");
  os << ",\"tol\":" << tol << ",\"measured\":" << measured;
  os << ",\"witness\":{\"indices\":[";
  for (std::size_t i = 0; i < witness_indices.size(); ++i) {
    if (i) os << ",";
    os << witness_indices[i];
  }
  os << "],\"detail\":\"" << detail << "\"}}";
  return os.str();
}

ValidationReport validate_soul(const Soul& s, double tol) {
  ValidationReport rep;
  rep.criterion = "soul";
  rep.tol = tol;
  if (s.base().empty()) {
    rep.pass = false;
    rep.detail = "base empty";
    return rep;
  }
  if (s.remainder().empty()) {
    rep.pass = false;
    rep.detail = "base minus disturbance empty";
    return rep;
  }
  // remainder ⊆ base
  for (const Point& p : s.remainder().vertices()) {
    if (!s.base().contains(p, tol)) {
      rep.pass = false;
      rep.detail = "remainder not contained in base";
      return rep;
    }
  }
  return rep;
}

namespace {

bool souls_disturbance_matches(const Region& got, const Region& want, double tol) {
  if (got.empty() && want.empty()) return true;
  if (fingerprint(got) == fingerprint(want) && fingerprint(got) != 0) return true;
  return regions_equal(got, want, tol);
}

}  // namespace

ValidationReport validate_regular(const SoulSequence& seq, double tol) {
  ValidationReport rep;
  rep.criterion = "regular";
  rep.tol = tol;
  std::size_t m = seq.length();
  if (m == 0 || m % 2 != 0) {
    rep.pass = false;
    rep.detail = "M odd";
    rep.measured = static_cast<double>(m);
    return rep;
  }
  SetSequence bases = seq.bases();
  SetSequence dist = seq.disturbances();
  SetSequence fwd = delta(bases, DeltaDirection::Forward);
  SetSequence bwd = delta(bases, DeltaDirection::Backward);
  for (std::size_t k = 1; k <= m; ++k) {
    const Region& want = (k % 2 == 1) ? fwd.at1(k) : bwd.at1(k);
    if (!souls_disturbance_matches(dist.at1(k), want, tol)) {
      rep.pass = false;
      rep.witness_indices = {static_cast<int>(k)};
      rep.detail = (k % 2 == 1) ? "odd disturbance != forward difference"
                                : "even disturbance != backward difference";
      return rep;
    }
  }
  return rep;
}

ValidationReport validate_consistent(const SoulSequence& seq, double tol) {
  ValidationReport rep;
  rep.criterion = "consistent";
  rep.tol = tol;
  SetSequence dist = seq.disturbances();
  SetSequence bases = seq.bases();
  SetSequence d_plus = restrict(dist, IndexMask::odd());
  SetSequence d_minus = restrict(dist, IndexMask::even());
  PrecedesResult pr = precedes_check(d_minus, d_plus, bases, tol);
  if (!pr.holds) {
    rep.pass = false;
    rep.witness_indices = {pr.k, pr.l};
    rep.detail = pr.detail;
  }
  return rep;
}

ValidationReport validate_population_of_souls(const SoulSequence& seq, double tol) {
  ValidationReport rep;
  rep.criterion = "population_of_souls";
  rep.tol = tol;
  for (std::size_t k = 1; k <= seq.length(); ++k) {
    ValidationReport sr = validate_soul(seq.souls[k - 1], tol);
    if (!sr.pass) {
      rep.pass = false;
      rep.witness_indices = {static_cast<int>(k)};
      rep.detail = "soul invariant: " + sr.detail;
      return rep;
    }
  }
  ValidationReport r1 = validate_regular(seq, tol);
  if (!r1.pass) return r1;
  ValidationReport r2 = validate_consistent(seq, tol);
  if (!r2.pass) return r2;
  return rep;
}

ValidationReport validate_population_of_sets(const std::vector<ConvexRegion>& entries,
                                             double tol) {
  ValidationReport rep;
  rep.criterion = "population_of_sets";
  rep.tol = tol;
  std::size_t m = entries.size();
  if (m == 0) {
    rep.pass = false;
    rep.detail = "empty sequence";
    return rep;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (entries[i].empty()) {
      rep.pass = false;
      rep.witness_indices = {static_cast<int>(i + 1)};
      rep.detail = "empty entry";
      return rep;
    }
  }
  // Structural pre-check: cell_i ∩ cell_j ⊆ cell_{i-1} for j < i-1 (sweep
  // monotonicity). When it holds, union areas telescope via pairwise overlaps.
  std::vector<double> a(m), ov(m, 0.0);
  std::vector<std::uint64_t> fp(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = entries[i].area();
    fp[i] = fingerprint(entries[i]);
  }
  bool structure_ok = true;
  for (std::size_t i = 1; i < m && structure_ok; ++i) {
    ConvexRegion lens = intersect(entries[i], entries[i - 1]);
    ov[i] = lens.area();
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if (fp[j] == fp[i - 1]) continue;
      auto [ilo, ihi] = entries[i].bbox();
      auto [jlo, jhi] = entries[j].bbox();
      if (jlo.x > ihi.x || ilo.x > jhi.x || jlo.y > ihi.y || ilo.y > jhi.y) continue;
      ConvexRegion cut = intersect(entries[i], entries[j]);
      if (cut.area() <= kEpsArea) continue;
      for (const Point& p : cut.vertices()) {
        if (!entries[i - 1].contains(p, 1e-7)) {
          structure_ok = false;
          break;
        }
      }
      if (!structure_ok) break;
    }
  }
  if (!structure_ok) {
    rep.pass = false;
    rep.detail = "union structure not sweep-monotone; range areas unavailable";
    return rep;
  }
  std::vector<double> pa(m + 1, 0.0), pov(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    pa[i + 1] = pa[i] + a[i];
    pov[i + 1] = pov[i] + ov[i];
  }
  double worst = 0.0;
  int worst_k = -1, worst_l = -1;
  for (std::size_t K = 0; K < m; ++K) {
    std::vector<Point> hull_pts = entries[K].vertices();
    ConvexRegion hull = entries[K];
    double hull_area = a[K];
    for (std::size_t L = K + 1; L < m; ++L) {
      if (fp[L] == fp[L - 1]) {
        // Identical repeated entry: nothing changes.
      } else {
        bool outside = false;
        for (const Point& p : entries[L].vertices()) {
          if (!hull.contains(p, 1e-9)) {
            outside = true;
            break;
          }
        }
        if (outside) {
          const auto& lv = entries[L].vertices();
          hull_pts = hull.vertices();
          hull_pts.insert(hull_pts.end(), lv.begin(), lv.end());
          hull = ConvexRegion::hull_of(hull_pts);
          hull_area = hull.area();
        }
      }
      double union_area = (pa[L + 1] - pa[K]) - (pov[L + 1] - pov[K + 1]);
      double deficiency = hull_area - union_area;
      if (deficiency > worst) {
        worst = deficiency;
        worst_k = static_cast<int>(K + 1);
        worst_l = static_cast<int>(L + 1);
      }
    }
  }
  rep.measured = worst;
  if (worst > tol) {
    rep.pass = false;
    rep.witness_indices = {worst_k, worst_l};
    rep.detail = "contiguous union not convex within tolerance";
  }
  return rep;
}

// --- dust / anti-dust / filling ------------------------------------------------

namespace {

struct MaskedEntry {
  std::vector<Point> pts;
  bool empty() const { return pts.empty(); }
  std::pair<Point, Point> bbox() const {
    Point lo = pts.front(), hi = pts.front();
    for (const Point& p : pts) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
  }
};

// Samples of s(i) lying in `filter` but not in `exclude` (the disturbance is
// the set difference, so the dividing boundary belongs to the remainder).
std::vector<MaskedEntry> masked_samples(const Region& filter, const SetSequence& s, double tol,
                                        const ConvexRegion* exclude = nullptr) {
  std::vector<MaskedEntry> out(s.length());
  if (filter.empty()) return out;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    const Region& e = s.at1(i);
    if (e.empty()) continue;
    for (const Point& p : e.boundary_samples(kSampleStep)) {
      if (!filter.contains(p, tol)) continue;
      if (exclude && exclude->contains(p, 1e-9)) continue;
      out[i - 1].pts.push_back(p);
    }
  }
  return out;
}

double masked_distance(const MaskedEntry& a, const MaskedEntry& b) {
  double best = kInfDist;
  for (const Point& p : a.pts)
    for (const Point& q : b.pts) best = std::min(best, dist(p, q));
  return best;
}

bool masked_equiv(const std::vector<MaskedEntry>& a, const std::vector<MaskedEntry>& b,
                  double tol) {
  std::vector<const MaskedEntry*> na, nb;
  for (const auto& e : a)
    if (!e.empty()) na.push_back(&e);
  for (const auto& e : b)
    if (!e.empty()) nb.push_back(&e);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i) {
    // Mutual one-sided deviations of the sample clouds.
    for (const Point& p : na[i]->pts) {
      double d = kInfDist;
      for (const Point& q : nb[i]->pts) d = std::min(d, dist(p, q));
      if (d > tol) return false;
    }
    for (const Point& q : nb[i]->pts) {
      double d = kInfDist;
      for (const Point& p : na[i]->pts) d = std::min(d, dist(p, q));
      if (d > tol) return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_dust(const std::vector<ParentOffspring>& pairs, double tol) {
  ValidationReport rep;
  rep.criterion = "dust";
  rep.tol = tol;
  struct Entry {
    Region t1;
    ConvexRegion diff;
    std::vector<MaskedEntry> in_t1;
    std::vector<MaskedEntry> in_diff;
  };
  std::vector<Entry> es;
  for (const auto& [parent, off] : pairs) {
    Entry e;
    e.t1 = parent.disturbance();
    e.diff = parent.remainder();
    SetSequence s = restrict(off.disturbances(), IndexMask::odd());
    e.in_t1 = masked_samples(e.t1, s, 1e-9, &e.diff);
    e.in_diff = masked_samples(Region(e.diff), s, 1e-9);
    es.push_back(std::move(e));
  }
  for (std::size_t p = 0; p < es.size(); ++p) {
    const Entry& e = es[p];
    // 1) pointwise disjoint beyond boundary contact.
    for (std::size_t i = 0; i < e.in_t1.size(); ++i) {
      if (e.in_t1[i].empty() || e.in_diff[i].empty()) continue;
      int deep = 0;
      for (const Point& q : e.in_t1[i].pts) {
        if (e.diff.contains(q, -10 * tol)) ++deep;
      }
      if (deep > 0) {
        rep.pass = false;
        rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(i + 1)};
        rep.detail = "dust cond 1: disturbance and remainder parts overlap";
        return rep;
      }
    }
    // 2) t1-part at k separated from diff-part at l for k < l.
    for (std::size_t k = 0; k < e.in_t1.size(); ++k) {
      if (e.in_t1[k].empty()) continue;
      for (std::size_t l = k + 1; l < e.in_diff.size(); ++l) {
        if (e.in_diff[l].empty()) continue;
        if (masked_distance(e.in_t1[k], e.in_diff[l]) <= kEpsSep) {
          rep.pass = false;
          rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(k + 1),
                                 static_cast<int>(l + 1)};
          rep.detail = "dust cond 2: parts not separated";
          return rep;
        }
      }
    }
  }
  // 3)/4) conditional equivalences across parents.
  for (std::size_t p = 0; p < es.size(); ++p) {
    for (std::size_t q = p + 1; q < es.size(); ++q) {
      if (fingerprint(es[p].t1) == fingerprint(es[q].t1) && !es[p].t1.empty()) {
        if (!masked_equiv(es[p].in_t1, es[q].in_t1, 20 * tol)) {
          rep.pass = false;
          rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(q + 1)};
          rep.detail = "dust cond 3: equal disturbances give non-equivalent parts";
          return rep;
        }
      }
      if (fingerprint(es[p].diff) == fingerprint(es[q].diff) && !es[p].diff.empty()) {
        if (!masked_equiv(es[p].in_diff, es[q].in_diff, 20 * tol)) {
          rep.pass = false;
          rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(q + 1)};
          rep.detail = "dust cond 4: equal remainders give non-equivalent parts";
          return rep;
        }
      }
    }
  }
  return rep;
}

ValidationReport validate_anti_dust(const std::vector<ParentOffspring>& pairs, double tol) {
  ValidationReport rep;
  rep.criterion = "anti_dust";
  rep.tol = tol;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto& [tp, op] = pairs[p];
      const auto& [tq, oq] = pairs[q];
      if (fingerprint(tp.base()) != fingerprint(tq.base())) continue;
      SetSequence rp = restrict(op.disturbances(), IndexMask::even());
      SetSequence rq = restrict(oq.disturbances(), IndexMask::even());
      if (!relate(SeqRelation::Equiv, rp, rq, tol)) {
        rep.pass = false;
        rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(q + 1)};
        rep.detail = "anti-dust cond 5: equal bases give non-equivalent parts";
        return rep;
      }
    }
  }
  return rep;
}

ValidationReport validate_filling(const std::vector<ParentOffspring>& pairs, double tol) {
  ValidationReport rep;
  rep.criterion = "filling";
  rep.tol = tol;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [parent, off] = pairs[p];
    // 6) union of bases = t, by mutual coverage sampling.
    const ConvexRegion& t = parent.base();
    for (const Point& s : t.boundary_samples(kSampleStep)) {
      bool covered = false;
      for (const Soul& c : off.souls) {
        if (c.base().contains(s, 10 * tol)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        rep.pass = false;
        rep.witness_indices = {static_cast<int>(p + 1)};
        rep.detail = "filling cond 6: offspring bases do not cover the parent";
        return rep;
      }
    }
    for (const Soul& c : off.souls) {
      double dev = deviation(c.base(), t);
      if (dev > 10 * tol) {
        rep.pass = false;
        rep.witness_indices = {static_cast<int>(p + 1)};
        rep.detail = "filling cond 6: offspring base leaves the parent";
        return rep;
      }
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto& [tp, op] = pairs[p];
      const auto& [tq, oq] = pairs[q];
      if (fingerprint(tp.remainder()) == fingerprint(tq.remainder())) {
        if (fingerprint(op.souls.front().base()) != fingerprint(oq.souls.front().base())) {
          rep.pass = false;
          rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(q + 1)};
          rep.detail = "filling cond 7: equal remainders but different first entries";
          return rep;
        }
      }
      if (fingerprint(tp.base()) == fingerprint(tq.base())) {
        if (fingerprint(op.souls.back().base()) != fingerprint(oq.souls.back().base())) {
          rep.pass = false;
          rep.witness_indices = {static_cast<int>(p + 1), static_cast<int>(q + 1)};
          rep.detail = "filling cond 8: equal bases but different last entries";
          return rep;
        }
      }
    }
  }
  return rep;
}

ValidationReport validate_refinement(const std::vector<ConvexRegion>& parents,
                                     const std::vector<ConvexRegion>& children, int m_prime,
                                     double tol) {
  ValidationReport rep;
  rep.criterion = "refinement";
  rep.tol = tol;
  if (m_prime <= 0 || children.size() != parents.size() * static_cast<std::size_t>(m_prime)) {
    rep.pass = false;
    rep.detail = "child count != parents * m_prime";
    return rep;
  }
  double worst = 0.0;
  for (std::size_t K = 0; K < parents.size(); ++K) {
    const ConvexRegion& parent = parents[K];
    std::size_t from = K * static_cast<std::size_t>(m_prime);
    // Children stay inside the parent.
    double out_dev = 0.0;
    for (int j = 0; j < m_prime; ++j) {
      out_dev = std::max(out_dev, deviation(children[from + j], parent));
    }
    // Parent covered by the children.
    double cover_dev = 0.0;
    for (const Point& s : parent.boundary_samples(kSampleStep)) {
      double best = kInfDist;
      for (int j = 0; j < m_prime && best > 0.0; ++j) {
        const ConvexRegion& c = children[from + j];
        if (c.contains(s, kEpsGeom)) best = 0.0;
      }
      if (best > 0.0) {
        for (int j = 0; j < m_prime; ++j) {
          const ConvexRegion& c = children[from + j];
          if (c.empty()) continue;
          best = std::min(best, dist(s, min_dist_projection(c, s)));
        }
      }
      cover_dev = std::max(cover_dev, best);
    }
    double h = std::max(out_dev, cover_dev);
    if (h > worst) worst = h;
    if (h > tol) {
      rep.pass = false;
      rep.witness_indices = {static_cast<int>(K + 1)};
      rep.detail = "parent differs from union of its children";
      rep.measured = h;
      return rep;
    }
  }
  rep.measured = worst;
  return rep;
}

bool regular_decomposition_holds(const SoulSequence& seq, double tol) {
  std::size_t m = seq.length();
  if (m % 2 != 0) return false;
  for (std::size_t J = 1; 2 * J <= m; ++J) {
    const Soul& a = seq.souls[2 * J - 2];
    const Soul& b = seq.souls[2 * J - 1];
    if (hausdorff(a.base(), b.base()) > tol) return false;
    if (2 * J < m) {
      const Soul& c = seq.souls[2 * J];
      if (hausdorff(b.remainder(), c.remainder()) > tol) return false;
    }
  }
  return true;
}

SoulSequence concat(const SoulSequence& a, const SoulSequence& b) {
  SoulSequence out = a;
  out.souls.insert(out.souls.end(), b.souls.begin(), b.souls.end());
  return out;
}

}  // namespace peanofill
