#include "peanofill/nets_stations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace peanofill {

namespace {

// Membership of z in the ball B((0,-rho), rho) shifted variants, used by the
// parameter searches.
bool in_ball(Point z, Point c, double r) { return dist(z, c) <= r; }

bool delta_implication_holds(double delta, double rho, double rho_bar, double gamma_prime) {
  const double sigma = gamma_prime / 3.0;
  const Point c{0.0, -rho};
  const Point cbar{0.0, -rho_bar};
  const int n_theta = 4096;
  const int n_u = 8;
  // z = c + (rho+u)(sin t, cos t); premise: u in (0, delta], ||z|| >= sigma-delta.
  for (int it = 0; it <= n_theta; ++it) {
    double th = M_PI * it / n_theta;
    for (int iu = 1; iu <= n_u; ++iu) {
      double u = delta * iu / n_u;
      Point z{(rho + u) * std::sin(th), (rho + u) * std::cos(th) - rho};
      if (norm(z) < sigma - delta) continue;
      if (!in_ball(z, cbar, rho_bar)) return false;
    }
  }
  // Points at the sphere ||z|| = sigma - delta within delta of the ball.
  if (sigma - delta > 0) {
    for (int it = 0; it <= n_theta; ++it) {
      double th = 2.0 * M_PI * it / n_theta;
      Point z{(sigma - delta) * std::cos(th), (sigma - delta) * std::sin(th)};
      double d_ball = std::max(0.0, dist(z, c) - rho);
      if (d_ball > delta) continue;
      if (!in_ball(z, cbar, rho_bar)) return false;
    }
  }
  return true;
}

std::vector<Point> far_sample_points(const Region& domain_part, const ConvexRegion& domain,
                                     double step) {
  std::vector<Point> pts = domain_part.boundary_samples(step);
  // A light interior grid over the part's bbox.
  auto [lo, hi] = domain_part.bbox();
  int nx = std::max(1, static_cast<int>((hi.x - lo.x) / step));
  int ny = std::max(1, static_cast<int>((hi.y - lo.y) / step));
  nx = std::min(nx, 64);
  ny = std::min(ny, 64);
  for (int i = 0; i <= nx; ++i) {
    for (int j = 0; j <= ny; ++j) {
      Point p{lo.x + (hi.x - lo.x) * i / std::max(nx, 1),
              lo.y + (hi.y - lo.y) * j / std::max(ny, 1)};
      if (domain_part.contains(p, 0.0) && domain.contains(p, 0.0)) pts.push_back(p);
    }
  }
  return pts;
}

double region_deviation_to(const Region& part, const Region& target, double step) {
  // sup over samples of part of the distance to target.
  if (part.empty()) return 0.0;
  if (target.empty()) return kInfDist;
  double worst = 0.0;
  auto tgt = target.boundary_samples(step);
  for (const Point& p : part.boundary_samples(step)) {
    if (target.contains(p, 1e-9)) continue;
    double best = kInfDist;
    for (const Point& q : tgt) best = std::min(best, dist(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double delta_rho_bar(double rho, double rho_bar, double gamma_prime) {
  if (rho < 1.0 || rho_bar <= rho) {
    throw std::invalid_argument("delta_rho_bar: need 1 <= rho < rho_bar");
  }
  double hi = gamma_prime / 3.0;
  if (delta_implication_holds(hi, rho, rho_bar, gamma_prime)) return hi;
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= 0) break;
    if (delta_implication_holds(mid, rho, rho_bar, gamma_prime)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::max(lo, 1e-12);
}

double eps_of_delta(double delta, double rho) {
  if (delta <= 0) throw std::invalid_argument("eps_of_delta: delta must be positive");
  const Point c{0.0, -rho};
  const Point cs{0.0, delta - rho};
  double best = delta;  // z = (0, delta) witnesses eps <= delta
  const int n = 20000;
  // Boundary of the shifted ball inside the unit disc.
  for (int i = 0; i <= n; ++i) {
    double th = M_PI * i / n;  // symmetric in x
    Point z{rho * std::sin(th), cs.y + rho * std::cos(th)};
    if (norm(z) > 1.0) continue;
    best = std::min(best, std::max(0.0, dist(z, c) - rho));
  }
  // Unit circle outside the shifted ball.
  for (int i = 0; i <= n; ++i) {
    double th = M_PI * i / n;
    Point z{std::sin(th), std::cos(th)};
    if (in_ball(z, cs, rho)) continue;
    best = std::min(best, std::max(0.0, dist(z, c) - rho));
  }
  return std::max(best, 1e-12);
}

NetParams compute_params(double beta, double gamma, double gamma_prime) {
  if (beta < 1.0) throw std::invalid_argument("compute_params: beta must be >= 1");
  if (!(gamma > 0.0 && gamma < 0.25) || !(gamma_prime > 0.0 && gamma_prime < 0.25)) {
    throw std::invalid_argument("compute_params: gamma, gamma' must lie in (0, 1/4)");
  }
  NetParams p;
  p.gamma = gamma;
  p.gamma_prime = gamma_prime;
  p.beta = beta;
  p.beta_prime = std::max(2.0 * beta, gamma + 1.0 / gamma);
  p.rho_net = gamma / 2.0 + 1.0 / (2.0 * gamma);
  double n0_real = 1.0 / gamma + 1.0;
  p.n0 = static_cast<int>(std::ceil(n0_real - 1e-12));
  p.delta = delta_rho_bar(p.beta_prime / 2.0, p.beta_prime, gamma_prime);
  p.eps_delta = eps_of_delta(p.delta, p.beta_prime / 2.0);
  p.paper_k_chain = static_cast<long long>(std::ceil(1.0 / p.eps_delta)) + 1;
  double cell_side = gamma_prime / (3.0 * std::sqrt(2.0));
  long long cells_per_axis = static_cast<long long>(std::ceil(2.0 / cell_side));
  p.paper_j_cov = cells_per_axis * cells_per_axis + 1;
  p.k_chain = p.paper_k_chain;
  p.j_cov = p.paper_j_cov;
  p.n_star = (p.k_chain - 1) * p.j_cov;
  p.n1 = static_cast<long long>(p.n0 - 1) * p.n_star + 1;
  return p;
}

NetParams with_lengths(NetParams p, long long k_chain, long long j_cov) {
  if (k_chain < 2 || j_cov < 1) throw std::invalid_argument("with_lengths: k >= 2, j >= 1");
  p.k_chain = k_chain;
  p.j_cov = j_cov;
  p.n_star = (k_chain - 1) * j_cov;
  p.n1 = static_cast<long long>(p.n0 - 1) * p.n_star + 1;
  return p;
}

Skeleton make_skeleton(const ConvexRegion& t, double gamma, int n, Axis axis) {
  if (t.empty() && t.vertices().empty()) throw std::invalid_argument("make_skeleton: empty set");
  if (n < 1) throw std::invalid_argument("make_skeleton: n must be positive");
  auto [lo, hi] = t.bbox();
  double a = (axis == Axis::X) ? lo.x : lo.y;
  double b = (axis == Axis::X) ? hi.x : hi.y;
  double ext = b - a;
  if (n == 1) {
    if (ext > 1e-12) throw std::invalid_argument("make_skeleton: n too small for extent");
    return Skeleton{{a}, gamma};
  }
  if (ext > (n - 1) * gamma + 1e-12) {
    throw std::invalid_argument("make_skeleton: n too small for extent");
  }
  Skeleton sk;
  sk.gamma = gamma;
  sk.chi.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) sk.chi.push_back(a + ext * l / (n - 1));
  return sk;
}

ConvexRegion sweep_clip(const ConvexRegion& t, double position, double rho, int n_arc,
                        bool mirrored) {
  if (t.empty()) return ConvexRegion();
  auto [lo, hi] = t.bbox();
  if (!mirrored && lo.x > position) return ConvexRegion();
  if (mirrored && hi.x < position) return ConvexRegion();
  Point center = mirrored ? Point{position + rho, 0.0} : Point{position - rho, 0.0};
  // Quick accept against the incircle of the inscribed polygon.
  double r_in = rho * std::cos(M_PI / n_arc);
  Point corners[4] = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
  double worst = 0.0;
  for (const Point& c : corners) worst = std::max(worst, dist(c, center));
  if (worst <= r_in) return t;
  double phase = mirrored ? M_PI : 0.0;
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(n_arc));
  for (int k = 0; k < n_arc; ++k) {
    double a = phase + 2.0 * M_PI * k / n_arc;
    v.push_back({center.x + rho * std::cos(a), center.y + rho * std::sin(a)});
  }
  return intersect(t, ConvexRegion::from_ccw(std::move(v)));
}

ConvexRegion grow_l32(const ConvexRegion& r, double delta, const RhoFamily& fam,
                      double sample_step) {
  if (r.empty()) throw std::invalid_argument("grow_l32: empty region");
  if (delta <= 0) throw std::invalid_argument("grow_l32: delta must be positive");
  if (deviation(fam.domain, r) <= delta) return fam.domain;
  Region complement(fam.domain, intersect(fam.domain, r));
  ConvexRegion s = fam.domain;
  for (const Point& x : far_sample_points(complement, fam.domain, sample_step)) {
    if (r.contains(x, kEpsGeom)) continue;
    Point p = min_dist_projection(r, x);
    double d = dist(x, p);
    if (d <= delta) continue;
    Point y = p + (delta / d) * (x - p);
    Cap cap = cap_from_contact(y, x, fam);
    // Cheap skip: current s already inside the cap ball.
    bool inside = true;
    double r_in = fam.rho * std::cos(M_PI / fam.n_arc);
    for (const Point& q : s.vertices()) {
      if (dist(q, cap.source_ball.center) > r_in) {
        inside = false;
        break;
      }
    }
    if (inside) continue;
    s = intersect(s, cap.region);
  }
  return s;
}

std::vector<ConvexRegion> chain_t23(const ConvexRegion& t, const ConvexRegion& remainder,
                                    double delta, const RhoFamily& fam, long long k_target,
                                    bool strict) {
  if (k_target < 1) throw std::invalid_argument("chain_t23: k_target must be >= 1");
  std::vector<ConvexRegion> stages{remainder};
  const double done_tol = 1e-9;
  ConvexRegion cur = remainder;
  long long steps = strict ? k_target - 1
                           : std::min<long long>(k_target - 1, 4096);
  for (long long i = 0; i < steps; ++i) {
    double dev = deviation(t, cur);
    if (!strict && dev <= done_tol) break;
    ConvexRegion next = intersect(grow_l32(cur, delta, fam, std::max(delta / 2.0, 0.01)), t);
    if (!strict && deviation(t, next) >= dev - 1e-12 && dev > done_tol) {
      throw std::runtime_error("chain_t23: no progress; delta too small for the budget");
    }
    stages.push_back(next);
    cur = next;
  }
  if (deviation(t, cur) <= done_tol) {
    stages.back() = t;  // exact endpoint identity
  } else if (!strict) {
    throw std::runtime_error("chain_t23: chain budget exceeded before reaching the target");
  }
  while (static_cast<long long>(stages.size()) < k_target) stages.push_back(stages.back());
  return stages;
}

ConvexRegion ladder_l31(const ConvexRegion& r, const ConvexRegion& t, const Region& delta_piece,
                        double rho, double rho_bar, const RhoFamily& fam, double gamma_prime) {
  if (deviation(r, t) > 1e-7) throw std::invalid_argument("ladder_l31: r not inside t");
  if (delta_piece.empty()) return r;
  const double sigma = gamma_prime / 3.0;
  Region outside(t, intersect(t, r));
  if (region_deviation_to(outside, delta_piece, sigma / 2.0) <= sigma) {
    return t;
  }
  RhoFamily fam_bar = fam;
  fam_bar.rho = rho_bar;
  (void)rho;
  ConvexRegion rbar = t;
  for (const Point& x : far_sample_points(outside, fam.domain, sigma / 2.0)) {
    if (r.contains(x, kEpsGeom)) continue;
    // Distance to the piece being added.
    double dpiece = kInfDist;
    for (const Point& q : delta_piece.boundary_samples(sigma / 2.0)) {
      dpiece = std::min(dpiece, dist(x, q));
      if (dpiece <= sigma) break;
    }
    if (dpiece <= sigma) continue;
    Cap cap = support_cap(r, x, fam_bar);
    bool inside = true;
    double r_in = rho_bar * std::cos(M_PI / fam.n_arc);
    for (const Point& q : rbar.vertices()) {
      if (dist(q, cap.source_ball.center) > r_in) {
        inside = false;
        break;
      }
    }
    if (inside) continue;
    rbar = intersect(rbar, cap.region);
  }
  // The rung must pick up the piece and keep r.
  for (const Point& q : delta_piece.boundary_samples(sigma / 2.0)) {
    if (!rbar.contains(q, 1e-6)) {
      throw std::runtime_error("ladder_l31: rung lost part of the piece (delta too large)");
    }
  }
  if (deviation(r, rbar) > 1e-6) {
    throw std::runtime_error("ladder_l31: rung does not contain the inner set");
  }
  return rbar;
}

Net build_net_t22(const ConvexRegion& t, const ConvexRegion& remainder, const NetParams& params,
                  const RhoFamily& fam, long long j_target) {
  if (j_target <= 0) j_target = params.j_cov;
  Net net;
  net.target = t;
  Region t1(t, intersect(t, remainder));
  if (t1.empty()) {
    net.stages.assign(static_cast<std::size_t>(std::max<long long>(j_target, 1)), t);
    return net;
  }
  std::vector<ConvexRegion> stages{remainder};
  double sigma = params.gamma_prime / 3.0;
  double cell_side = sigma / std::sqrt(2.0);
  auto [lo, hi] = t1.bbox();
  long long ix0 = static_cast<long long>(std::floor((lo.x + 1.0) / cell_side));
  long long ix1 = static_cast<long long>(std::floor((hi.x + 1.0) / cell_side));
  long long iy0 = static_cast<long long>(std::floor((lo.y + 1.0) / cell_side));
  long long iy1 = static_cast<long long>(std::floor((hi.y + 1.0) / cell_side));
  ConvexRegion cur = remainder;
  long long rung = 0;
  long long rung_budget = j_target - 1;
  for (long long ix = ix0; ix <= ix1; ++ix) {
    for (long long iy = iy0; iy <= iy1; ++iy) {
      double x0 = -1.0 + ix * cell_side, y0 = -1.0 + iy * cell_side;
      ConvexRegion cell = ConvexRegion::rectangle(x0, y0, x0 + cell_side, y0 + cell_side);
      ConvexRegion cell_t = intersect(t, cell);
      if (cell_t.area() <= kEpsArea) continue;
      Region piece(cell_t, intersect(cell_t, cur));
      if (piece.empty()) continue;
      double frac = rung_budget > 1 ? static_cast<double>(rung) / (rung_budget - 1) : 1.0;
      double rho_lo = params.beta_prime / 2.0 * (1.0 + frac);
      double rho_hi = std::min(params.beta_prime, rho_lo + params.beta_prime / 2.0);
      if (rung + 1 >= rung_budget) {
        // Final rung absorbs whatever remains.
        piece = Region(t, intersect(t, cur));
        rho_hi = params.beta_prime;
      }
      ConvexRegion next = ladder_l31(cur, t, piece, rho_lo, rho_hi, fam, params.gamma_prime);
      stages.push_back(next);
      cur = next;
      ++rung;
      if (rung >= rung_budget) break;
    }
    if (rung >= rung_budget) break;
  }
  if (deviation(t, cur) <= 1e-7) {
    stages.back() = t;
  } else {
    // One closing rung over the leftovers.
    Region rest(t, intersect(t, cur));
    ConvexRegion next =
        ladder_l31(cur, t, rest, params.beta_prime / 2.0, params.beta_prime, fam,
                   params.gamma_prime);
    if (deviation(t, next) > 1e-6) {
      throw std::runtime_error("build_net_t22: net did not reach the target");
    }
    stages.push_back(t);
  }
  while (static_cast<long long>(stages.size()) < j_target) stages.push_back(stages.back());
  if (static_cast<long long>(stages.size()) > j_target) {
    throw std::runtime_error("build_net_t22: rung budget exceeded; increase j_cov");
  }
  net.stages = std::move(stages);
  double worst = 0.0;
  for (std::size_t i = 1; i < net.stages.size(); ++i) {
    Region inc(net.stages[i], intersect(net.stages[i], net.stages[i - 1]));
    if (!inc.empty()) worst = std::max(worst, inc.diameter());
  }
  net.increment_slack = worst;
  return net;
}

Station build_station(const ConvexRegion& t, const ConvexRegion& remainder,
                      const NetParams& params, const RhoFamily& fam) {
  Station st;
  st.generating_base = t;
  st.disturbance = Region(t, intersect(t, remainder));
  if (st.disturbance.empty()) {
    st.disturbance = Region();
    st.stages.assign(static_cast<std::size_t>(std::max<long long>(params.n_star, 1)), Region());
    return st;
  }
  // Chain step: smallest power-of-two multiple of delta whose estimated
  // chain length fits the budget.
  double need = deviation(t, remainder);
  double delta_eff = params.delta;
  while (delta_eff < 1.0 &&
         static_cast<double>(params.k_chain - 1) * (0.8 * delta_eff) < need) {
    delta_eff *= 2.0;
  }
  auto chain = chain_t23(t, remainder, delta_eff, fam, params.k_chain);
  std::vector<ConvexRegion> concat_stages;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Net link = build_net_t22(chain[i], chain[i - 1], params, fam, params.j_cov);
    for (const ConvexRegion& s : link.stages) concat_stages.push_back(s);
  }
  st.stages.reserve(concat_stages.size());
  for (const ConvexRegion& s : concat_stages) {
    ConvexRegion inner = intersect(s, remainder);
    Region piece = (std::abs(s.area() - inner.area()) <= kEpsArea) ? Region() : Region(s, inner);
    st.stages.push_back(std::move(piece));
  }
  if (!st.stages.empty()) st.stages.back() = st.disturbance;
  return st;
}

Net build_net_alpha(const ConvexRegion& t, const NetParams& params, const RhoFamily& fam) {
  if (t.empty()) throw std::invalid_argument("build_net_alpha: empty set");
  Skeleton chi = make_skeleton(t, params.gamma, params.n0, Axis::X);
  long long nstar = std::max<long long>(params.n_star, 1);
  Net net;
  net.target = t;
  net.skeleton.gamma = params.gamma;
  auto push_stage = [&](double skeleton_value, double position) {
    net.skeleton.chi.push_back(skeleton_value);
    net.positions.push_back(position + 4.0 * params.gamma);
    net.stages.push_back(sweep_clip(t, position + 4.0 * params.gamma, params.rho_net, fam.n_arc));
  };
  for (int l = 2; l <= params.n0; ++l) {
    double a = chi.chi[static_cast<std::size_t>(l - 2)];
    double b = chi.chi[static_cast<std::size_t>(l - 1)];
    for (long long k = 1; k <= nstar; ++k) {
      double pos = (nstar == 1) ? b : a + (b - a) * static_cast<double>(k - 1) / (nstar - 1);
      push_stage(a, pos);
    }
  }
  push_stage(chi.back(), chi.back());
  // Endpoint identity: the final sweep covers t.
  net.stages.back() = t;
  double worst = 0.0;
  for (std::size_t i = 1; i < net.stages.size(); ++i) {
    if (net.stages[i - 1].empty()) {
      worst = std::max(worst, net.stages[i].diameter());
      continue;
    }
    Region inc(net.stages[i], intersect(net.stages[i], net.stages[i - 1]));
    if (!inc.empty()) worst = std::max(worst, inc.diameter());
  }
  net.increment_slack = worst;
  return net;
}

Net build_anti_net(const ConvexRegion& t, const NetParams& params, const RhoFamily& fam) {
  ConvexRegion tx = apply_transform(t, FrameTransform::negate_x());
  Net mirrored = build_net_alpha(tx, params, fam);
  Net anti;
  anti.target = t;
  anti.skeleton.gamma = params.gamma;
  std::size_t n = mirrored.stages.size();
  anti.stages.resize(n);
  anti.skeleton.chi.resize(n);
  anti.positions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    anti.stages[i] = apply_transform(mirrored.stages[n - 1 - i], FrameTransform::negate_x());
    anti.skeleton.chi[i] = -mirrored.skeleton.chi[n - 1 - i];
    anti.positions[i] = -mirrored.positions[n - 1 - i];
  }
  anti.stages.front() = t;  // reflection of the mirrored endpoint identity
  anti.increment_slack = mirrored.increment_slack;
  return anti;
}

bool net_sandwich_holds(const Net& net, const ConvexRegion& t, double gamma, int lo_mult,
                        int hi_mult, double tol) {
  for (std::size_t i = 0; i < net.stages.size(); ++i) {
    double chi = net.skeleton.chi[i];
    ConvexRegion lower = clip_halfplane(t, Axis::X, chi + lo_mult * gamma, Sense::LessEq);
    if (deviation(lower, net.stages[i]) > tol) return false;
    auto [lo, hi] = net.stages[i].empty() ? std::pair<Point, Point>{{0, 0}, {0, 0}}
                                          : net.stages[i].bbox();
    (void)lo;
    if (!net.stages[i].empty() && hi.x > chi + hi_mult * gamma + tol) return false;
  }
  return true;
}

bool anti_net_sandwich_holds(const Net& anti, const ConvexRegion& t, double gamma, int lo_mult,
                             int hi_mult, double tol) {
  // t ∩ (x >= chi + lo_mult*gamma) ⊆ stage ⊆ (x >= chi + hi_mult*gamma),
  // with negative multipliers in the callers.
  for (std::size_t i = 0; i < anti.stages.size(); ++i) {
    double chi = anti.skeleton.chi[i];
    ConvexRegion lower = clip_halfplane(t, Axis::X, chi + lo_mult * gamma, Sense::GreaterEq);
    if (deviation(lower, anti.stages[i]) > tol) return false;
    if (!anti.stages[i].empty()) {
      auto [lo, hi] = anti.stages[i].bbox();
      (void)hi;
      if (lo.x < chi + hi_mult * gamma - tol) return false;
    }
  }
  return true;
}

NetCheck check_net(const std::vector<ConvexRegion>& stages, const ConvexRegion& target,
                   const NetParams& params, const RhoFamily& fam, int frho_samples) {
  NetCheck chk;
  if (stages.empty()) {
    chk.ends_ok = false;
    return chk;
  }
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (stages[i - 1].empty()) continue;
    if (deviation(stages[i - 1], stages[i]) > 1e-7) chk.increasing = false;
    Region inc(stages[i], intersect(stages[i], stages[i - 1]));
    if (!inc.empty()) {
      chk.max_increment_diameter = std::max(chk.max_increment_diameter, inc.diameter());
    }
  }
  chk.ends_ok = hausdorff(stages.back(), target) <= 1e-7;
  RhoFamily fam_bp = fam;
  fam_bp.rho = params.beta_prime;
  std::size_t stride = std::max<std::size_t>(1, stages.size() / 8);
  for (std::size_t i = 0; i < stages.size(); i += stride) {
    if (stages[i].empty()) continue;
    FRhoReport rep = check_F_rho(stages[i], fam_bp, frho_samples, 17 + i);
    if (!rep.pass) {
      chk.stages_in_family = false;
      break;
    }
  }
  return chk;
}

NetCheck check_station_against_base(const Station& st, const ConvexRegion& base,
                                    const ConvexRegion& base_remainder, const NetParams& params,
                                    const RhoFamily& fam) {
  NetCheck chk;
  std::vector<ConvexRegion> induced;
  induced.reserve(st.stages.size());
  for (const Region& piece : st.stages) {
    if (piece.empty()) {
      induced.push_back(base_remainder);
      continue;
    }
    // Certified convex hull realizes the union remainder ∪ piece.
    std::vector<Point> pts = base_remainder.vertices();
    for (const Point& p : piece.boundary_samples(0.01)) pts.push_back(p);
    ConvexRegion hull = ConvexRegion::hull_of(pts);
    for (const Point& q : hull.boundary_samples(0.01)) {
      if (!base_remainder.contains(q, 1e-5) && !piece.contains(q, 1e-5)) {
        chk.stages_in_family = false;  // union not convex for this base
      }
    }
    induced.push_back(hull);
  }
  NetCheck inner = check_net(induced, base, params, fam, 30);
  inner.stages_in_family = inner.stages_in_family && chk.stages_in_family;
  return inner;
}

}  // namespace peanofill
