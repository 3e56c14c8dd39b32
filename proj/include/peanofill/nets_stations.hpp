#pragma once
// Skeletons, nets, anti-nets and stations over the normalized domain,
// together with the quantitative parameters that size them.
//
// Lengths come in two flavors: the worst-case counts derived from the
// covering/chain bounds (kept for reference and for strict mode) and the
// much smaller uniform lengths used by the adaptive builders, which stop
// early once their target condition holds and pad by repeats.

#include <functional>
#include <vector>

#include "peanofill/geometry.hpp"
#include "peanofill/rho_convex.hpp"

namespace peanofill {

struct Skeleton {
  std::vector<double> chi;  // nondecreasing, steps <= gamma
  double gamma = 0.0;

  std::size_t length() const { return chi.size(); }
  double front() const { return chi.front(); }
  double back() const { return chi.back(); }
};

struct NetParams {
  double gamma = 0.0;
  double gamma_prime = 0.0;
  double beta = 1.0;
  double beta_prime = 0.0;
  double rho_net = 0.0;  // sweep-disc radius gamma/2 + 1/(2*gamma)
  int n0 = 0;            // minimal integer >= 1/gamma + 1
  long long k_chain = 0;
  long long j_cov = 0;
  long long n_star = 0;  // (k_chain - 1) * j_cov
  long long n1 = 0;      // (n0 - 1) * n_star + 1
  long long paper_k_chain = 0;  // worst-case chain length ceil(1/eps(delta)) + 1
  long long paper_j_cov = 0;    // worst-case covering count of [-1,1]^2
  double delta = 0.0;           // delta(beta'/2, beta') for the two-step ladder
  double eps_delta = 0.0;       // eps(delta) at rho = beta'/2
};

// Strict parameters from the closed formulas; lengths default to the
// worst-case counts.
NetParams compute_params(double beta, double gamma, double gamma_prime);

// Same parameters with small uniform lengths (adaptive mode).
NetParams with_lengths(NetParams p, long long k_chain, long long j_cov);

// Largest step for which a delta-collar of the inner ball, away from the
// origin by gamma'/3, stays inside the outer ball. Bisection over a grid
// certificate. Requires 1 <= rho < rho_bar.
double delta_rho_bar(double rho, double rho_bar, double gamma_prime);

// inf distance between the support ball and the unit-disc points outside
// its delta-shifted copy; always in (0, delta].
double eps_of_delta(double delta, double rho);

// Uniform skeleton of length n spanning the axis projection of t.
Skeleton make_skeleton(const ConvexRegion& t, double gamma, int n, Axis axis = Axis::X);

struct Net {
  std::vector<ConvexRegion> stages;  // increasing, last = target
  ConvexRegion target;
  Skeleton skeleton;  // block-repeated skeleton aligned with the stages
  std::vector<double> positions;  // sweep position per stage (sweep nets)
  double increment_slack = 0.0;   // max increment diameter measured
};

struct Station {
  std::vector<Region> stages;  // empty = first ⊆ ... ⊆ last = disturbance
  Region disturbance;
  ConvexRegion generating_base;
};

// One collar-growth step: domain ∩ caps over sampled far points (distance
// to r greater than delta). Returns a superset of r that picks up the
// eps(delta) collar; equals the domain when r already fills it to delta.
ConvexRegion grow_l32(const ConvexRegion& r, double delta, const RhoFamily& fam,
                      double sample_step = 0.02);

// Increasing chain from t\t1 to t with steps bounded by delta; adaptive
// early stop with repeat padding to k_target entries.
std::vector<ConvexRegion> chain_t23(const ConvexRegion& t, const ConvexRegion& remainder,
                                    double delta, const RhoFamily& fam, long long k_target,
                                    bool strict = false);

// Single ladder rung: a set between r and t picking up Delta, built from
// rho_bar-caps over sampled far points. Delta must have diameter <=
// gamma'/3 (+ slack in adaptive use).
ConvexRegion ladder_l31(const ConvexRegion& r, const ConvexRegion& t, const Region& delta_piece,
                        double rho, double rho_bar, const RhoFamily& fam, double gamma_prime);

// Net from t\t1 to t along the rho ladder beta'/2 -> beta' with the fixed
// axis-aligned covering cells; adaptive early stop + padding to j_target.
Net build_net_t22(const ConvexRegion& t, const ConvexRegion& remainder, const NetParams& params,
                  const RhoFamily& fam, long long j_target = 0);

// Station for the disturbance of (t, t1): chain then per-link nets,
// concatenated and shifted down by the first stage.
Station build_station(const ConvexRegion& t, const ConvexRegion& remainder,
                      const NetParams& params, const RhoFamily& fam);

using StationProvider =
    std::function<Station(const ConvexRegion& base, const ConvexRegion& remainder)>;

// Sweep net: disc clips at skeleton positions with per-slab station
// interleaves realized by interpolated sweep positions. Returns the net
// (length n1) and its block-repeated skeleton satisfying the 3,5-sandwich.
Net build_net_alpha(const ConvexRegion& t, const NetParams& params, const RhoFamily& fam);

// Decreasing anti-net (length n1) with the mirrored sandwich, produced by
// x-reflection of the sweep net.
Net build_anti_net(const ConvexRegion& t, const NetParams& params, const RhoFamily& fam);

// Disc clip whose rightmost point sits at (position, 0): the sweep stage
// t ∩ B((position - rho, 0), rho). `mirrored` sweeps from the right.
ConvexRegion sweep_clip(const ConvexRegion& t, double position, double rho, int n_arc,
                        bool mirrored = false);

// Sandwich checks (exact clip-and-compare at each index).
bool net_sandwich_holds(const Net& net, const ConvexRegion& t, double gamma, int lo_mult,
                        int hi_mult, double tol);
bool anti_net_sandwich_holds(const Net& anti, const ConvexRegion& t, double gamma, int lo_mult,
                             int hi_mult, double tol);

// Definition-level checks used by tests and the verifier.
struct NetCheck {
  bool increasing = true;
  bool ends_ok = true;
  bool stages_in_family = true;
  double max_increment_diameter = 0.0;
  bool pass(double gamma_prime, double slack) const {
    return increasing && ends_ok && stages_in_family &&
           max_increment_diameter <= gamma_prime + slack;
  }
};
NetCheck check_net(const std::vector<ConvexRegion>& stages, const ConvexRegion& target,
                   const NetParams& params, const RhoFamily& fam, int frho_samples = 40);

// Station universality: the induced sequences over alternative bases are
// nets. Returns the worst increment diameter across all tested bases.
NetCheck check_station_against_base(const Station& st, const ConvexRegion& base,
                                    const ConvexRegion& base_remainder, const NetParams& params,
                                    const RhoFamily& fam);

}  // namespace peanofill
