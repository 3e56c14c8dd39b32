#pragma once
// Level-by-level driver: the gamma/beta schedule, the two-soul initial
// population, and the refinement recursion with alternating sweep axes.

#include <stdexcept>
#include <vector>

#include "peanofill/offspring.hpp"

namespace peanofill {

struct Schedule {
  std::vector<double> gammas;       // gamma(1..depth)
  std::vector<double> betas;        // beta(1..depth), beta(j+1) = max{2b, g+1/g}
  std::vector<long long> m_primes;  // m'(1..depth-1)
  std::vector<NetParams> params;    // per transition 1..depth-1
  int depth = 1;
  long long k_chain_eff = 2;
  long long j_cov_eff = 2;
  bool strict = false;  // use the worst-case counts instead of the effective ones
  long long cell_budget = 1'000'000;
};

// Deterministic schedule; gamma(1) = gamma0, gamma(j) = min(gamma0,
// 1/(2(j+2))) afterwards, beta by the doubling recurrence.
Schedule make_schedule(int depth, double gamma0, long long k_chain_eff = 2,
                       long long j_cov_eff = 2, bool strict = false,
                       long long cell_budget = 1'000'000);

struct PartitionLevel {
  int j = 1;
  SoulSequence souls;
  long long M = 0;
  long long m_prime_used = 0;  // m' that produced this level (0 for level 1)
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string msg, int level, long long cells_needed, long long budget)
      : std::runtime_error(std::move(msg)),
        level(level),
        cells_needed(cells_needed),
        budget(budget) {}
  int level;
  long long cells_needed;
  long long budget;
};

// Two-term population ((T, empty), (T, empty)); domain must be normalized.
PartitionLevel init_level(const ConvexRegion& domain);

// Offspring per soul (axis x for odd j, y for even), anti-ordered, validated.
PartitionLevel next_level(const PartitionLevel& level, const Schedule& schedule,
                          const ConvexRegion& domain);

// Full stack from init to the requested depth.
std::vector<PartitionLevel> run(const ConvexRegion& domain, int depth, const Schedule& schedule);

// Level membership in the soul family: sampled rho-convexity of bases and
// remainders plus disturbance extents (sweep-axis and full diameter).
struct LevelTauReport {
  bool frho_pass = true;
  bool axis_extent_pass = true;
  double max_disturbance_diameter = 0.0;
  double max_disturbance_axis_extent = 0.0;
  double gamma = 0.0;
  int checked_souls = 0;
};
LevelTauReport check_level_tau(const PartitionLevel& level, const Schedule& schedule,
                               const ConvexRegion& domain, int soul_samples = 16);

std::vector<ConvexRegion> level_bases(const PartitionLevel& level);
double level_extent(const PartitionLevel& level, ExtentMode mode);

// Uncovered-area estimate: fraction of domain samples not inside any cell,
// times the domain area.
double coverage_gap_area(const PartitionLevel& level, const ConvexRegion& domain,
                         double sample_step = 0.01);

}  // namespace peanofill
