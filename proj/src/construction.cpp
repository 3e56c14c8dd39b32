#include "peanofill/construction.hpp"

#include <cmath>
#include <sstream>

namespace peanofill {

Schedule make_schedule(int depth, double gamma0, long long k_chain_eff, long long j_cov_eff,
                       bool strict, long long cell_budget) {
  if (depth < 1) throw std::invalid_argument("make_schedule: depth must be >= 1");
  if (!(gamma0 > 0.0 && gamma0 < 0.25)) {
    throw std::invalid_argument("gamma0 must lie in (0, 1/4)");
  }
  Schedule s;
  s.depth = depth;
  s.k_chain_eff = k_chain_eff;
  s.j_cov_eff = j_cov_eff;
  s.strict = strict;
  s.cell_budget = cell_budget;
  s.gammas.resize(static_cast<std::size_t>(depth) + 1);
  s.betas.resize(static_cast<std::size_t>(depth) + 1);
  for (int j = 1; j <= depth + 0; ++j) {
    s.gammas[static_cast<std::size_t>(j - 1)] =
        (j == 1) ? gamma0 : std::min(gamma0, 1.0 / (2.0 * (j + 2)));
  }
  // One extra gamma for the last transition's gamma'.
  s.gammas.back() = std::min(gamma0, 1.0 / (2.0 * (depth + 1 + 2)));
  s.betas[0] = 1.0;
  for (int j = 1; j <= depth; ++j) {
    double g = s.gammas[static_cast<std::size_t>(j - 1)];
    s.betas[static_cast<std::size_t>(j)] = std::max(2.0 * s.betas[static_cast<std::size_t>(j - 1)],
                                                    g + 1.0 / g);
  }
  for (int j = 1; j < depth; ++j) {
    NetParams p = compute_params(s.betas[static_cast<std::size_t>(j - 1)],
                                 s.gammas[static_cast<std::size_t>(j - 1)],
                                 s.gammas[static_cast<std::size_t>(j)]);
    if (!strict) p = with_lengths(p, k_chain_eff, j_cov_eff);
    s.params.push_back(p);
    s.m_primes.push_back(2 * (2 * p.n1 + p.n_star));
  }
  return s;
}

PartitionLevel init_level(const ConvexRegion& domain) {
  if (domain.empty()) throw std::invalid_argument("init_level: empty domain");
  if (domain.diameter() > 1.0 + 1e-9) {
    throw std::invalid_argument("init_level: domain not normalized");
  }
  auto [lo, hi] = domain.bbox();
  if (lo.x < -1.0 - 1e-9 || hi.x > 1.0 + 1e-9 || lo.y < -1.0 - 1e-9 || hi.y > 1.0 + 1e-9) {
    throw std::invalid_argument("init_level: domain not inside the frame");
  }
  PartitionLevel lvl;
  lvl.j = 1;
  lvl.M = 2;
  lvl.m_prime_used = 0;
  lvl.souls.souls = {Soul::whole(domain), Soul::whole(domain)};
  ValidationReport rep = validate_population_of_souls(lvl.souls, 1e-7);
  if (!rep.pass) throw std::logic_error("init_level: initial population invalid");
  return lvl;
}

PartitionLevel next_level(const PartitionLevel& level, const Schedule& schedule,
                          const ConvexRegion& domain) {
  int j = level.j;
  if (j >= schedule.depth) {
    throw std::invalid_argument("next_level: schedule exhausted");
  }
  const NetParams& np = schedule.params[static_cast<std::size_t>(j - 1)];
  long long m_prime = schedule.m_primes[static_cast<std::size_t>(j - 1)];
  long long cells = level.M * m_prime;
  if (cells > schedule.cell_budget) {
    std::ostringstream os;
    os << "cell budget exceeded at level " << (j + 1) << ": " << cells << " > "
       << schedule.cell_budget;
    throw BudgetExceeded(os.str(), j + 1, cells, schedule.cell_budget);
  }
  Axis axis = (j % 2 == 1) ? Axis::X : Axis::Y;
  RhoFamily fam = make_rho_family(std::max(1.0, np.beta_prime), domain);
  OffspringBuilder builder(make_offspring_params(np, axis), fam);
  std::vector<SoulSequence> soul_blocks;
  soul_blocks.reserve(static_cast<std::size_t>(level.M));
  for (long long K = 0; K < level.M; ++K) {
    try {
      OffspringResult res =
          builder.make_offspring(level.souls.souls[static_cast<std::size_t>(K)]);
      soul_blocks.push_back(std::move(res.souls));
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "offspring failed at level " << j << ", parent " << (K + 1) << ": " << e.what();
      throw std::runtime_error(os.str());
    }
  }
  PartitionLevel out;
  out.j = j + 1;
  out.M = cells;
  out.m_prime_used = m_prime;
  out.souls = anti_order(soul_blocks);
  ValidationReport pop = validate_population_of_souls(out.souls, 1e-6);
  if (!pop.pass) {
    std::ostringstream os;
    os << "level " << out.j << " failed " << pop.criterion << " at index ";
    for (int w : pop.witness_indices) os << w << " ";
    os << "(" << pop.detail << ")";
    throw std::runtime_error(os.str());
  }
  return out;
}

std::vector<PartitionLevel> run(const ConvexRegion& domain, int depth, const Schedule& schedule) {
  if (depth < 1) throw std::invalid_argument("run: depth must be >= 1");
  std::vector<PartitionLevel> stack;
  stack.push_back(init_level(domain));
  for (int j = 1; j < depth; ++j) {
    stack.push_back(next_level(stack.back(), schedule, domain));
    // Refinement check: each parent equals the union of its children block.
    const PartitionLevel& parent = stack[stack.size() - 2];
    const PartitionLevel& child = stack.back();
    ValidationReport ref = validate_refinement(level_bases(parent), level_bases(child),
                                               static_cast<int>(child.m_prime_used), 5e-3);
    if (!ref.pass) {
      throw std::runtime_error("refinement check failed between levels " +
                               std::to_string(parent.j) + " and " + std::to_string(child.j));
    }
    double gap = coverage_gap_area(child, domain);
    if (gap > 1e-3 * domain.area()) {
      throw std::runtime_error("coverage check failed at level " + std::to_string(child.j));
    }
  }
  return stack;
}

std::vector<ConvexRegion> level_bases(const PartitionLevel& level) {
  std::vector<ConvexRegion> out;
  out.reserve(level.souls.length());
  for (const Soul& s : level.souls.souls) out.push_back(s.base());
  return out;
}

double level_extent(const PartitionLevel& level, ExtentMode mode) {
  double worst = 0.0;
  for (const Soul& s : level.souls.souls) {
    worst = std::max(worst, extent(s.base(), mode));
  }
  return worst;
}

double coverage_gap_area(const PartitionLevel& level, const ConvexRegion& domain,
                         double sample_step) {
  auto [lo, hi] = domain.bbox();
  int nx = std::max(2, static_cast<int>((hi.x - lo.x) / sample_step));
  int ny = std::max(2, static_cast<int>((hi.y - lo.y) / sample_step));
  long long inside = 0, missed = 0;
  for (int i = 0; i <= nx; ++i) {
    for (int k = 0; k <= ny; ++k) {
      Point p{lo.x + (hi.x - lo.x) * i / nx, lo.y + (hi.y - lo.y) * k / ny};
      if (!domain.contains(p, -1e-9)) continue;
      ++inside;
      bool covered = false;
      for (const Soul& s : level.souls.souls) {
        if (s.base().contains(p, 1e-9)) {
          covered = true;
          break;
        }
      }
      if (!covered) ++missed;
    }
  }
  if (inside == 0) return 0.0;
  return domain.area() * static_cast<double>(missed) / static_cast<double>(inside);
}

LevelTauReport check_level_tau(const PartitionLevel& level, const Schedule& schedule,
                               const ConvexRegion& domain, int soul_samples) {
  LevelTauReport rep;
  int j = level.j;
  rep.gamma = schedule.gammas[static_cast<std::size_t>(std::min<std::size_t>(
      static_cast<std::size_t>(j - 1), schedule.gammas.size() - 1))];
  double beta_j = schedule.betas[static_cast<std::size_t>(j - 1)];
  RhoFamily fam = make_rho_family(std::max(1.0, beta_j), domain);
  // The sweep that produced level j ran along x for odd j-1, y for even.
  bool swept_x = ((j - 1) % 2 == 1);
  std::size_t stride = std::max<std::size_t>(1, level.souls.length() /
                                                    static_cast<std::size_t>(soul_samples));
  for (std::size_t k = 0; k < level.souls.length(); k += stride) {
    const Soul& s = level.souls.souls[k];
    ++rep.checked_souls;
    FRhoReport fr = check_F_rho(s.base(), fam, 24, 1000 + k);
    if (!fr.pass) rep.frho_pass = false;
    if (!s.disturbance_empty()) {
      FRhoReport fr2 = check_F_rho(s.remainder(), fam, 24, 2000 + k);
      if (!fr2.pass) rep.frho_pass = false;
    }
    Region d = s.disturbance();
    if (!d.empty()) {
      rep.max_disturbance_diameter = std::max(rep.max_disturbance_diameter, d.diameter());
      auto [dlo, dhi] = d.bbox();
      double axis_ext = swept_x ? (dhi.x - dlo.x) : (dhi.y - dlo.y);
      rep.max_disturbance_axis_extent = std::max(rep.max_disturbance_axis_extent, axis_ext);
    }
  }
  rep.axis_extent_pass = rep.max_disturbance_axis_extent <= rep.gamma + 1e-2;
  return rep;
}

}  // namespace peanofill
