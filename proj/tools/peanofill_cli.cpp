// Command-line front end: build partitions, render them to SVG, verify the
// structural invariants of a partition file.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/input error, 3 resource
// budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "peanofill/construction.hpp"
#include "peanofill/partition_io.hpp"
#include "peanofill/svg.hpp"

using namespace peanofill;
using nlohmann::json;

namespace {

ConvexRegion shape_from_spec(const std::string& kind, double size, const std::string& file) {
  if (kind == "square") {
    return ConvexRegion::rectangle(0, 0, size, size);
  }
  if (kind == "disc") {
    return ConvexRegion::inscribed_polygon({{0, 0}, size / 2.0}, 96);
  }
  if (kind == "triangle") {
    return ConvexRegion::from_ccw({{0, 0}, {size, 0}, {size * 0.35, size * 0.8}});
  }
  if (kind == "polygon-file") {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read polygon file: " + file);
    std::vector<Point> pts;
    double x, y;
    while (in >> x >> y) pts.push_back({x, y});
    return ConvexRegion::hull_of(pts);
  }
  throw std::runtime_error("unknown shape: " + kind);
}

int cmd_build(const std::string& shape, double size, const std::string& shape_file,
              const std::string& out, int depth, double gamma0, long long budget,
              const std::string& mode, long long k_chain, long long j_cov) {
  ConvexRegion raw = shape_from_spec(shape, size, shape_file);
  auto [domain, transform] = normalize_domain(raw);
  Schedule schedule = make_schedule(depth, gamma0, k_chain, j_cov, mode == "strict", budget);
  std::vector<PartitionLevel> stack;
  try {
    stack = run(domain, depth, schedule);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    std::cerr << "completed levels: " << (e.level - 1) << "\n";
    return 3;
  }
  PartitionFile pf;
  pf.partition.levels = stack;
  pf.partition.domain = domain;
  pf.partition.transform = transform;
  pf.gammas = schedule.gammas;
  pf.betas = schedule.betas;
  pf.m_primes = schedule.m_primes;
  save_partition(pf, out);
  std::cout << "levels: " << stack.size() << "\n";
  for (const PartitionLevel& lvl : stack) {
    std::cout << "  j=" << lvl.j << " M=" << lvl.M << " m'=" << lvl.m_prime_used
              << " d_x=" << level_extent(lvl, ExtentMode::X)
              << " d_y=" << level_extent(lvl, ExtentMode::Y) << "\n";
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_render(const std::string& in, int level, int curve_samples, const std::string& out) {
  PartitionFile pf = load_partition(in);
  SvgOptions opts;
  opts.level = level;
  opts.curve_samples = curve_samples;
  if (level > 0 && static_cast<std::size_t>(level) > pf.partition.levels.size()) {
    std::cerr << "level " << level << " beyond built depth " << pf.partition.levels.size()
              << "\n";
    return 2;
  }
  save_svg(pf.partition, opts, out);
  std::cout << "wrote " << out << "\n";
  return 0;
}

json report_entry(const ValidationReport& rep) {
  json j;
  j["criterion"] = rep.criterion;
  j["pass"] = rep.pass;
  j["tol"] = rep.tol;
  j["measured"] = rep.measured;
  j["witness"] = {{"indices", rep.witness_indices}, {"detail", rep.detail}};
  return j;
}

int cmd_verify(const std::string& in, const std::string& criterion, double tol,
               const std::string& report_path) {
  PartitionFile pf = load_partition(in);
  const CurvePartition& cp = pf.partition;
  json report = json::array();
  bool all_pass = true;
  auto want = [&criterion](const char* name) {
    return criterion == "all" || criterion == name;
  };
  Schedule sched;
  sched.gammas = pf.gammas;
  sched.betas = pf.betas;
  sched.m_primes = pf.m_primes;
  sched.depth = static_cast<int>(cp.levels.size());

  for (std::size_t li = 0; li < cp.levels.size(); ++li) {
    const PartitionLevel& lvl = cp.levels[li];
    if (want("regular")) {
      ValidationReport r = validate_regular(lvl.souls, tol);
      r.criterion = "regular[j=" + std::to_string(lvl.j) + "]";
      all_pass &= r.pass;
      report.push_back(report_entry(r));
    }
    if (want("consistent")) {
      ValidationReport r = validate_consistent(lvl.souls, tol);
      r.criterion = "consistent[j=" + std::to_string(lvl.j) + "]";
      all_pass &= r.pass;
      report.push_back(report_entry(r));
    }
    if (want("population_of_sets") || want("population")) {
      ValidationReport r =
          validate_population_of_sets(level_bases(lvl), 1e-3 * cp.domain.area());
      r.criterion = "population_of_sets[j=" + std::to_string(lvl.j) + "]";
      all_pass &= r.pass;
      report.push_back(report_entry(r));
    }
    if (want("coverage")) {
      double gap = coverage_gap_area(lvl, cp.domain);
      ValidationReport r;
      r.criterion = "coverage[j=" + std::to_string(lvl.j) + "]";
      r.tol = 1e-3 * cp.domain.area();
      r.measured = gap;
      r.pass = gap <= r.tol;
      all_pass &= r.pass;
      report.push_back(report_entry(r));
    }
    if (want("refinement") && li + 1 < cp.levels.size()) {
      const PartitionLevel& child = cp.levels[li + 1];
      ValidationReport r = validate_refinement(level_bases(lvl), level_bases(child),
                                               static_cast<int>(child.m_prime_used), 5e-3);
      r.criterion = "refinement[j=" + std::to_string(lvl.j) + "->" + std::to_string(child.j) +
                    "]";
      all_pass &= r.pass;
      report.push_back(report_entry(r));
    }
    if (want("tau") && !sched.betas.empty()) {
      LevelTauReport r = check_level_tau(lvl, sched, cp.domain);
      json jt;
      jt["criterion"] = "tau[j=" + std::to_string(lvl.j) + "]";
      jt["pass"] = r.frho_pass;
      jt["axis_extent_pass"] = r.axis_extent_pass;
      jt["max_disturbance_diameter"] = r.max_disturbance_diameter;
      jt["max_disturbance_axis_extent"] = r.max_disturbance_axis_extent;
      jt["gamma"] = r.gamma;
      all_pass &= r.frho_pass;
      report.push_back(std::move(jt));
    }
  }
  if (want("extents")) {
    bool mono = true;
    for (std::size_t li = 1; li < cp.levels.size(); ++li) {
      if (level_extent(cp.levels[li], ExtentMode::X) >
              level_extent(cp.levels[li - 1], ExtentMode::X) + 1e-9 ||
          level_extent(cp.levels[li], ExtentMode::Y) >
              level_extent(cp.levels[li - 1], ExtentMode::Y) + 1e-9) {
        mono = false;
      }
    }
    json je;
    je["criterion"] = "extents_monotone";
    je["pass"] = mono;
    all_pass &= mono;
    report.push_back(std::move(je));
  }
  json root;
  root["pass"] = all_pass;
  root["checks"] = std::move(report);
  std::string text = root.dump(2);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << text;
  }
  std::cout << text << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex-filling partition engine"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "build a partition stack");
  std::string shape = "square", shape_file, out = "partition.json", mode = "adaptive";
  double size = 1.0, gamma0 = 0.2, tol = 1e-6;
  int depth = 3, level = -1, curve_samples = 0;
  long long budget = 1'000'000, k_chain = 2, j_cov = 2;
  build->add_option("--shape", shape, "square|disc|triangle|polygon-file");
  build->add_option("--size", size, "shape scale");
  build->add_option("--shape-file", shape_file, "vertex file for polygon-file");
  build->add_option("--out", out, "output partition path");
  build->add_option("--depth", depth, "levels to build");
  build->add_option("--gamma0", gamma0, "initial gamma, in (0, 1/4)");
  build->add_option("--budget", budget, "cell budget");
  build->add_option("--mode", mode, "adaptive|strict");
  build->add_option("--k-chain", k_chain, "uniform chain length (adaptive)");
  build->add_option("--j-cov", j_cov, "uniform ladder length (adaptive)");

  auto* render = app.add_subcommand("render", "render a partition to SVG");
  std::string rin = "partition.json", rout = "partition.svg";
  render->add_option("--in", rin, "partition path");
  render->add_option("--level", level, "level to draw (-1 = all)");
  render->add_option("--curve-samples", curve_samples, "polyline sample count");
  render->add_option("--out", rout, "SVG path");

  auto* verify = app.add_subcommand("verify", "verify a partition file");
  std::string vin = "partition.json", criterion = "all", report_path;
  verify->add_option("--in", vin, "partition path");
  verify->add_option("--criterion", criterion,
                     "all|regular|consistent|population_of_sets|coverage|refinement|tau|extents");
  verify->add_option("--tol", tol, "set-equality tolerance");
  verify->add_option("--report", report_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      if (!(gamma0 > 0.0 && gamma0 < 0.25)) {
        std::cerr << "gamma0 must lie in (0, 1/4)\n";
        return 2;
      }
      return cmd_build(shape, size, shape_file, out, depth, gamma0, budget, mode, k_chain,
                       j_cov);
    }
    if (render->parsed()) return cmd_render(rin, level, curve_samples, rout);
    if (verify->parsed()) return cmd_verify(vin, criterion, tol, report_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
