#include "peanofill/partition_io.hpp"

#include <fstream>

#include <json.hpp>

namespace peanofill {

namespace {

using nlohmann::json;

json ring_to_json(const ConvexRegion& r) {
  json arr = json::array();
  for (const Point& p : r.vertices()) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

ConvexRegion ring_from_json(const json& arr) {
  std::vector<Point> pts;
  for (const auto& q : arr) pts.push_back({q.at(0).get<double>(), q.at(1).get<double>()});
  return ConvexRegion::from_ccw(std::move(pts));
}

}  // namespace

std::string to_json(const PartitionFile& pf) {
  json meta;
  meta["gamma"] = pf.gammas;
  meta["beta"] = pf.betas;
  meta["m_prime"] = pf.m_primes;
  meta["transform"] = {{"scale", pf.partition.transform.scale},
                       {"offset", {pf.partition.transform.offset.x, pf.partition.transform.offset.y}},
                       {"axis_swap", pf.partition.transform.axis_swap},
                       {"x_negate", pf.partition.transform.x_negate}};
  meta["domain"] = ring_to_json(pf.partition.domain);
  json levels = json::array();
  for (const PartitionLevel& lvl : pf.partition.levels) {
    json cells = json::array();
    for (std::size_t k = 0; k < lvl.souls.length(); ++k) {
      const Soul& s = lvl.souls.souls[k];
      json cell;
      cell["K"] = k + 1;
      cell["base"] = ring_to_json(s.base());
      if (s.disturbance_empty()) {
        cell["disturbance"] = json::array();
      } else {
        cell["disturbance"] = ring_to_json(s.disturbance().outer());
        cell["remainder"] = ring_to_json(s.remainder());
      }
      cells.push_back(std::move(cell));
    }
    levels.push_back({{"j", lvl.j},
                      {"M", lvl.M},
                      {"m_prime_used", lvl.m_prime_used},
                      {"cells", std::move(cells)}});
  }
  json root;
  root["meta"] = std::move(meta);
  root["levels"] = std::move(levels);
  return root.dump();
}

PartitionFile from_json(const std::string& text) {
  json root = json::parse(text);
  PartitionFile pf;
  const json& meta = root.at("meta");
  pf.gammas = meta.at("gamma").get<std::vector<double>>();
  pf.betas = meta.at("beta").get<std::vector<double>>();
  pf.m_primes = meta.at("m_prime").get<std::vector<long long>>();
  const json& tr = meta.at("transform");
  pf.partition.transform.scale = tr.at("scale").get<double>();
  pf.partition.transform.offset = {tr.at("offset").at(0).get<double>(),
                                   tr.at("offset").at(1).get<double>()};
  pf.partition.transform.axis_swap = tr.at("axis_swap").get<bool>();
  pf.partition.transform.x_negate = tr.at("x_negate").get<bool>();
  pf.partition.domain = ring_from_json(meta.at("domain"));
  for (const json& jl : root.at("levels")) {
    PartitionLevel lvl;
    lvl.j = jl.at("j").get<int>();
    lvl.M = jl.at("M").get<long long>();
    lvl.m_prime_used = jl.value("m_prime_used", 0LL);
    for (const json& jc : jl.at("cells")) {
      ConvexRegion base = ring_from_json(jc.at("base"));
      if (jc.contains("remainder") && !jc.at("remainder").empty()) {
        lvl.souls.souls.push_back(
            Soul::with_remainder(std::move(base), ring_from_json(jc.at("remainder"))));
      } else {
        lvl.souls.souls.push_back(Soul::whole(std::move(base)));
      }
    }
    if (static_cast<long long>(lvl.souls.length()) != lvl.M) {
      throw std::runtime_error("partition file: cell count mismatch at level " +
                               std::to_string(lvl.j));
    }
    pf.partition.levels.push_back(std::move(lvl));
  }
  return pf;
}

void save_partition(const PartitionFile& pf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json(pf);
}

PartitionFile load_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json(text);
}

}  // namespace peanofill
