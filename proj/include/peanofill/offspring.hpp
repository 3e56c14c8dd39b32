#pragma once
// Assembly of one refinement step for a single soul: align the sweep net of
// the remainder with the anti-net of the base, insert the disturbance
// station, combine, intersect, and double into a population of souls.
//
// The three building blocks are memoized by component fingerprint (station
// by the disturbance, net by the remainder, anti-net by the base) so that
// parents sharing a component reproduce identical pieces, which is what the
// functional offspring axioms require across calls.

#include <unordered_map>

#include "peanofill/nets_stations.hpp"
#include "peanofill/seq_algebra.hpp"

namespace peanofill {

struct StretchMap {
  std::vector<int> targets;  // 1-based source index per output slot
  int source_len = 0;
  int target_len = 0;

  void validate() const;  // nondecreasing, surjective, sized
  static StretchMap identity(int n);
  static StretchMap repeat_index(int n, int index, int extra);  // repeat one slot
};

template <typename T>
std::vector<T> stretch(const std::vector<T>& src, const StretchMap& map) {
  map.validate();
  if (static_cast<int>(src.size()) != map.source_len) {
    throw std::invalid_argument("stretch: source length mismatch");
  }
  std::vector<T> out;
  out.reserve(map.targets.size());
  for (int k : map.targets) out.push_back(src[static_cast<std::size_t>(k - 1)]);
  return out;
}

SetSequence stretch(const SetSequence& seq, const StretchMap& map);

// Stretches of the two skeletons to common length m+n with pointwise gap
// bounded by gamma (endpoint gaps must be within gamma).
std::pair<StretchMap, StretchMap> merge_skeletons(const Skeleton& chi, const Skeleton& psi,
                                                  double gamma);

struct OffspringParams {
  NetParams net;
  long long m_prime = 0;  // 2 * (2*n1 + n_star)
  Axis axis = Axis::X;
};

OffspringParams make_offspring_params(const NetParams& net, Axis axis);

struct AlignedSequences {
  std::vector<ConvexRegion> net, anti;
  std::vector<double> chi_plus, chi_minus;
  std::vector<double> net_positions, anti_positions;
  double skeleton_gap = 0.0;  // measured ||chi+ - chi-||_inf after merging
};

struct StationInsertion {
  std::vector<ConvexRegion> net, anti;
  std::vector<double> chi_minus;
  std::vector<double> net_positions;
  std::vector<Region> station;
  long long l0 = 0;
  bool spread = false;  // distributed insertion for sweep-wide disturbances
};

struct OffspringResult {
  SoulSequence souls;  // length m_prime
  std::vector<ConvexRegion> cells;  // length n_hat (before doubling)
  StationInsertion quintuple;
  long long n_hat = 0;
  bool spread_station = false;
  double max_disturbance_diameter = 0.0;
  double max_disturbance_axis_extent = 0.0;  // along the sweep axis
};

// Stage-level operations (exposed for tests; the builder composes them).
AlignedSequences align_net_antinet(const Soul& soul, const Net& plus, const Net& minus,
                                   const OffspringParams& params);
StationInsertion insert_station(const AlignedSequences& aligned, const Station& station,
                                const Soul& soul, const OffspringParams& params);
OffspringResult combine_and_intersect(const StationInsertion& quintuple, const Soul& soul,
                                      const OffspringParams& params);

class OffspringBuilder {
 public:
  OffspringBuilder(OffspringParams params, RhoFamily fam);

  const OffspringParams& params() const { return params_; }
  // Full pipeline for one parent. Axis Y runs the x pipeline conjugated by
  // the coordinate swap.
  OffspringResult make_offspring(const Soul& soul);

  // Cache views for the functoriality tests.
  std::size_t net_cache_size() const { return net_cache_.size(); }
  std::size_t station_cache_size() const { return station_cache_.size(); }

 private:
  OffspringResult make_x(const Soul& soul);
  const Net& net_for(const ConvexRegion& remainder);
  const Net& anti_for(const ConvexRegion& base);
  const Station& station_for(const ConvexRegion& base, const ConvexRegion& remainder);

  OffspringParams params_;
  RhoFamily fam_work_;  // swapped domain when axis == Y
  std::unordered_map<std::uint64_t, Net> net_cache_;
  std::unordered_map<std::uint64_t, Net> anti_cache_;
  std::unordered_map<std::uint64_t, Station> station_cache_;
};

// Coordinate-swap helpers for the conjugated pipeline.
Soul swap_soul(const Soul& s);
Region swap_region(const Region& r);

}  // namespace peanofill
