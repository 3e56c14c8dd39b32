#pragma once
// Partition file format: self-contained JSON with the schedule metadata,
// the frame transform, and per-level cells (base polygon, disturbance outer
// ring, convex remainder for exact reload). Coordinates live in the
// normalized frame.

#include <string>

#include "peanofill/curve.hpp"

namespace peanofill {

struct PartitionFile {
  CurvePartition partition;
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<long long> m_primes;
};

std::string to_json(const PartitionFile& pf);
PartitionFile from_json(const std::string& text);

void save_partition(const PartitionFile& pf, const std::string& path);
PartitionFile load_partition(const std::string& path);

}  // namespace peanofill
