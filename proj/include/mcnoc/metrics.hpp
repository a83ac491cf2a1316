// Copyright 2026 The mcnoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcnoc/topology.hpp"

namespace mcnoc {

/// Hop distance from `src` to every node, BFS in ascending port order.
std::vector<std::uint32_t> bfs_distances(const CirculantSpec& spec, NodeId src);

enum class SweepMode {
  /// Single BFS from node 0; valid because circulants are vertex-transitive.
  Transitive,
  /// BFS from every node. Used to cross-check the transitive shortcut.
  AllPairs,
};

struct DistanceSummary {
  std::uint32_t diameter = 0;
  /// Sum of d(i, j) over ordered pairs i != j.
  std::uint64_t total_distance = 0;
  std::uint64_t pair_count = 0;

  double average() const {
    return pair_count ? static_cast<double>(total_distance) /
                            static_cast<double>(pair_count)
                      : 0.0;
  }
  friend bool operator==(const DistanceSummary&, const DistanceSummary&) = default;
};

/// `threads` only affects AllPairs; sources are split into contiguous blocks
/// and the per-block results are merged, so the summary does not depend on it.
DistanceSummary distance_summary(const CirculantSpec& spec,
                                 SweepMode mode = SweepMode::Transitive,
                                 unsigned threads = 1);

std::uint32_t diameter(const CirculantSpec& spec,
                       SweepMode mode = SweepMode::Transitive);
double average_distance(const CirculantSpec& spec,
                        SweepMode mode = SweepMode::Transitive);

/// ceil(k / 2), the known diameter of MC(2, k).
std::uint32_t analytic_diameter_mc2(std::uint32_t k);
/// k / 3, an approximation of the MC(2, k) average distance. Requires k >= 2.
double analytic_avg_mc2(std::uint32_t k);

/// 2 (sqrt(n) - 1)
double mesh_diameter(std::uint64_t n);
/// 2 (n - 1) / (3 sqrt(n))
double mesh_avg(std::uint64_t n);

struct MetricsRow {
  std::string label;
  std::uint64_t n = 0;
  std::uint32_t diameter_bruteforce = 0;
  double avg_distance_bruteforce = 0.0;
  std::optional<std::uint32_t> diameter_analytic;  // s = 2 only
  std::optional<double> avg_distance_analytic;     // s = 2 only
  double mesh_diameter = 0.0;
  double mesh_avg = 0.0;
};

MetricsRow compare_row(const CirculantSpec& spec,
                       SweepMode mode = SweepMode::Transitive);

/// Smallest b with 2^b >= x; ceil_log2(1) == 0 and ceil_log2(0) == 0.
std::uint32_t ceil_log2(std::uint64_t x);

struct MemoryEstimate {
  std::uint64_t per_node_bits = 0;
  std::uint64_t total_bits = 0;
  /// Destination address width, ceil(log2 n).
  std::uint32_t address_bits = 0;
};

/// Router memory of the greedy scheme:
///   M = n * (2 ceil(log2 n) + k (ceil(log2 s^(k-1)) + 1) + 3 ceil(log2 k) + 2)
/// Throws Unsupported for a non-multiplicative spec.
MemoryEstimate memory_bits(const CirculantSpec& spec);

}  // namespace mcnoc
