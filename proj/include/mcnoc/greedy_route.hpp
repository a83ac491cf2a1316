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
#include <vector>

#include "mcnoc/static_route.hpp"
#include "mcnoc/topology.hpp"

namespace mcnoc {

// Greedy generatrix routing for MC(s, k).
//
// A router knows only its own id, the destination and (s, k). It takes the
// offset D = (dst - current) mod n, walks the shorter way round the ring
// (right on a tie), and of the largest generatrix not above the remaining
// distance and the next larger one picks whichever lands closer, allowing
// an overshoot. Equal candidates resolve to the smaller generatrix.

struct GreedyDecision {
  int direction = +1;
  std::uint64_t distance_in_direction = 0;  // min(D, n - D)
  std::uint64_t g_lo = 0;
  std::uint64_t g_hi = 0;
  std::uint64_t chosen = 0;
  NodeId next_node = 0;
};

/// (dst - current) mod n.
std::uint64_t relative_dest(const CirculantSpec& spec, NodeId current,
                            NodeId dst);

/// Throws InvalidArgument when current == dst, Unsupported for a spec that
/// is not multiplicative.
GreedyDecision next_hop(const CirculantSpec& spec, NodeId current, NodeId dst);

/// Node sequence from src to dst. A walk longer than n hops throws Invariant.
NodePath greedy_path(const CirculantSpec& spec, NodeId src, NodeId dst);

/// Hop count of greedy_path without materialising the path.
std::uint32_t greedy_hops(const CirculantSpec& spec, NodeId src, NodeId dst);

struct StretchPair {
  NodeId src = 0;
  NodeId dst = 0;
  std::uint32_t greedy_hops = 0;
  std::uint32_t shortest_hops = 0;

  double stretch() const {
    return static_cast<double>(greedy_hops) / static_cast<double>(shortest_hops);
  }
};

struct StretchReport {
  double max_stretch = 1.0;
  double avg_stretch = 1.0;
  std::uint64_t pairs = 0;
  /// Ordered pairs whose greedy route is longer than the shortest path.
  std::uint64_t suboptimal_pairs = 0;
  /// The suboptimal pairs, worst stretch first, then by (src, dst); truncated
  /// to the requested listing limit. `suboptimal_pairs` is always the full
  /// count.
  std::vector<StretchPair> worst_pairs;
};

inline constexpr std::uint64_t kExhaustiveOrderLimit = 10000;

/// Greedy against BFS over every ordered pair (src != dst). Throws
/// GuardExceeded when n > kExhaustiveOrderLimit.
StretchReport stretch_report(const CirculantSpec& spec,
                             std::size_t max_listed = 100);

}  // namespace mcnoc
