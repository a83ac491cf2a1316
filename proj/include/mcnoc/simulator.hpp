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
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcnoc/topology.hpp"

namespace mcnoc {

enum class RoutingMode { SourceRouted, Greedy };

const char* to_string(RoutingMode mode);

struct AllPairs {};
struct RandomPairs {
  std::uint64_t count = 0;
};
struct SinglePair {
  NodeId src = 0;
  NodeId dst = 0;
};

using TrafficPattern = std::variant<AllPairs, RandomPairs, SinglePair>;

/// Source/destination pairs of a pattern, src != dst always.
///
/// RandomPairs draws from std::mt19937_64 seeded with `seed`: each pair takes
/// src = x0 mod n and dst = x1 mod n from two consecutive outputs, and is
/// redrawn when they coincide. SinglePair with src == dst throws
/// InvalidArgument.
std::vector<std::pair<NodeId, NodeId>> traffic_pairs(const CirculantSpec& spec,
                                                     const TrafficPattern& traffic,
                                                     std::uint64_t seed);

struct SimReport {
  RoutingMode mode = RoutingMode::SourceRouted;
  std::uint64_t injected = 0;
  std::uint64_t delivered = 0;
  std::map<std::uint32_t, std::uint64_t> hop_histogram;
  double avg_hops = 0.0;
  std::uint32_t max_hops = 0;
  std::uint64_t total_cycles = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Contention-free forwarding: every packet is injected at cycle 0 and moves
/// one hop per cycle, each router deciding from its own id, the packet header
/// and the spec. A packet still in flight after n cycles throws Invariant.
SimReport run(const CirculantSpec& spec, RoutingMode mode,
              const TrafficPattern& traffic, std::uint64_t seed = 0);

enum class RouteAlgo { Bfs, Greedy };

const char* to_string(RouteAlgo algo);

/// Median wall time, in seconds, of `repeat` sweeps that each compute one
/// route per ordered pair. Bfs runs a fresh search per pair. Throws
/// GuardExceeded above kExhaustiveOrderLimit nodes.
double bench_route_computation(const CirculantSpec& spec, RouteAlgo algo,
                               std::uint32_t repeat);

}  // namespace mcnoc
