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

#include "mcnoc/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>

#include "mcnoc/error.hpp"
#include "mcnoc/greedy_route.hpp"
#include "mcnoc/static_route.hpp"

namespace mcnoc {

const char* to_string(RoutingMode mode) {
  return mode == RoutingMode::Greedy ? "greedy" : "source_routed";
}

const char* to_string(RouteAlgo algo) {
  return algo == RouteAlgo::Greedy ? "greedy" : "bfs";
}

std::vector<std::pair<NodeId, NodeId>> traffic_pairs(
    const CirculantSpec& spec, const TrafficPattern& traffic,
    std::uint64_t seed) {
  const auto n = static_cast<NodeId>(spec.order());
  std::vector<std::pair<NodeId, NodeId>> pairs;

  if (std::holds_alternative<AllPairs>(traffic)) {
    pairs.reserve(std::uint64_t{n} * (n - 1));
    for (NodeId src = 0; src < n; ++src) {
      for (NodeId dst = 0; dst < n; ++dst) {
        if (src != dst) pairs.emplace_back(src, dst);
      }
    }
  } else if (const auto* single = std::get_if<SinglePair>(&traffic)) {
    check_node(spec, single->src);
    check_node(spec, single->dst);
    if (single->src == single->dst) {
      fail(ErrorKind::InvalidArgument, "traffic pair needs src != dst");
    }
    pairs.emplace_back(single->src, single->dst);
  } else {
    const auto& random = std::get<RandomPairs>(traffic);
    std::mt19937_64 gen(seed);
    pairs.reserve(random.count);
    while (pairs.size() < random.count) {
      const auto src = static_cast<NodeId>(gen() % n);
      const auto dst = static_cast<NodeId>(gen() % n);
      if (src != dst) pairs.emplace_back(src, dst);
    }
  }
  return pairs;
}

namespace {

struct Flight {
  NodeId at;
  NodeId dst;
  std::uint32_t hops = 0;
  SourceRoutedPacket packet;  // unused in greedy mode
  bool done = false;
};

// Routers act on local state only: their own id (`f.at`) and the header.
// Returns true once the packet is delivered at this router.
bool router_step(const CirculantSpec& spec, RoutingMode mode, Flight& f) {
  if (mode == RoutingMode::Greedy) {
    if (f.at == f.dst) return true;
    f.at = next_hop(spec, f.at, f.dst).next_node;
    ++f.hops;
    return false;
  }
  ConsumeResult step = consume_step(spec, f.packet);
  if (step.delivered()) {
    if (f.at != f.dst) {
      fail(ErrorKind::Invariant,
           "source route ended at node " + std::to_string(f.at) +
               " instead of " + std::to_string(f.dst));
    }
    return true;
  }
  f.at = spec.apply(f.at, *step.action);
  f.packet = std::move(step.packet);
  ++f.hops;
  return false;
}

}  // namespace

SimReport run(const CirculantSpec& spec, RoutingMode mode,
              const TrafficPattern& traffic, std::uint64_t seed) {
  if (mode == RoutingMode::Greedy && !spec.is_multiplicative()) {
    fail(ErrorKind::Unsupported, "greedy mode requires a multiplicative spec");
  }
  auto pairs = traffic_pairs(spec, traffic, seed);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::optional<PacketFormat> format =
      mode == RoutingMode::SourceRouted
          ? std::optional<PacketFormat>(packet_format(spec))
          : std::nullopt;

  SimReport report;
  report.mode = mode;
  std::uint64_t hop_sum = 0;

  // Packets never interact, so simulating one source's batch at a time gives
  // the same per-packet hop counts as injecting everything at once.
  for (std::size_t begin = 0; begin < pairs.size();) {
    const NodeId src = pairs[begin].first;
    std::size_t end = begin;
    while (end < pairs.size() && pairs[end].first == src) ++end;

    std::vector<Flight> flights;
    flights.reserve(end - begin);
    std::optional<ShortestPathTree> tree;
    if (format) tree.emplace(spec, src);
    for (std::size_t i = begin; i < end; ++i) {
      Flight f{src, pairs[i].second, 0, {}, false};
      if (tree) {
        const NodePath path = tree->path_to(f.dst);
        f.packet = encode_path(spec, *format, f.dst, path_to_actions(spec, path));
      }
      flights.push_back(std::move(f));
    }
    report.injected += flights.size();

    std::size_t in_flight = flights.size();
    for (std::uint64_t cycle = 0; in_flight > 0; ++cycle) {
      if (cycle > spec.order()) {
        fail(ErrorKind::Invariant, "packet undeliverable within n cycles");
      }
      for (Flight& f : flights) {
        if (f.done || !router_step(spec, mode, f)) continue;
        f.done = true;
        --in_flight;
        ++report.delivered;
        ++report.hop_histogram[f.hops];
        hop_sum += f.hops;
        report.max_hops = std::max(report.max_hops, f.hops);
      }
    }
    begin = end;
  }

  if (report.delivered != report.injected) {
    fail(ErrorKind::Invariant, "delivered count differs from injected count");
  }
  report.total_cycles = report.max_hops;
  report.avg_hops = report.delivered ? static_cast<double>(hop_sum) /
                                           static_cast<double>(report.delivered)
                                     : 0.0;
  return report;
}

double bench_route_computation(const CirculantSpec& spec, RouteAlgo algo,
                               std::uint32_t repeat) {
  if (spec.order() > kExhaustiveOrderLimit) {
    fail(ErrorKind::GuardExceeded,
         "benchmark needs n <= " + std::to_string(kExhaustiveOrderLimit));
  }
  if (algo == RouteAlgo::Greedy && !spec.is_multiplicative()) {
    fail(ErrorKind::Unsupported, "greedy routing requires a multiplicative spec");
  }
  repeat = std::max(repeat, 1u);
  const auto n = static_cast<NodeId>(spec.order());

  std::vector<double> samples;
  volatile std::size_t sink = 0;
  for (std::uint32_t r = 0; r < repeat; ++r) {
    std::size_t total = 0;
    const auto start = std::chrono::steady_clock::now();
    for (NodeId src = 0; src < n; ++src) {
      for (NodeId dst = 0; dst < n; ++dst) {
        if (src == dst) continue;
        if (algo == RouteAlgo::Bfs) {
          // Full BFS from the source, then the path as port actions.
          const ShortestPathTree tree(spec, src);
          total += path_to_actions(spec, tree.path_to(dst)).size();
          continue;
        }
        // Each router computes only its next step from (current, dst).
        for (NodeId v = src; v != dst; ++total) v = next_hop(spec, v, dst).next_node;
      }
    }
    const auto stop = std::chrono::steady_clock::now();
    sink = sink + total;
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid]
                            : 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace mcnoc
