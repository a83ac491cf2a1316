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

#include "mcnoc/greedy_route.hpp"

#include <algorithm>

#include "mcnoc/error.hpp"
#include "mcnoc/metrics.hpp"

namespace mcnoc {

namespace {

void require_multiplicative(const CirculantSpec& spec) {
  if (!spec.is_multiplicative()) {
    fail(ErrorKind::Unsupported,
         "greedy routing requires a multiplicative circulant, got " +
             spec.label());
  }
}

GreedyDecision decide(const CirculantSpec& spec, NodeId current, NodeId dst) {
  const std::uint64_t n = spec.order();
  const std::uint64_t d = relative_dest(spec, current, dst);

  GreedyDecision out;
  if (d <= n - d) {
    out.direction = +1;
    out.distance_in_direction = d;
  } else {
    out.direction = -1;
    out.distance_in_direction = n - d;
  }
  const std::uint64_t dd = out.distance_in_direction;

  // Generatrices are 1, s, s^2, ...; 1 <= dd so g_lo always exists.
  const auto gens = spec.generatrices();
  std::size_t lo = 0;
  while (lo + 1 < gens.size() && gens[lo + 1] <= dd) ++lo;
  out.g_lo = gens[lo];
  out.g_hi = lo + 1 < gens.size() ? gens[lo + 1] : out.g_lo;

  const std::uint64_t under = dd - out.g_lo;
  const std::uint64_t over = out.g_hi - dd;
  out.chosen = over < under ? out.g_hi : out.g_lo;

  const std::uint64_t step = out.direction > 0 ? out.chosen : n - out.chosen;
  out.next_node = static_cast<NodeId>((current + step) % n);
  return out;
}

// Keeps the `limit` worst pairs. Pairs arrive in (src, dst) order and the
// sort is stable, so ties stay in that order.
void trim_worst(std::vector<StretchPair>& pairs, std::size_t limit) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const StretchPair& a, const StretchPair& b) {
                     // a.g / a.s > b.g / b.s without rounding
                     return std::uint64_t{a.greedy_hops} * b.shortest_hops >
                            std::uint64_t{b.greedy_hops} * a.shortest_hops;
                   });
  if (pairs.size() > limit) pairs.resize(limit);
}

}  // namespace

std::uint64_t relative_dest(const CirculantSpec& spec, NodeId current,
                            NodeId dst) {
  check_node(spec, current);
  check_node(spec, dst);
  return (std::uint64_t{dst} + spec.order() - current) % spec.order();
}

GreedyDecision next_hop(const CirculantSpec& spec, NodeId current, NodeId dst) {
  require_multiplicative(spec);
  if (current == dst) {
    fail(ErrorKind::InvalidArgument, "already at destination, no hop needed");
  }
  return decide(spec, current, dst);
}

NodePath greedy_path(const CirculantSpec& spec, NodeId src, NodeId dst) {
  require_multiplicative(spec);
  check_node(spec, src);
  check_node(spec, dst);
  NodePath path{src};
  for (NodeId v = src; v != dst;) {
    if (path.size() > spec.order()) {
      fail(ErrorKind::Invariant, "greedy walk exceeded n hops");
    }
    v = decide(spec, v, dst).next_node;
    path.push_back(v);
  }
  return path;
}

std::uint32_t greedy_hops(const CirculantSpec& spec, NodeId src, NodeId dst) {
  require_multiplicative(spec);
  check_node(spec, src);
  check_node(spec, dst);
  std::uint32_t hops = 0;
  for (NodeId v = src; v != dst; ++hops) {
    if (hops >= spec.order()) {
      fail(ErrorKind::Invariant, "greedy walk exceeded n hops");
    }
    v = decide(spec, v, dst).next_node;
  }
  return hops;
}

StretchReport stretch_report(const CirculantSpec& spec,
                             std::size_t max_listed) {
  require_multiplicative(spec);
  const std::uint64_t n = spec.order();
  if (n > kExhaustiveOrderLimit) {
    fail(ErrorKind::GuardExceeded,
         "stretch report needs n <= " + std::to_string(kExhaustiveOrderLimit) +
             ", got " + std::to_string(n));
  }

  // d(u, v) = d(0, v - u) on a circulant.
  const std::vector<std::uint32_t> from_zero = bfs_distances(spec, 0);

  StretchReport report;
  report.max_stretch = 1.0;
  double stretch_sum = 0.0;
  std::vector<StretchPair> bad;
  for (NodeId src = 0; src < n; ++src) {
    for (NodeId dst = 0; dst < n; ++dst) {
      if (src == dst) continue;
      StretchPair p{src, dst, greedy_hops(spec, src, dst),
                    from_zero[relative_dest(spec, src, dst)]};
      if (p.greedy_hops < p.shortest_hops) {
        fail(ErrorKind::Invariant, "greedy route shorter than BFS distance");
      }
      const double st = p.stretch();
      stretch_sum += st;
      report.max_stretch = std::max(report.max_stretch, st);
      ++report.pairs;
      if (p.greedy_hops > p.shortest_hops) {
        ++report.suboptimal_pairs;
        bad.push_back(p);
        if (bad.size() >= 2 * max_listed + 64) trim_worst(bad, max_listed);
      }
    }
  }
  report.avg_stretch = report.pairs ? stretch_sum / report.pairs : 1.0;

  trim_worst(bad, max_listed);
  report.worst_pairs = std::move(bad);
  return report;
}

}  // namespace mcnoc
