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

#include "mcnoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "mcnoc/error.hpp"

namespace mcnoc {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

DistanceSummary summarize_sources(const CirculantSpec& spec, NodeId first,
                                  NodeId last) {
  DistanceSummary out;
  for (NodeId src = first; src < last; ++src) {
    for (std::uint32_t d : bfs_distances(spec, src)) {
      out.diameter = std::max(out.diameter, d);
      out.total_distance += d;
    }
    out.pair_count += spec.order() - 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const CirculantSpec& spec,
                                         NodeId src) {
  check_node(spec, src);
  std::vector<std::uint32_t> dist(spec.order(), kUnreached);
  std::vector<NodeId> queue;
  queue.reserve(spec.order());
  dist[src] = 0;
  queue.push_back(src);
  const auto ports = spec.ports();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const HopAction& a : ports) {
      const NodeId u = spec.apply(v, a);
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (queue.size() != spec.order()) {
    fail(ErrorKind::Invariant, "BFS did not reach every node");
  }
  return dist;
}

DistanceSummary distance_summary(const CirculantSpec& spec, SweepMode mode,
                                 unsigned threads) {
  const auto n = static_cast<NodeId>(spec.order());
  if (mode == SweepMode::Transitive) {
    DistanceSummary one = summarize_sources(spec, 0, 1);
    one.total_distance *= n;
    one.pair_count *= n;
    return one;
  }

  threads = std::clamp(threads, 1u, std::max(1u, n));
  std::vector<DistanceSummary> parts(threads);
  std::vector<std::thread> workers;
  const NodeId block = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const NodeId first = std::min<NodeId>(n, t * block);
    const NodeId last = std::min<NodeId>(n, first + block);
    workers.emplace_back([&spec, &parts, t, first, last] {
      parts[t] = summarize_sources(spec, first, last);
    });
  }
  for (auto& w : workers) w.join();

  DistanceSummary out;
  for (const auto& p : parts) {
    out.diameter = std::max(out.diameter, p.diameter);
    out.total_distance += p.total_distance;
    out.pair_count += p.pair_count;
  }
  return out;
}

std::uint32_t diameter(const CirculantSpec& spec, SweepMode mode) {
  return distance_summary(spec, mode).diameter;
}

double average_distance(const CirculantSpec& spec, SweepMode mode) {
  return distance_summary(spec, mode).average();
}

std::uint32_t analytic_diameter_mc2(std::uint32_t k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "k must be at least 1");
  return (k + 1) / 2;
}

double analytic_avg_mc2(std::uint32_t k) {
  if (k < 2) fail(ErrorKind::InvalidArgument, "k must be at least 2");
  return static_cast<double>(k) / 3.0;
}

double mesh_diameter(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "mesh needs at least one node");
  return 2.0 * (std::sqrt(static_cast<double>(n)) - 1.0);
}

double mesh_avg(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "mesh needs at least one node");
  const double nd = static_cast<double>(n);
  return 2.0 * (nd - 1.0) / (3.0 * std::sqrt(nd));
}

MetricsRow compare_row(const CirculantSpec& spec, SweepMode mode) {
  const DistanceSummary summary = distance_summary(spec, mode);
  MetricsRow row;
  row.label = spec.label();
  row.n = spec.order();
  row.diameter_bruteforce = summary.diameter;
  row.avg_distance_bruteforce = summary.average();
  if (spec.base() == 2u) {
    row.diameter_analytic = analytic_diameter_mc2(spec.dimension());
    row.avg_distance_analytic = analytic_avg_mc2(spec.dimension());
  }
  row.mesh_diameter = mesh_diameter(spec.order());
  row.mesh_avg = mesh_avg(spec.order());
  return row;
}

std::uint32_t ceil_log2(std::uint64_t x) {
  std::uint32_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

MemoryEstimate memory_bits(const CirculantSpec& spec) {
  if (!spec.is_multiplicative()) {
    fail(ErrorKind::Unsupported,
         "memory estimate requires a multiplicative circulant");
  }
  const std::uint64_t n = spec.order();
  const std::uint32_t k = spec.dimension();
  const std::uint64_t largest_gen = spec.generatrix(k - 1);  // s^(k-1)

  MemoryEstimate m;
  m.address_bits = ceil_log2(n);
  m.per_node_bits = std::uint64_t{m.address_bits} + m.address_bits +
                    std::uint64_t{k} * (ceil_log2(largest_gen) + 1) +
                    3 * std::uint64_t{ceil_log2(k)} + 2;
  m.total_bits = n * m.per_node_bits;
  return m;
}

}  // namespace mcnoc
