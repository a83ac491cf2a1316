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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcnoc/error.hpp"
#include "mcnoc/format.hpp"
#include "mcnoc/greedy_route.hpp"
#include "mcnoc/metrics.hpp"
#include "mcnoc/simulator.hpp"
#include "mcnoc/static_route.hpp"

using namespace mcnoc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct PublishedRow {
  std::uint32_t s, k;
  std::uint32_t diameter;
  double avg_lo, avg_hi;  // equal unless the table prints an interval
  const char* mesh_diameter;
  const char* mesh_avg;
};

const std::vector<PublishedRow> kTable{
    {2, 4, 2, 1.33, 1.33, "6.00", "2.50"},   {2, 6, 3, 2.00, 2.00, "14.00", "5.25"},
    {3, 4, 4, 2.67, 2.67, "16.00", "5.93"},  {5, 4, 8, 4.80, 4.80, "48.00", "16.64"},
    {3, 6, 6, 4.00, 4.00, "52.00", "17.98"}, {6, 4, 10, 5.00, 6.00, "70.00", "23.98"},
    {7, 4, 12, 6.86, 6.86, "96.00", "32.65"},
};

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kRoutingSpecs{
    {2, 4}, {2, 6}, {3, 3}, {4, 3}, {3, 4}};

Outcome table_diameters() {
  std::ostringstream d;
  bool ok = true;
  for (const auto& row : kTable) {
    const auto spec = make_multiplicative(row.s, row.k);
    const auto got = diameter(spec);
    ok &= got == row.diameter;
    d << spec.label() << "=" << got << (got == row.diameter ? " " : "(!) ");
  }
  return {ok, d.str()};
}

Outcome mc2_diameter_formula() {
  std::ostringstream d;
  bool ok = true;
  for (std::uint32_t k = 2; k <= 12; ++k) {
    const auto got = diameter(make_multiplicative(2, k));
    const auto want = (k + 1) / 2;
    if (got != want) {
      ok = false;
      d << "k=" << k << " got " << got << " want " << want << " ";
    }
  }
  if (ok) d << "k=2..12 all equal ceil(k/2)";
  return {ok, d.str()};
}

Outcome mesh_columns() {
  std::ostringstream d;
  bool ok = true;
  for (const auto& row : kTable) {
    const auto n = make_multiplicative(row.s, row.k).order();
    const auto dm = fixed(mesh_diameter(n), 2);
    const auto av = fixed(mesh_avg(n), 2);
    const bool match = dm == row.mesh_diameter && av == row.mesh_avg;
    ok &= match;
    if (!match) d << "n=" << n << " got (" << dm << ", " << av << ") ";
  }
  if (ok) d << "7/7 rows match to 2 decimals";
  return {ok, d.str()};
}

Outcome average_distances() {
  std::ostringstream d;
  const double mc24 = average_distance(make_multiplicative(2, 4));
  bool ok = std::abs(mc24 - 23.0 / 15.0) <= 1e-9;
  d << "MC(2,4)=" << fixed(mc24, 9) << (ok ? "" : "(!)");
  for (const auto& row : kTable) {
    if (row.s == 2) continue;
    const auto spec = make_multiplicative(row.s, row.k);
    const double got = average_distance(spec);
    // Relative deviation from the nearest point of the published value.
    const double ref = std::clamp(got, row.avg_lo, row.avg_hi);
    const double dev = std::abs(got - ref) / ref;
    ok &= dev <= 0.15;
    d << "; " << spec.label() << "=" << fixed(got, 4) << " dev " << fixed(100 * dev, 2)
      << "%";
  }
  return {ok, d.str()};
}

Outcome source_round_trip() {
  std::uint64_t packets = 0;
  for (auto [s, k] : kRoutingSpecs) {
    const auto spec = make_multiplicative(s, k);
    const auto format = packet_format(spec);
    const auto n = static_cast<NodeId>(spec.order());
    for (NodeId src = 0; src < n; ++src) {
      const auto dist = bfs_distances(spec, src);
      for (NodeId dst = 0; dst < n; ++dst) {
        auto packet = build_packet(spec, format, src, dst);
        NodeId at = src;
        std::uint32_t hops = 0;
        for (;;) {
          auto step = consume_step(spec, packet);
          if (step.delivered()) break;
          at = spec.apply(at, *step.action);
          packet = std::move(step.packet);
          if (++hops > format.max_hops) break;
        }
        if (at != dst || hops != dist[dst] || !packet.path_field.is_zero()) {
          return {false, spec.label() + " " + std::to_string(src) + "->" +
                             std::to_string(dst) + " failed"};
        }
        ++packets;
      }
    }
  }
  return {true, std::to_string(packets) + " packets delivered in BFS-distance hops"};
}

Outcome greedy_correctness() {
  std::ostringstream d;
  bool ok = true;
  for (auto [s, k] : kRoutingSpecs) {
    const auto spec = make_multiplicative(s, k);
    const auto n = spec.order();
    auto cyclic = [&](NodeId a, NodeId b) {
      const auto r = relative_dest(spec, a, b);
      return std::min<std::uint64_t>(r, n - r);
    };
    for (NodeId src = 0; src < n; ++src) {
      for (NodeId dst = 0; dst < n; ++dst) {
        const auto path = greedy_path(spec, src, dst);
        bool good = path.back() == dst && path.size() - 1 <= cyclic(src, dst);
        for (std::size_t i = 1; i < path.size(); ++i) {
          good &= cyclic(path[i], dst) < cyclic(path[i - 1], dst);
        }
        if (!good) {
          ok = false;
          d << spec.label() << " " << src << "->" << dst << " broke progress; ";
        }
      }
    }
    const auto r = stretch_report(spec);
    d << spec.label() << " max " << fixed(r.max_stretch, 3) << " avg "
      << fixed(r.avg_stretch, 3) << " suboptimal " << r.suboptimal_pairs << "; ";
    for (const auto& p : r.worst_pairs) {
      d << "  " << p.src << "->" << p.dst << " " << p.greedy_hops << "/"
        << p.shortest_hops << "; ";
    }
  }
  return {ok, d.str()};
}

Outcome worked_example() {
  const auto spec = make_multiplicative(4, 3);
  const NodePath want{5, 21, 17};
  const auto a = next_hop(spec, 5, 17);
  const auto b = next_hop(spec, 21, 17);
  const bool ok = shortest_path(spec, 5, 17) == want && greedy_path(spec, 5, 17) == want &&
                  a.distance_in_direction == 12 && a.chosen == 16 &&
                  b.distance_in_direction == 4 && b.chosen == 4;
  return {ok, "bfs and greedy give 5 21 17; D=12 -> 16, Dd=4 -> 4"};
}

Outcome bench_shape() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> chain{
      {2, 4}, {2, 6}, {3, 4}, {5, 3}, {3, 5}, {6, 3}};
  constexpr std::uint32_t kRepeat = 9;
  std::ostringstream d;
  std::vector<double> ratios;
  for (auto [s, k] : chain) {
    const auto spec = make_multiplicative(s, k);
    const double bfs = bench_route_computation(spec, RouteAlgo::Bfs, kRepeat);
    const double greedy = bench_route_computation(spec, RouteAlgo::Greedy, kRepeat);
    ratios.push_back(bfs / greedy);
    d << spec.label() << " " << fixed(ratios.back(), 1) << "x; ";
  }
  const bool fast = ratios.back() >= 50.0;
  const bool monotone = std::is_sorted(ratios.begin(), ratios.end());
  d << "MC(6,3) >= 50x: " << (fast ? "yes" : "no")
    << ", monotone: " << (monotone ? "yes" : "no");
  return {fast && monotone, d.str()};
}

Outcome memory_formula() {
  const auto a = memory_bits(make_multiplicative(2, 4));
  const auto b = memory_bits(make_multiplicative(3, 2));
  bool ok = a.total_bits == 512 && b.total_bits == 171;
  std::uint32_t checked = 0;
  for (std::uint32_t s = 2; s <= 10; ++s) {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      if (std::pow(double(s), double(k)) < 3) continue;
      const auto spec = make_multiplicative(s, k);
      const auto exact = static_cast<std::uint32_t>(
          std::ceil(double(k) * std::log2(double(s)) - 1e-9));
      ok &= memory_bits(spec).address_bits == exact && ceil_log2(spec.order()) == exact;
      ++checked;
    }
  }
  return {ok, "MC(2,4)=" + std::to_string(a.total_bits) + ", MC(3,2)=" +
                  std::to_string(b.total_bits) + ", P checked on " +
                  std::to_string(checked) + " specs"};
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(MCNOC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  out += "exit=" + std::to_string(pclose(pipe));
  return out;
}

Outcome cli_determinism() {
  const std::vector<std::string> commands{
      "gen --s 4 --k 3",
      "metrics --s 3 --k 4 --mesh-compare --format csv",
      "metrics --s 2 --k 6 --mesh-compare --format json",
      "route --s 4 --k 3 --from 5 --to 17 --algo bfs --show-packet",
      "route --s 4 --k 3 --from 5 --to 17 --algo greedy --show-packet",
      "simulate --s 3 --k 4 --algo bfs --traffic random:1000 --seed 7 --format csv",
      "simulate --s 3 --k 4 --algo greedy --traffic random:1000 --seed 7 --format json",
      "simulate --s 2 --k 6 --algo greedy --traffic all --seed 0 --format csv",
      "memory --s 5 --k 3 --format csv"};
  for (const auto& c : commands) {
    const auto a = capture(c);
    if (a != capture(c) || a.find("exit=0") == std::string::npos) {
      return {false, "differs or fails: " + c};
    }
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical across runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"table diameters", table_diameters},
      {"MC(2,k) diameter formula", mc2_diameter_formula},
      {"mesh columns", mesh_columns},
      {"average distance", average_distances},
      {"source-routing round trip", source_round_trip},
      {"greedy correctness and stretch", greedy_correctness},
      {"worked example 5->17 on MC(4,3)", worked_example},
      {"route computation timing shape", bench_shape},
      {"memory formula and address width", memory_formula},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first
              << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
