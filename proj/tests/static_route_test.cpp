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

#include <doctest.h>

#include <random>
#include <set>

#include "mcnoc/error.hpp"
#include "mcnoc/metrics.hpp"
#include "mcnoc/static_route.hpp"
#include "oracle.hpp"

using namespace mcnoc;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected mcnoc::Error");
  return ErrorKind::Invariant;
}

}  // namespace

TEST_CASE("shortest_path examples") {
  const auto mc43 = make_multiplicative(4, 3);
  CHECK(shortest_path(mc43, 5, 17) == NodePath{5, 21, 17});
  CHECK(shortest_path(mc43, 9, 9) == NodePath{9});

  const auto mc24 = make_multiplicative(2, 4);
  const auto p = shortest_path(mc24, 0, 3);
  CHECK(p.size() == 3);
  CHECK(p.front() == 0);
  CHECK(p.back() == 3);
  // Ports in order +-8, -4, +4, ...: 3 is first discovered from 4.
  CHECK(p == NodePath{0, 4, 3});

  CHECK_THROWS_AS(shortest_path(mc24, 0, 16), Error);
}

TEST_CASE("early-exit search and the full BFS tree pick the same path") {
  for (auto [s, k] : {std::pair{2u, 5u}, {3u, 3u}, {4u, 3u}, {5u, 2u}}) {
    const auto spec = make_multiplicative(s, k);
    for (NodeId src = 0; src < spec.order(); src += 5) {
      const ShortestPathTree tree(spec, src);
      for (NodeId dst = 0; dst < spec.order(); ++dst) {
        CHECK(tree.path_to(dst) == shortest_path(spec, src, dst));
      }
    }
  }
}

TEST_CASE("shortest paths are simple, adjacent and optimal") {
  const auto spec = make_multiplicative(3, 4);
  const auto [n, gens] = oracle::mc(3, 4);
  const auto fw = oracle::floyd_warshall(n, gens);
  for (NodeId src = 0; src < n; src += 7) {
    for (NodeId dst = 0; dst < n; ++dst) {
      const auto path = shortest_path(spec, src, dst);
      CHECK(path.size() == fw[src][dst] + 1);
      CHECK(std::set<NodeId>(path.begin(), path.end()).size() == path.size());
      for (std::size_t i = 1; i < path.size(); ++i) {
        CHECK(oracle::adjacent(n, gens, path[i - 1], path[i]));
      }
    }
  }
}

TEST_CASE("path_to_actions") {
  const auto mc43 = make_multiplicative(4, 3);
  const NodePath p{5, 21, 17};
  const auto actions = path_to_actions(mc43, p);
  REQUIRE(actions.size() == 2);
  CHECK(actions[0] == HopAction{2, +1});  // +16
  CHECK(actions[1] == HopAction{1, -1});  // -4

  const NodePath single{7};
  CHECK(path_to_actions(mc43, single).empty());

  const auto mc24 = make_multiplicative(2, 4);
  const NodePath back{0, 15};
  CHECK(path_to_actions(mc24, back) == std::vector<HopAction>{{0, -1}});

  const NodePath broken{0, 3};
  CHECK(kind_of([&] { path_to_actions(mc24, broken); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("PathField bit operations") {
  PathField f(130);
  CHECK(f.is_zero());
  f.set(0, 3, 5);
  f.set(62, 4, 0b1011);  // straddles the first word boundary
  f.set(127, 3, 0b111);
  CHECK(f.get(0, 3) == 5);
  CHECK(f.get(62, 4) == 0b1011);
  CHECK(f.get(127, 3) == 0b111);
  f.shift_right(62);
  CHECK(f.get(0, 4) == 0b1011);
  CHECK(f.get(65, 3) == 0b111);
  f.shift_right(70);
  CHECK(f.is_zero());
  CHECK_THROWS_AS(f.get(128, 3), Error);
  CHECK_THROWS_AS(f.set(0, 33, 0), Error);

  PathField g(6);
  g.set(0, 3, 2);
  g.set(3, 3, 3);
  CHECK(g.render(3) == "011|010");
  CHECK(PathField(0).render(3).empty());
}

TEST_CASE("packet_format") {
  const auto mc43 = make_multiplicative(4, 3);
  const auto f = packet_format(mc43);
  CHECK(f.bits_per_hop == 3);
  CHECK(f.max_hops == diameter(mc43));
  CHECK(packet_format(mc43, 9).max_hops == 9);
  // 11 ports need 4 bits, not k = 6.
  CHECK(packet_format(make_multiplicative(2, 6)).bits_per_hop == 4);
  CHECK(packet_format(make_multiplicative(2, 4)).bits_per_hop == 3);
}

TEST_CASE("encode_path examples") {
  const auto mc43 = make_multiplicative(4, 3);
  const PacketFormat two{3, 2};
  const std::vector<HopAction> actions{{2, +1}, {1, -1}};
  const auto p = encode_path(mc43, two, 17, actions);
  CHECK(p.hops_encoded == 2);
  CHECK(p.bits_per_hop == 3);
  CHECK(p.path_field.get(0, 3) == 2);
  CHECK(p.path_field.get(3, 3) == 3);
  CHECK(p.render() == "011|010");

  const auto empty = encode_path(mc43, two, 17, std::vector<HopAction>{});
  CHECK(empty.path_field.is_zero());
  CHECK(empty.hops_encoded == 0);

  const auto mc24 = make_multiplicative(2, 4);
  const auto diam = encode_path(mc24, packet_format(mc24), 8,
                                std::vector<HopAction>{{3, +1}});
  CHECK(diam.bits_per_hop == 3);
  CHECK(diam.path_field.get(0, 3) == 1);

  const std::vector<HopAction> three{{0, +1}, {0, +1}, {0, +1}};
  CHECK(kind_of([&] { encode_path(mc43, two, 3, three); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("consume_step examples") {
  const auto mc43 = make_multiplicative(4, 3);
  const PacketFormat two{3, 2};
  const auto p = encode_path(mc43, two, 17,
                             std::vector<HopAction>{{2, +1}, {1, -1}});
  const auto first = consume_step(mc43, p);
  REQUIRE(first.action.has_value());
  CHECK(*first.action == HopAction{2, +1});
  CHECK(first.packet.render() == "000|011");
  CHECK(first.packet.hops_encoded == 1);
  const auto second = consume_step(mc43, first.packet);
  REQUIRE(second.action.has_value());
  CHECK(*second.action == HopAction{1, -1});
  CHECK(consume_step(mc43, second.packet).delivered());
  // The input packet is untouched.
  CHECK(p.render() == "011|010");

  SourceRoutedPacket corrupt = p;
  corrupt.path_field.set(0, 3, 7);
  CHECK(kind_of([&] { consume_step(mc43, corrupt); }) == ErrorKind::CorruptPacket);
  // A zero code below non-zero bits is also corrupt.
  SourceRoutedPacket gap = p;
  gap.path_field.set(0, 3, 0);
  CHECK(kind_of([&] { consume_step(mc43, gap); }) == ErrorKind::CorruptPacket);
}

TEST_CASE("build_packet examples") {
  const auto mc43 = make_multiplicative(4, 3);
  const auto p = build_packet(mc43, 5, 17);
  CHECK(p.hops_encoded == 2);
  CHECK(p.path_field.get(0, 6) == (3u << 3 | 2u));
  CHECK(p.render().ends_with("011|010"));

  CHECK(build_packet(mc43, 4, 4).path_field.is_zero());

  const auto mc26 = make_multiplicative(2, 6);
  const auto q = build_packet(mc26, 0, 63);
  CHECK(q.hops_encoded == bfs_distances(mc26, 0)[63]);
  CHECK(q.hops_encoded <= 3);
}

TEST_CASE("round trip: consuming delivers at dst in BFS-distance hops") {
  for (auto [s, k] : {std::pair{2u, 4u}, {3u, 3u}, {2u, 6u}, {5u, 2u}, {9u, 1u}}) {
    const auto spec = make_multiplicative(s, k);
    const auto format = packet_format(spec);
    for (NodeId src = 0; src < spec.order(); ++src) {
      const auto dist = bfs_distances(spec, src);
      for (NodeId dst = 0; dst < spec.order(); ++dst) {
        auto packet = build_packet(spec, format, src, dst);
        CHECK(packet.hops_encoded == dist[dst]);
        CHECK(packet.hops_encoded <= format.max_hops);
        NodeId at = src;
        std::uint32_t hops = 0;
        for (;;) {
          auto step = consume_step(spec, packet);
          if (step.delivered()) break;
          at = spec.apply(at, *step.action);
          packet = std::move(step.packet);
          ++hops;
          REQUIRE(hops <= format.max_hops);
        }
        CHECK(at == dst);
        CHECK(hops == dist[dst]);
      }
    }
  }
}

TEST_CASE("packets are deterministic") {
  const auto spec = make_multiplicative(3, 4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<NodeId> pick(0, 80);
  for (int i = 0; i < 200; ++i) {
    const NodeId a = pick(rng);
    const NodeId b = pick(rng);
    CHECK(build_packet(spec, a, b) == build_packet(spec, a, b));
  }
}
