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
#include <span>
#include <string>
#include <vector>

#include "mcnoc/topology.hpp"

namespace mcnoc {

using NodePath = std::vector<NodeId>;

/// BFS predecessor tree rooted at one source. Neighbours are explored in
/// ascending port order and the first discovered predecessor is kept, so the
/// tree (and every path taken from it) is fully determined by the spec.
class ShortestPathTree {
 public:
  ShortestPathTree(const CirculantSpec& spec, NodeId src);

  NodeId source() const noexcept { return src_; }
  std::uint32_t distance(NodeId dst) const { return dist_.at(dst); }
  NodePath path_to(NodeId dst) const;

 private:
  NodeId src_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> dist_;
};

/// A shortest path, identical to `ShortestPathTree(spec, src).path_to(dst)`
/// but stopping the search once dst is discovered.
NodePath shortest_path(const CirculantSpec& spec, NodeId src, NodeId dst);

/// One action per edge. Throws InvalidArgument on non-adjacent neighbours.
std::vector<HopAction> path_to_actions(const CirculantSpec& spec,
                                       std::span<const NodeId> path);

/// Fixed-width little-endian bit string holding the hop codes of a packet.
class PathField {
 public:
  PathField() = default;
  explicit PathField(std::uint32_t width_bits);

  std::uint32_t width() const noexcept { return width_; }
  bool is_zero() const noexcept;
  /// Bits [offset, offset + count), count <= 32.
  std::uint32_t get(std::uint32_t offset, std::uint32_t count) const;
  void set(std::uint32_t offset, std::uint32_t count, std::uint32_t value);
  void shift_right(std::uint32_t count);
  /// Bits as '0'/'1', most significant first, split into `group`-bit chunks
  /// with '|'.
  std::string render(std::uint32_t group) const;

  friend bool operator==(const PathField&, const PathField&) = default;

 private:
  std::uint32_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sizing of the path field: B bits per hop and room for `max_hops` hops.
struct PacketFormat {
  std::uint32_t bits_per_hop = 0;  // ceil(log2(port_count + 1))
  std::uint32_t max_hops = 0;      // H_max

  std::uint32_t width() const noexcept { return bits_per_hop * max_hops; }
  friend bool operator==(const PacketFormat&, const PacketFormat&) = default;
};

/// B from the port count, H_max = diameter unless overridden.
PacketFormat packet_format(const CirculantSpec& spec,
                           std::optional<std::uint32_t> max_hops = std::nullopt);

struct SourceRoutedPacket {
  NodeId dst = 0;
  PathField path_field;
  std::uint32_t bits_per_hop = 0;
  std::uint32_t hops_encoded = 0;

  /// Full field, most significant hop group first ("000|011|010").
  std::string render() const { return path_field.render(bits_per_hop); }
  friend bool operator==(const SourceRoutedPacket&,
                         const SourceRoutedPacket&) = default;
};

/// Hop i is stored at bits [i*B, (i+1)*B). Throws InvalidArgument when the
/// path has more than H_max hops.
SourceRoutedPacket encode_path(const CirculantSpec& spec,
                               const PacketFormat& format, NodeId dst,
                               std::span<const HopAction> actions);

struct ConsumeResult {
  std::optional<HopAction> action;  // empty once delivered
  SourceRoutedPacket packet;

  bool delivered() const noexcept { return !action.has_value(); }
};

/// One router step: an all-zero field means delivered, otherwise the low B
/// bits select the output port and the field shifts right by B. Throws
/// CorruptPacket for code 0 under a non-zero field or a code past port_count.
ConsumeResult consume_step(const CirculantSpec& spec,
                           const SourceRoutedPacket& packet);

SourceRoutedPacket build_packet(const CirculantSpec& spec,
                                const PacketFormat& format, NodeId src,
                                NodeId dst);
SourceRoutedPacket build_packet(const CirculantSpec& spec, NodeId src,
                                NodeId dst);

}  // namespace mcnoc
