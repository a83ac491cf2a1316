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

#include "mcnoc/static_route.hpp"

#include <algorithm>
#include <limits>

#include "mcnoc/error.hpp"
#include "mcnoc/metrics.hpp"

namespace mcnoc {

namespace {

constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

NodePath trace_back(const std::vector<NodeId>& parent, NodeId src,
                    NodeId dst) {
  NodePath path;
  for (NodeId v = dst; v != src; v = parent[v]) {
    if (parent[v] == kNoParent) {
      fail(ErrorKind::Invariant, "destination not reached by BFS");
    }
    path.push_back(v);
  }
  path.push_back(src);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ShortestPathTree::ShortestPathTree(const CirculantSpec& spec, NodeId src)
    : src_(src),
      parent_(spec.order(), kNoParent),
      dist_(spec.order(), kUnreached) {
  check_node(spec, src);
  std::vector<NodeId> queue;
  queue.reserve(spec.order());
  dist_[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const HopAction& a : spec.ports()) {
      const NodeId u = spec.apply(v, a);
      if (dist_[u] == kUnreached) {
        dist_[u] = dist_[v] + 1;
        parent_[u] = v;
        queue.push_back(u);
      }
    }
  }
}

NodePath ShortestPathTree::path_to(NodeId dst) const {
  if (dst >= parent_.size()) fail(ErrorKind::OutOfRange, "node out of range");
  return trace_back(parent_, src_, dst);
}

NodePath shortest_path(const CirculantSpec& spec, NodeId src, NodeId dst) {
  check_node(spec, src);
  check_node(spec, dst);
  if (src == dst) return {src};

  std::vector<NodeId> parent(spec.order(), kNoParent);
  std::vector<NodeId> queue;
  queue.reserve(spec.order());
  parent[src] = src;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const HopAction& a : spec.ports()) {
      const NodeId u = spec.apply(v, a);
      if (parent[u] != kNoParent) continue;
      parent[u] = v;
      if (u == dst) return trace_back(parent, src, dst);
      queue.push_back(u);
    }
  }
  fail(ErrorKind::Invariant, "destination not reached by BFS");
}

std::vector<HopAction> path_to_actions(const CirculantSpec& spec,
                                       std::span<const NodeId> path) {
  std::vector<HopAction> actions;
  if (path.empty()) return actions;
  check_node(spec, path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    check_node(spec, path[i]);
    const auto ports = spec.ports();
    const auto it = std::find_if(ports.begin(), ports.end(), [&](HopAction a) {
      return spec.apply(path[i - 1], a) == path[i];
    });
    if (it == ports.end()) {
      fail(ErrorKind::InvalidArgument,
           "nodes " + std::to_string(path[i - 1]) + " and " +
               std::to_string(path[i]) + " are not adjacent");
    }
    actions.push_back(*it);
  }
  return actions;
}

// -- PathField ---------------------------------------------------------------

PathField::PathField(std::uint32_t width_bits)
    : width_(width_bits), words_((width_bits + 63) / 64, 0) {}

bool PathField::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::uint32_t PathField::get(std::uint32_t offset, std::uint32_t count) const {
  if (count > 32 || offset + count > width_) {
    fail(ErrorKind::OutOfRange, "bit range outside path field");
  }
  std::uint64_t value = 0;
  for (std::uint32_t b = 0; b < count; ++b) {
    const std::uint32_t bit = offset + b;
    value |= ((words_[bit / 64] >> (bit % 64)) & 1u) << b;
  }
  return static_cast<std::uint32_t>(value);
}

void PathField::set(std::uint32_t offset, std::uint32_t count,
                    std::uint32_t value) {
  if (count > 32 || offset + count > width_) {
    fail(ErrorKind::OutOfRange, "bit range outside path field");
  }
  for (std::uint32_t b = 0; b < count; ++b) {
    const std::uint32_t bit = offset + b;
    const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
    if ((value >> b) & 1u) {
      words_[bit / 64] |= mask;
    } else {
      words_[bit / 64] &= ~mask;
    }
  }
}

void PathField::shift_right(std::uint32_t count) {
  if (count == 0) return;
  const std::size_t word_shift = count / 64;
  const std::uint32_t bit_shift = count % 64;
  const std::size_t size = words_.size();
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t from = i + word_shift;
    std::uint64_t w = from < size ? words_[from] >> bit_shift : 0;
    if (bit_shift != 0 && from + 1 < size) {
      w |= words_[from + 1] << (64 - bit_shift);
    }
    words_[i] = w;
  }
}

std::string PathField::render(std::uint32_t group) const {
  std::string out;
  for (std::uint32_t bit = width_; bit-- > 0;) {
    out.push_back(((words_[bit / 64] >> (bit % 64)) & 1u) ? '1' : '0');
    if (group != 0 && bit != 0 && bit % group == 0) out.push_back('|');
  }
  return out;
}

// -- packets -----------------------------------------------------------------

PacketFormat packet_format(const CirculantSpec& spec,
                           std::optional<std::uint32_t> max_hops) {
  PacketFormat f;
  f.bits_per_hop = ceil_log2(std::uint64_t{spec.port_count()} + 1);
  f.max_hops = max_hops ? *max_hops : diameter(spec);
  return f;
}

SourceRoutedPacket encode_path(const CirculantSpec& spec,
                               const PacketFormat& format, NodeId dst,
                               std::span<const HopAction> actions) {
  check_node(spec, dst);
  if (actions.size() > format.max_hops) {
    fail(ErrorKind::InvalidArgument,
         "path of " + std::to_string(actions.size()) +
             " hops exceeds the packet limit of " +
             std::to_string(format.max_hops));
  }
  SourceRoutedPacket packet;
  packet.dst = dst;
  packet.bits_per_hop = format.bits_per_hop;
  packet.path_field = PathField(format.width());
  packet.hops_encoded = static_cast<std::uint32_t>(actions.size());
  for (std::uint32_t i = 0; i < actions.size(); ++i) {
    packet.path_field.set(i * format.bits_per_hop, format.bits_per_hop,
                          spec.code_of(actions[i]).value);
  }
  return packet;
}

ConsumeResult consume_step(const CirculantSpec& spec,
                           const SourceRoutedPacket& packet) {
  ConsumeResult result{std::nullopt, packet};
  if (packet.path_field.is_zero()) return result;

  const std::uint32_t b = packet.bits_per_hop;
  if (b == 0 || b > packet.path_field.width()) {
    fail(ErrorKind::CorruptPacket, "packet hop width does not fit its field");
  }
  const std::uint32_t code = packet.path_field.get(0, b);
  if (code == 0 || code > spec.port_count()) {
    fail(ErrorKind::CorruptPacket,
         "port code " + std::to_string(code) + " outside 1.." +
             std::to_string(spec.port_count()));
  }
  result.action = spec.action_of(PortCode{code});
  result.packet.path_field.shift_right(b);
  if (result.packet.hops_encoded > 0) --result.packet.hops_encoded;
  return result;
}

SourceRoutedPacket build_packet(const CirculantSpec& spec,
                                const PacketFormat& format, NodeId src,
                                NodeId dst) {
  const NodePath path = shortest_path(spec, src, dst);
  return encode_path(spec, format, dst, path_to_actions(spec, path));
}

SourceRoutedPacket build_packet(const CirculantSpec& spec, NodeId src,
                                NodeId dst) {
  return build_packet(spec, packet_format(spec), src, dst);
}

}  // namespace mcnoc
