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

namespace mcnoc {

using NodeId = std::uint32_t;

/// Largest order accepted for any circulant. Keeps node ids and the
/// intermediate `v + g` sums inside 32 bits.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

/// One edge traversal: move along generatrix `gen_index` in direction `sign`.
struct HopAction {
  std::uint32_t gen_index = 0;
  int sign = +1;  // +1 right (add), -1 left (subtract)

  friend bool operator==(const HopAction&, const HopAction&) = default;
};

/// Output port identifier. Codes run 1..port_count; 0 terminates a path.
struct PortCode {
  std::uint32_t value = 0;

  friend auto operator<=>(const PortCode&, const PortCode&) = default;
};

struct Neighbor {
  NodeId node;
  HopAction action;
  PortCode port;
};

/// An immutable circulant graph C(n; g_0 < g_1 < ... < g_{m-1}).
///
/// Multiplicative circulants MC(s, k) have n = s^k and g_j = s^j. A spec built
/// from an explicit generatrix list is recognised as multiplicative when it
/// matches that pattern; otherwise `base()` is empty and operations that rely
/// on the power structure reject it.
///
/// Ports are numbered from the largest generatrix down, left before right:
/// code(-g_{m-1}) = 1, code(+g_{m-1}) = 2, code(-g_{m-2}) = 3, ... A
/// diametral generatrix (2g = n) has a single port whose action carries
/// sign +1.
class CirculantSpec {
 public:
  std::uint64_t order() const noexcept { return n_; }
  std::uint32_t dimension() const noexcept {
    return static_cast<std::uint32_t>(gens_.size());
  }
  /// s for multiplicative specs.
  std::optional<std::uint32_t> base() const noexcept { return base_; }
  bool is_multiplicative() const noexcept { return base_.has_value(); }
  std::span<const std::uint64_t> generatrices() const noexcept { return gens_; }
  std::uint64_t generatrix(std::uint32_t j) const { return gens_.at(j); }

  std::uint32_t port_count() const noexcept {
    return static_cast<std::uint32_t>(ports_.size());
  }
  /// Port table, indexed by code - 1.
  std::span<const HopAction> ports() const noexcept { return ports_; }
  HopAction action_of(PortCode code) const;
  PortCode code_of(HopAction action) const;

  /// (v + sign * g) mod n. Throws OutOfRange for a bad node or gen index.
  NodeId apply(NodeId v, HopAction action) const;

  /// "MC(s,k)" or "C(n;g0,g1,...)".
  std::string label() const;

  friend bool operator==(const CirculantSpec& a, const CirculantSpec& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  friend CirculantSpec make_multiplicative(std::uint32_t, std::uint32_t);
  friend CirculantSpec make_circulant(std::uint64_t,
                                      std::span<const std::uint64_t>);

  CirculantSpec(std::uint64_t n, std::vector<std::uint64_t> gens);

  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> gens_;
  std::optional<std::uint32_t> base_;
  std::vector<HopAction> ports_;
  // codes_[2 * j] is the left port of generatrix j, codes_[2 * j + 1] the
  // right one. They coincide for a diametral generatrix.
  std::vector<PortCode> codes_;
};

CirculantSpec make_multiplicative(std::uint32_t s, std::uint32_t k);
CirculantSpec make_circulant(std::uint64_t n,
                             std::span<const std::uint64_t> gens);

/// Distinct neighbours of v in ascending port-code order.
std::vector<Neighbor> neighbors(const CirculantSpec& spec, NodeId v);

/// Throws OutOfRange unless v < n.
void check_node(const CirculantSpec& spec, NodeId v);

/// Topology document: {"s","k","n","generatrices","ports":[{"code","gen","sign"}]}.
/// `s` is null for a non-multiplicative spec.
std::string topology_document(const CirculantSpec& spec);

}  // namespace mcnoc
