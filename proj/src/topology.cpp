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

#include "mcnoc/topology.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "mcnoc/error.hpp"

namespace mcnoc {

namespace {

std::optional<std::uint32_t> detect_base(std::uint64_t n,
                                         const std::vector<std::uint64_t>& g) {
  if (g.front() != 1) return std::nullopt;
  if (g.size() == 1) return static_cast<std::uint32_t>(n);
  const std::uint64_t s = g[1];
  std::uint64_t power = 1;
  for (std::uint64_t gj : g) {
    if (gj != power) return std::nullopt;
    power *= s;
  }
  if (power != n) return std::nullopt;
  return static_cast<std::uint32_t>(s);
}

}  // namespace

CirculantSpec::CirculantSpec(std::uint64_t n, std::vector<std::uint64_t> gens)
    : n_(n), gens_(std::move(gens)) {
  base_ = detect_base(n_, gens_);

  const auto m = static_cast<std::uint32_t>(gens_.size());
  codes_.resize(2 * std::size_t{m});
  for (std::uint32_t j = m; j-- > 0;) {
    if (2 * gens_[j] == n_) {
      ports_.push_back({j, +1});
      codes_[2 * j] = codes_[2 * j + 1] = PortCode{port_count()};
      continue;
    }
    ports_.push_back({j, -1});
    codes_[2 * j] = PortCode{port_count()};
    ports_.push_back({j, +1});
    codes_[2 * j + 1] = PortCode{port_count()};
  }
}

HopAction CirculantSpec::action_of(PortCode code) const {
  if (code.value == 0 || code.value > port_count()) {
    fail(ErrorKind::OutOfRange,
         "port code " + std::to_string(code.value) + " outside 1.." +
             std::to_string(port_count()));
  }
  return ports_[code.value - 1];
}

PortCode CirculantSpec::code_of(HopAction action) const {
  if (action.gen_index >= dimension() || (action.sign != 1 && action.sign != -1)) {
    fail(ErrorKind::OutOfRange, "invalid hop action");
  }
  return codes_[2 * std::size_t{action.gen_index} + (action.sign > 0 ? 1 : 0)];
}

NodeId CirculantSpec::apply(NodeId v, HopAction action) const {
  if (v >= n_) fail(ErrorKind::OutOfRange, "node id out of range");
  if (action.gen_index >= dimension()) {
    fail(ErrorKind::OutOfRange, "generatrix index out of range");
  }
  const std::uint64_t g = gens_[action.gen_index];
  const std::uint64_t step = action.sign > 0 ? g : n_ - g;
  return static_cast<NodeId>((v + step) % n_);
}

std::string CirculantSpec::label() const {
  std::ostringstream out;
  if (base_) {
    out << "MC(" << *base_ << ',' << dimension() << ')';
    return out.str();
  }
  out << "C(" << n_ << ';';
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    out << (j ? "," : "") << gens_[j];
  }
  out << ')';
  return out.str();
}

CirculantSpec make_multiplicative(std::uint32_t s, std::uint32_t k) {
  if (s < 2) fail(ErrorKind::InvalidArgument, "base s must be at least 2");
  if (k < 1) fail(ErrorKind::InvalidArgument, "dimension k must be at least 1");
  std::vector<std::uint64_t> gens;
  std::uint64_t n = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    gens.push_back(n);
    n *= s;
    if (n > kMaxOrder) {
      fail(ErrorKind::InvalidArgument,
           "s^k exceeds the supported order " + std::to_string(kMaxOrder));
    }
  }
  if (n < 3) fail(ErrorKind::InvalidArgument, "s^k must be at least 3");
  return CirculantSpec(n, std::move(gens));
}

CirculantSpec make_circulant(std::uint64_t n,
                             std::span<const std::uint64_t> gens) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "order n must be at least 3");
  if (n > kMaxOrder) fail(ErrorKind::InvalidArgument, "order n too large");
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "no generatrices given");
  std::uint64_t divisor = n;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j] < 1 || gens[j] > n / 2) {
      fail(ErrorKind::InvalidArgument,
           "generatrix " + std::to_string(gens[j]) + " outside 1.." +
               std::to_string(n / 2));
    }
    if (j > 0 && gens[j] <= gens[j - 1]) {
      fail(ErrorKind::InvalidArgument,
           "generatrices must be strictly increasing");
    }
    divisor = std::gcd(divisor, gens[j]);
  }
  if (divisor != 1) {
    fail(ErrorKind::InvalidArgument,
         "circulant is disconnected (gcd " + std::to_string(divisor) + ")");
  }
  return CirculantSpec(n, {gens.begin(), gens.end()});
}

void check_node(const CirculantSpec& spec, NodeId v) {
  if (v >= spec.order()) {
    fail(ErrorKind::OutOfRange, "node " + std::to_string(v) + " outside 0.." +
                                    std::to_string(spec.order() - 1));
  }
}

std::vector<Neighbor> neighbors(const CirculantSpec& spec, NodeId v) {
  check_node(spec, v);
  std::vector<Neighbor> out;
  out.reserve(spec.port_count());
  const auto ports = spec.ports();
  for (std::uint32_t i = 0; i < ports.size(); ++i) {
    out.push_back({spec.apply(v, ports[i]), ports[i], PortCode{i + 1}});
  }
  return out;
}

std::string topology_document(const CirculantSpec& spec) {
  nlohmann::ordered_json doc;
  if (spec.base()) {
    doc["s"] = *spec.base();
  } else {
    doc["s"] = nullptr;
  }
  doc["k"] = spec.dimension();
  doc["n"] = spec.order();
  doc["generatrices"] = std::vector<std::uint64_t>(spec.generatrices().begin(),
                                                   spec.generatrices().end());
  auto ports = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < spec.port_count(); ++i) {
    const HopAction a = spec.ports()[i];
    nlohmann::ordered_json p;
    p["code"] = i + 1;
    p["gen"] = spec.generatrix(a.gen_index);
    p["sign"] = a.sign;
    ports.push_back(std::move(p));
  }
  doc["ports"] = std::move(ports);
  return doc.dump(2) + "\n";
}

}  // namespace mcnoc
