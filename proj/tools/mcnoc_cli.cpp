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

// mcnoc: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage or argument error, 2 invariant violation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcnoc/mcnoc.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what)
      : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

void check(mcnoc_status st) {
  if (st == MCNOC_OK) return;
  const bool internal = st == MCNOC_ERR_INVARIANT ||
                        st == MCNOC_ERR_CORRUPT_PACKET ||
                        st == MCNOC_ERR_INTERNAL;
  throw CommandError(internal ? kExitInvariant : kExitUsage,
                     std::string(mcnoc_status_string(st)) + ": " +
                         mcnoc_last_error());
}

struct TopologyDeleter {
  void operator()(mcnoc_topology* t) const { mcnoc_topology_free(t); }
};
struct PacketDeleter {
  void operator()(mcnoc_packet* p) const { mcnoc_packet_free(p); }
};
struct ReportDeleter {
  void operator()(mcnoc_sim_report* r) const { mcnoc_sim_report_free(r); }
};
using Topology = std::unique_ptr<mcnoc_topology, TopologyDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char* raw) {
  std::string out = raw ? raw : "";
  mcnoc_string_free(raw);
  return out;
}

Topology make_topology(std::uint32_t s, std::uint32_t k) {
  mcnoc_topology* raw = nullptr;
  check(mcnoc_topology_multiplicative(s, k, &raw));
  return Topology(raw);
}

const std::map<std::string, mcnoc_format> kFormats{
    {"table", MCNOC_FORMAT_TABLE},
    {"csv", MCNOC_FORMAT_CSV},
    {"json", MCNOC_FORMAT_JSON}};

const std::map<std::string, mcnoc_algo> kAlgos{{"bfs", MCNOC_ALGO_BFS},
                                                 {"greedy", MCNOC_ALGO_GREEDY}};

std::uint32_t parse_u32(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-' || v > UINT32_MAX) {
    throw CommandError(kExitUsage, std::string("invalid ") + what + ": " + text);
  }
  return static_cast<std::uint32_t>(v);
}

// all | random:N | pair:SRC:DST
mcnoc_traffic parse_traffic(const std::string& text) {
  mcnoc_traffic t{};
  if (text == "all") {
    t.kind = MCNOC_TRAFFIC_ALL_PAIRS;
    return t;
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "random" && !rest.empty()) {
    t.kind = MCNOC_TRAFFIC_RANDOM;
    t.count = parse_u32(rest, "packet count");
    return t;
  }
  const auto second = rest.find(':');
  if (kind == "pair" && second != std::string::npos) {
    t.kind = MCNOC_TRAFFIC_PAIR;
    t.src = parse_u32(rest.substr(0, second), "source node");
    t.dst = parse_u32(rest.substr(second + 1), "destination node");
    return t;
  }
  throw CommandError(kExitUsage, "invalid --traffic '" + text +
                                     "', expected all, random:N or pair:SRC:DST");
}

std::string address_bits(std::uint32_t node, std::uint32_t width) {
  std::string out;
  for (std::uint32_t b = width; b-- > 0;) out += ((node >> b) & 1u) ? '1' : '0';
  return out;
}

struct Options {
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  std::string out_file;
  bool mesh_compare = false;
  mcnoc_format format = MCNOC_FORMAT_TABLE;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  mcnoc_algo algo = MCNOC_ALGO_BFS;
  bool show_packet = false;
  std::string traffic = "all";
  std::uint64_t seed = 0;
  std::uint32_t repeat = 3;
};

void add_topology_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--s", o.s, "Circulant base s (>= 2)")->required();
  cmd->add_option("--k", o.k, "Circulant dimension k (>= 1)")->required();
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: table, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

int cmd_gen(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  char* raw = nullptr;
  check(mcnoc_topology_document(topo.get(), &raw));
  const std::string doc = take(raw);
  if (o.out_file.empty()) {
    std::cout << doc;
    return 0;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file || !(file << doc)) {
    throw CommandError(kExitUsage, "cannot write " + o.out_file);
  }
  return 0;
}

int cmd_metrics(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  char* raw = nullptr;
  check(mcnoc_metrics_render(topo.get(), o.format, o.mesh_compare ? 1 : 0, &raw));
  std::cout << take(raw);
  return 0;
}

int cmd_route(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  std::vector<std::uint32_t> path(16);
  std::size_t length = 0;
  mcnoc_status st = mcnoc_route(topo.get(), o.algo, o.from, o.to, path.data(),
                                path.size(), &length);
  if (st == MCNOC_ERR_BUFFER_TOO_SMALL) {
    path.resize(length);
    st = mcnoc_route(topo.get(), o.algo, o.from, o.to, path.data(), path.size(),
                     &length);
  }
  check(st);
  for (std::size_t i = 0; i < length; ++i) {
    std::cout << (i ? " " : "") << path[i];
  }
  std::cout << '\n';

  if (!o.show_packet) return 0;
  if (o.algo == MCNOC_ALGO_GREEDY) {
    // The greedy header carries only the destination address.
    mcnoc_memory_estimate m{};
    check(mcnoc_memory_estimate_compute(topo.get(), &m));
    std::cout << "address: " << address_bits(o.to, m.address_bits) << '\n';
    return 0;
  }
  mcnoc_packet* raw = nullptr;
  check(mcnoc_packet_build(topo.get(), o.from, o.to, 0, &raw));
  std::unique_ptr<mcnoc_packet, PacketDeleter> packet(raw);
  char* text = nullptr;
  check(mcnoc_packet_render(packet.get(), &text));
  std::cout << "packet: " << take(text) << '\n';
  return 0;
}

int cmd_simulate(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  const mcnoc_traffic traffic = parse_traffic(o.traffic);
  mcnoc_sim_report* raw = nullptr;
  check(mcnoc_simulate(topo.get(), o.algo, &traffic, o.seed, &raw));
  std::unique_ptr<mcnoc_sim_report, ReportDeleter> report(raw);
  char* text = nullptr;
  check(mcnoc_sim_report_render(report.get(), o.format, &text));
  std::cout << take(text);
  return 0;
}

int cmd_memory(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  char* raw = nullptr;
  check(mcnoc_memory_render(topo.get(), o.format, &raw));
  std::cout << take(raw);
  return 0;
}

int cmd_bench(const Options& o) {
  const Topology topo = make_topology(o.s, o.k);
  double bfs = 0.0;
  double greedy = 0.0;
  check(mcnoc_bench(topo.get(), MCNOC_ALGO_BFS, o.repeat, &bfs));
  check(mcnoc_bench(topo.get(), MCNOC_ALGO_GREEDY, o.repeat, &greedy));
  char* raw = nullptr;
  check(mcnoc_bench_render(topo.get(), bfs, greedy, o.format, &raw));
  std::cout << take(raw);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative circulant network-on-chip toolkit", "mcnoc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mcnoc_version());
  Options o;

  auto* gen = app.add_subcommand("gen", "Print the topology document");
  add_topology_flags(gen, o);
  gen->add_option("--out", o.out_file, "Write the document to FILE");

  auto* metrics = app.add_subcommand("metrics", "Diameter and average distance");
  add_topology_flags(metrics, o);
  metrics->add_flag("--mesh-compare", o.mesh_compare,
                    "Add mesh columns for the same node count");
  add_format_flag(metrics, o);

  auto* route = app.add_subcommand("route", "Route one packet");
  add_topology_flags(route, o);
  route->add_option("--from", o.from, "Source node")->required();
  route->add_option("--to", o.to, "Destination node")->required();
  route->add_option("--algo", o.algo, "bfs or greedy")
      ->transform(CLI::CheckedTransformer(kAlgos, CLI::ignore_case));
  route->add_flag("--show-packet", o.show_packet, "Print the packet header bits");

  auto* simulate = app.add_subcommand("simulate", "Run the forwarding simulator");
  add_topology_flags(simulate, o);
  simulate->add_option("--algo", o.algo, "bfs (source routed) or greedy")
      ->transform(CLI::CheckedTransformer(kAlgos, CLI::ignore_case));
  simulate->add_option("--traffic", o.traffic, "all, random:N or pair:SRC:DST");
  simulate->add_option("--seed", o.seed, "Seed for random traffic");
  add_format_flag(simulate, o);

  auto* memory = app.add_subcommand("memory", "Router memory and address width");
  add_topology_flags(memory, o);
  add_format_flag(memory, o);

  auto* bench = app.add_subcommand("bench", "Time all-pairs route computation");
  add_topology_flags(bench, o);
  bench->add_option("--repeat", o.repeat, "Sweeps per algorithm (median is kept)")
      ->check(CLI::PositiveNumber);
  add_format_flag(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mcnoc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*metrics) return cmd_metrics(o);
    if (*route) return cmd_route(o);
    if (*simulate) return cmd_simulate(o);
    if (*memory) return cmd_memory(o);
    if (*bench) return cmd_bench(o);
  } catch (const CommandError& e) {
    std::cerr << "mcnoc: " << e.what() << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
