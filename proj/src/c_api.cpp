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

#include "mcnoc/mcnoc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mcnoc/error.hpp"
#include "mcnoc/format.hpp"
#include "mcnoc/greedy_route.hpp"
#include "mcnoc/metrics.hpp"
#include "mcnoc/simulator.hpp"
#include "mcnoc/static_route.hpp"
#include "mcnoc/topology.hpp"

struct mcnoc_topology {
  mcnoc::CirculantSpec spec;
};

struct mcnoc_packet {
  mcnoc::SourceRoutedPacket packet;
};

struct mcnoc_sim_report {
  mcnoc::CirculantSpec spec;
  mcnoc::SimReport report;
};

namespace {

thread_local std::string g_last_error;

mcnoc_status status_of(mcnoc::ErrorKind kind) {
  switch (kind) {
    case mcnoc::ErrorKind::InvalidArgument: return MCNOC_ERR_INVALID_ARGUMENT;
    case mcnoc::ErrorKind::OutOfRange: return MCNOC_ERR_OUT_OF_RANGE;
    case mcnoc::ErrorKind::Unsupported: return MCNOC_ERR_UNSUPPORTED;
    case mcnoc::ErrorKind::CorruptPacket: return MCNOC_ERR_CORRUPT_PACKET;
    case mcnoc::ErrorKind::GuardExceeded: return MCNOC_ERR_GUARD;
    case mcnoc::ErrorKind::Invariant: return MCNOC_ERR_INVARIANT;
  }
  return MCNOC_ERR_INTERNAL;
}

mcnoc_status set_error(mcnoc_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
mcnoc_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return MCNOC_OK;
  } catch (const mcnoc::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MCNOC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MCNOC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MCNOC_ERR_INTERNAL, "unknown error");
  }
}

#define MCNOC_REQUIRE(cond)                                              \
  do {                                                                   \
    if (!(cond)) {                                                       \
      return set_error(MCNOC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    }                                                                    \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mcnoc::OutputFormat to_format(mcnoc_format f) {
  switch (f) {
    case MCNOC_FORMAT_TABLE: return mcnoc::OutputFormat::Table;
    case MCNOC_FORMAT_CSV: return mcnoc::OutputFormat::Csv;
    case MCNOC_FORMAT_JSON: return mcnoc::OutputFormat::Json;
  }
  mcnoc::fail(mcnoc::ErrorKind::InvalidArgument, "unknown output format");
}

mcnoc::RouteAlgo to_algo(mcnoc_algo a) {
  switch (a) {
    case MCNOC_ALGO_BFS: return mcnoc::RouteAlgo::Bfs;
    case MCNOC_ALGO_GREEDY: return mcnoc::RouteAlgo::Greedy;
  }
  mcnoc::fail(mcnoc::ErrorKind::InvalidArgument, "unknown routing algorithm");
}

mcnoc::SweepMode to_sweep(int all_pairs) {
  return all_pairs ? mcnoc::SweepMode::AllPairs : mcnoc::SweepMode::Transitive;
}

mcnoc_hop_action to_c(mcnoc::HopAction a) {
  return {a.gen_index, static_cast<int32_t>(a.sign)};
}

}  // namespace

extern "C" {

const char* mcnoc_version(void) { return "1.0.0"; }

const char* mcnoc_status_string(mcnoc_status status) {
  switch (status) {
    case MCNOC_OK: return "ok";
    case MCNOC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MCNOC_ERR_OUT_OF_RANGE: return "out of range";
    case MCNOC_ERR_UNSUPPORTED: return "unsupported topology";
    case MCNOC_ERR_CORRUPT_PACKET: return "corrupt packet";
    case MCNOC_ERR_GUARD: return "instance too large";
    case MCNOC_ERR_INVARIANT: return "invariant violation";
    case MCNOC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MCNOC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mcnoc_last_error(void) { return g_last_error.c_str(); }

void mcnoc_string_free(char* str) { std::free(str); }

// -- topology -----------------------------------------------------------------

mcnoc_status mcnoc_topology_multiplicative(uint32_t s, uint32_t k,
                                           mcnoc_topology** out) {
  MCNOC_REQUIRE(out);
  return guarded([&] {
    *out = new mcnoc_topology{mcnoc::make_multiplicative(s, k)};
  });
}

mcnoc_status mcnoc_topology_circulant(uint64_t n, const uint64_t* gens,
                                      size_t gen_count, mcnoc_topology** out) {
  MCNOC_REQUIRE(out);
  MCNOC_REQUIRE(gens || gen_count == 0);
  return guarded([&] {
    *out = new mcnoc_topology{
        mcnoc::make_circulant(n, std::span<const uint64_t>(gens, gen_count))};
  });
}

void mcnoc_topology_free(mcnoc_topology* topo) { delete topo; }

mcnoc_status mcnoc_topology_get_info(const mcnoc_topology* topo,
                                     mcnoc_topology_info* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const auto& spec = topo->spec;
    *out = {spec.base().value_or(0), spec.dimension(), spec.order(),
            spec.port_count()};
  });
}

mcnoc_status mcnoc_topology_label(const mcnoc_topology* topo, char** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = dup_string(topo->spec.label()); });
}

mcnoc_status mcnoc_topology_document(const mcnoc_topology* topo, char** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = dup_string(mcnoc::topology_document(topo->spec)); });
}

mcnoc_status mcnoc_topology_neighbors(const mcnoc_topology* topo, uint32_t node,
                                      mcnoc_neighbor* out, size_t capacity,
                                      size_t* count) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(count);
  MCNOC_REQUIRE(out || capacity == 0);
  bool too_small = false;
  const mcnoc_status st = guarded([&] {
    const auto list = mcnoc::neighbors(topo->spec, node);
    *count = list.size();
    too_small = list.size() > capacity;
    for (size_t i = 0; i < list.size() && i < capacity; ++i) {
      out[i] = {list[i].node, to_c(list[i].action), list[i].port.value};
    }
  });
  if (st == MCNOC_OK && too_small) {
    return set_error(MCNOC_ERR_BUFFER_TOO_SMALL, "neighbor buffer too small");
  }
  return st;
}

// -- metrics ------------------------------------------------------------------

mcnoc_status mcnoc_bfs_distances(const mcnoc_topology* topo, uint32_t src,
                                 uint32_t* out, size_t capacity) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  if (capacity < topo->spec.order()) {
    return set_error(MCNOC_ERR_BUFFER_TOO_SMALL, "distance buffer needs n entries");
  }
  return guarded([&] {
    const auto dist = mcnoc::bfs_distances(topo->spec, src);
    std::copy(dist.begin(), dist.end(), out);
  });
}

mcnoc_status mcnoc_diameter(const mcnoc_topology* topo, int all_pairs,
                            uint32_t* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = mcnoc::diameter(topo->spec, to_sweep(all_pairs)); });
}

mcnoc_status mcnoc_average_distance(const mcnoc_topology* topo, int all_pairs,
                                    double* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    *out = mcnoc::average_distance(topo->spec, to_sweep(all_pairs));
  });
}

mcnoc_status mcnoc_analytic_diameter_mc2(uint32_t k, uint32_t* out) {
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = mcnoc::analytic_diameter_mc2(k); });
}

mcnoc_status mcnoc_analytic_avg_mc2(uint32_t k, double* out) {
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = mcnoc::analytic_avg_mc2(k); });
}

mcnoc_status mcnoc_mesh_diameter(uint64_t n, double* out) {
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = mcnoc::mesh_diameter(n); });
}

mcnoc_status mcnoc_mesh_avg(uint64_t n, double* out) {
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = mcnoc::mesh_avg(n); });
}

mcnoc_status mcnoc_metrics_row_compute(const mcnoc_topology* topo,
                                       mcnoc_metrics_row* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const mcnoc::MetricsRow r = mcnoc::compare_row(topo->spec);
    *out = {r.n,
            r.diameter_bruteforce,
            r.avg_distance_bruteforce,
            r.diameter_analytic.has_value() ? 1 : 0,
            r.diameter_analytic.value_or(0),
            r.avg_distance_analytic.value_or(0.0),
            r.mesh_diameter,
            r.mesh_avg};
  });
}

mcnoc_status mcnoc_metrics_render(const mcnoc_topology* topo,
                                  mcnoc_format format, int mesh_compare,
                                  char** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const mcnoc::MetricsRow row = mcnoc::compare_row(topo->spec);
    *out = dup_string(mcnoc::render_metrics(std::span(&row, 1), to_format(format),
                                            mesh_compare != 0));
  });
}

mcnoc_status mcnoc_memory_estimate_compute(const mcnoc_topology* topo,
                                           mcnoc_memory_estimate* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const auto m = mcnoc::memory_bits(topo->spec);
    *out = {m.per_node_bits, m.total_bits, m.address_bits};
  });
}

mcnoc_status mcnoc_memory_render(const mcnoc_topology* topo,
                                 mcnoc_format format, char** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(mcnoc::render_memory(
        topo->spec, mcnoc::memory_bits(topo->spec), to_format(format)));
  });
}

// -- routing ------------------------------------------------------------------

mcnoc_status mcnoc_route(const mcnoc_topology* topo, mcnoc_algo algo,
                         uint32_t src, uint32_t dst, uint32_t* path,
                         size_t capacity, size_t* length) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(length);
  MCNOC_REQUIRE(path || capacity == 0);
  bool too_small = false;
  const mcnoc_status st = guarded([&] {
    const mcnoc::NodePath p = to_algo(algo) == mcnoc::RouteAlgo::Greedy
                                  ? mcnoc::greedy_path(topo->spec, src, dst)
                                  : mcnoc::shortest_path(topo->spec, src, dst);
    *length = p.size();
    too_small = p.size() > capacity;
    if (!too_small) std::copy(p.begin(), p.end(), path);
  });
  if (st == MCNOC_OK && too_small) {
    return set_error(MCNOC_ERR_BUFFER_TOO_SMALL, "path buffer too small");
  }
  return st;
}

mcnoc_status mcnoc_greedy_next_hop(const mcnoc_topology* topo, uint32_t current,
                                   uint32_t dst, mcnoc_greedy_decision* out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const auto d = mcnoc::next_hop(topo->spec, current, dst);
    *out = {d.direction, d.distance_in_direction, d.g_lo, d.g_hi, d.chosen,
            d.next_node};
  });
}

mcnoc_status mcnoc_stretch_report(const mcnoc_topology* topo, size_t max_listed,
                                  mcnoc_format format,
                                  mcnoc_stretch_summary* summary,
                                  char** rendered) {
  MCNOC_REQUIRE(topo);
  return guarded([&] {
    const auto fmt = to_format(format);
    const auto r = mcnoc::stretch_report(topo->spec, max_listed);
    if (summary) {
      *summary = {r.max_stretch, r.avg_stretch, r.pairs, r.suboptimal_pairs};
    }
    if (rendered) *rendered = dup_string(mcnoc::render_stretch(topo->spec, r, fmt));
  });
}

// -- packets ------------------------------------------------------------------

mcnoc_status mcnoc_packet_build(const mcnoc_topology* topo, uint32_t src,
                                uint32_t dst, uint32_t max_hops,
                                mcnoc_packet** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    const auto format = mcnoc::packet_format(
        topo->spec, max_hops ? std::optional<uint32_t>(max_hops) : std::nullopt);
    *out = new mcnoc_packet{mcnoc::build_packet(topo->spec, format, src, dst)};
  });
}

void mcnoc_packet_free(mcnoc_packet* packet) { delete packet; }

mcnoc_status mcnoc_packet_hops(const mcnoc_packet* packet, uint32_t* out) {
  MCNOC_REQUIRE(packet);
  MCNOC_REQUIRE(out);
  *out = packet->packet.hops_encoded;
  return MCNOC_OK;
}

mcnoc_status mcnoc_packet_bits_per_hop(const mcnoc_packet* packet,
                                       uint32_t* out) {
  MCNOC_REQUIRE(packet);
  MCNOC_REQUIRE(out);
  *out = packet->packet.bits_per_hop;
  return MCNOC_OK;
}

mcnoc_status mcnoc_packet_render(const mcnoc_packet* packet, char** out) {
  MCNOC_REQUIRE(packet);
  MCNOC_REQUIRE(out);
  return guarded([&] { *out = dup_string(packet->packet.render()); });
}

mcnoc_status mcnoc_packet_consume(const mcnoc_topology* topo,
                                  mcnoc_packet* packet, int* delivered,
                                  mcnoc_hop_action* action) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(packet);
  MCNOC_REQUIRE(delivered);
  MCNOC_REQUIRE(action);
  return guarded([&] {
    auto step = mcnoc::consume_step(topo->spec, packet->packet);
    *delivered = step.delivered() ? 1 : 0;
    if (step.action) *action = to_c(*step.action);
    packet->packet = std::move(step.packet);
  });
}

// -- simulation ---------------------------------------------------------------

mcnoc_status mcnoc_simulate(const mcnoc_topology* topo, mcnoc_algo mode,
                            const mcnoc_traffic* traffic, uint64_t seed,
                            mcnoc_sim_report** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(traffic);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    mcnoc::TrafficPattern pattern;
    switch (traffic->kind) {
      case MCNOC_TRAFFIC_ALL_PAIRS: pattern = mcnoc::AllPairs{}; break;
      case MCNOC_TRAFFIC_RANDOM: pattern = mcnoc::RandomPairs{traffic->count}; break;
      case MCNOC_TRAFFIC_PAIR:
        pattern = mcnoc::SinglePair{traffic->src, traffic->dst};
        break;
      default:
        mcnoc::fail(mcnoc::ErrorKind::InvalidArgument, "unknown traffic kind");
    }
    const auto routing = to_algo(mode) == mcnoc::RouteAlgo::Greedy
                             ? mcnoc::RoutingMode::Greedy
                             : mcnoc::RoutingMode::SourceRouted;
    *out = new mcnoc_sim_report{topo->spec,
                                mcnoc::run(topo->spec, routing, pattern, seed)};
  });
}

void mcnoc_sim_report_free(mcnoc_sim_report* report) { delete report; }

mcnoc_status mcnoc_sim_report_summary(const mcnoc_sim_report* report,
                                      mcnoc_sim_summary* out) {
  MCNOC_REQUIRE(report);
  MCNOC_REQUIRE(out);
  const auto& r = report->report;
  *out = {r.mode == mcnoc::RoutingMode::Greedy ? MCNOC_ALGO_GREEDY : MCNOC_ALGO_BFS,
          r.injected,
          r.delivered,
          r.avg_hops,
          r.max_hops,
          r.total_cycles};
  return MCNOC_OK;
}

mcnoc_status mcnoc_sim_report_histogram(const mcnoc_sim_report* report,
                                        uint32_t* hops, uint64_t* packets,
                                        size_t capacity, size_t* count) {
  MCNOC_REQUIRE(report);
  MCNOC_REQUIRE(count);
  MCNOC_REQUIRE((hops && packets) || capacity == 0);
  const auto& hist = report->report.hop_histogram;
  *count = hist.size();
  size_t i = 0;
  for (const auto& [h, c] : hist) {
    if (i == capacity) break;
    hops[i] = h;
    packets[i] = c;
    ++i;
  }
  if (hist.size() > capacity) {
    return set_error(MCNOC_ERR_BUFFER_TOO_SMALL, "histogram buffer too small");
  }
  return MCNOC_OK;
}

mcnoc_status mcnoc_sim_report_render(const mcnoc_sim_report* report,
                                     mcnoc_format format, char** out) {
  MCNOC_REQUIRE(report);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(mcnoc::render_sim_report(report->spec, report->report,
                                               to_format(format)));
  });
}

mcnoc_status mcnoc_bench(const mcnoc_topology* topo, mcnoc_algo algo,
                         uint32_t repeat, double* seconds) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(seconds);
  return guarded([&] {
    *seconds = mcnoc::bench_route_computation(topo->spec, to_algo(algo), repeat);
  });
}

mcnoc_status mcnoc_bench_render(const mcnoc_topology* topo, double bfs_seconds,
                                double greedy_seconds, mcnoc_format format,
                                char** out) {
  MCNOC_REQUIRE(topo);
  MCNOC_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(mcnoc::render_bench(topo->spec, bfs_seconds,
                                          greedy_seconds, to_format(format)));
  });
}

}  // extern "C"
