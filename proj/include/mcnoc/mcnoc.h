/*
 * Copyright 2026 The mcnoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the mcnoc library: multiplicative circulant networks-on-chip,
 * their metrics, source routing, greedy generatrix routing and a forwarding
 * simulator.
 *
 * Conventions:
 *   - Every fallible call returns mcnoc_status; MCNOC_OK is zero. On failure
 *     mcnoc_last_error() holds a one-line message for the calling thread and
 *     output parameters are left untouched.
 *   - Objects are opaque handles released with their matching _free call.
 *     Passing NULL to a _free call is a no-op.
 *   - Strings returned through char** are NUL-terminated, owned by the caller
 *     and released with mcnoc_string_free.
 *   - Node ids are 0-based. Topology handles are immutable and may be shared
 *     across threads; packet and report handles may not.
 */

#ifndef MCNOC_MCNOC_H
#define MCNOC_MCNOC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MCNOC_BUILDING_LIBRARY)
#    define MCNOC_API __declspec(dllexport)
#  else
#    define MCNOC_API __declspec(dllimport)
#  endif
#else
#  define MCNOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcnoc_status {
  MCNOC_OK = 0,
  MCNOC_ERR_INVALID_ARGUMENT = 1,
  MCNOC_ERR_OUT_OF_RANGE = 2,
  MCNOC_ERR_UNSUPPORTED = 3,      /* needs a multiplicative circulant */
  MCNOC_ERR_CORRUPT_PACKET = 4,
  MCNOC_ERR_GUARD = 5,            /* instance too large for the operation */
  MCNOC_ERR_INVARIANT = 6,        /* routing invariant broken */
  MCNOC_ERR_BUFFER_TOO_SMALL = 7,
  MCNOC_ERR_INTERNAL = 8
} mcnoc_status;

typedef enum mcnoc_format {
  MCNOC_FORMAT_TABLE = 0,
  MCNOC_FORMAT_CSV = 1,
  MCNOC_FORMAT_JSON = 2
} mcnoc_format;

/* Route computation. In the simulator BFS selects source-routed packets. */
typedef enum mcnoc_algo {
  MCNOC_ALGO_BFS = 0,
  MCNOC_ALGO_GREEDY = 1
} mcnoc_algo;

typedef enum mcnoc_traffic_kind {
  MCNOC_TRAFFIC_ALL_PAIRS = 0,
  MCNOC_TRAFFIC_RANDOM = 1,
  MCNOC_TRAFFIC_PAIR = 2
} mcnoc_traffic_kind;

typedef struct mcnoc_traffic {
  mcnoc_traffic_kind kind;
  uint64_t count; /* MCNOC_TRAFFIC_RANDOM */
  uint32_t src;   /* MCNOC_TRAFFIC_PAIR */
  uint32_t dst;   /* MCNOC_TRAFFIC_PAIR */
} mcnoc_traffic;

typedef struct mcnoc_topology mcnoc_topology;
typedef struct mcnoc_packet mcnoc_packet;
typedef struct mcnoc_sim_report mcnoc_sim_report;

typedef struct mcnoc_hop_action {
  uint32_t gen_index;
  int32_t sign; /* +1 right, -1 left */
} mcnoc_hop_action;

typedef struct mcnoc_neighbor {
  uint32_t node;
  mcnoc_hop_action action;
  uint32_t port;
} mcnoc_neighbor;

typedef struct mcnoc_topology_info {
  uint32_t s; /* 0 when the circulant is not multiplicative */
  uint32_t k; /* number of generatrices */
  uint64_t n;
  uint32_t port_count;
} mcnoc_topology_info;

typedef struct mcnoc_metrics_row {
  uint64_t n;
  uint32_t diameter_bruteforce;
  double avg_distance_bruteforce;
  int has_analytic; /* nonzero for MC(2, k) */
  uint32_t diameter_analytic;
  double avg_distance_analytic;
  double mesh_diameter;
  double mesh_avg;
} mcnoc_metrics_row;

typedef struct mcnoc_memory_estimate {
  uint64_t per_node_bits;
  uint64_t total_bits;
  uint32_t address_bits;
} mcnoc_memory_estimate;

typedef struct mcnoc_greedy_decision {
  int32_t direction;
  uint64_t distance_in_direction;
  uint64_t g_lo;
  uint64_t g_hi;
  uint64_t chosen;
  uint32_t next_node;
} mcnoc_greedy_decision;

typedef struct mcnoc_sim_summary {
  mcnoc_algo mode;
  uint64_t injected;
  uint64_t delivered;
  double avg_hops;
  uint32_t max_hops;
  uint64_t total_cycles;
} mcnoc_sim_summary;

typedef struct mcnoc_stretch_summary {
  double max_stretch;
  double avg_stretch;
  uint64_t pairs;
  uint64_t suboptimal_pairs;
} mcnoc_stretch_summary;

/* -- library ------------------------------------------------------------- */

MCNOC_API const char* mcnoc_version(void);
MCNOC_API const char* mcnoc_status_string(mcnoc_status status);
MCNOC_API const char* mcnoc_last_error(void);
MCNOC_API void mcnoc_string_free(char* str);

/* -- topology ------------------------------------------------------------ */

MCNOC_API mcnoc_status mcnoc_topology_multiplicative(uint32_t s, uint32_t k,
                                                     mcnoc_topology** out);
MCNOC_API mcnoc_status mcnoc_topology_circulant(uint64_t n,
                                                const uint64_t* gens,
                                                size_t gen_count,
                                                mcnoc_topology** out);
MCNOC_API void mcnoc_topology_free(mcnoc_topology* topo);
MCNOC_API mcnoc_status mcnoc_topology_get_info(const mcnoc_topology* topo,
                                               mcnoc_topology_info* out);
MCNOC_API mcnoc_status mcnoc_topology_label(const mcnoc_topology* topo,
                                            char** out);
/* {"s","k","n","generatrices","ports":[{"code","gen","sign"}]} */
MCNOC_API mcnoc_status mcnoc_topology_document(const mcnoc_topology* topo,
                                               char** out);
/* Writes up to `capacity` entries in port order; *count receives the total.
   Returns MCNOC_ERR_BUFFER_TOO_SMALL when capacity < total. */
MCNOC_API mcnoc_status mcnoc_topology_neighbors(const mcnoc_topology* topo,
                                                uint32_t node,
                                                mcnoc_neighbor* out,
                                                size_t capacity,
                                                size_t* count);

/* -- metrics ------------------------------------------------------------- */

/* `out` must hold n entries. */
MCNOC_API mcnoc_status mcnoc_bfs_distances(const mcnoc_topology* topo,
                                           uint32_t src, uint32_t* out,
                                           size_t capacity);
/* all_pairs != 0 runs BFS from every node instead of node 0 only. */
MCNOC_API mcnoc_status mcnoc_diameter(const mcnoc_topology* topo,
                                      int all_pairs, uint32_t* out);
MCNOC_API mcnoc_status mcnoc_average_distance(const mcnoc_topology* topo,
                                              int all_pairs, double* out);
MCNOC_API mcnoc_status mcnoc_analytic_diameter_mc2(uint32_t k, uint32_t* out);
MCNOC_API mcnoc_status mcnoc_analytic_avg_mc2(uint32_t k, double* out);
MCNOC_API mcnoc_status mcnoc_mesh_diameter(uint64_t n, double* out);
MCNOC_API mcnoc_status mcnoc_mesh_avg(uint64_t n, double* out);
MCNOC_API mcnoc_status mcnoc_metrics_row_compute(const mcnoc_topology* topo,
                                                 mcnoc_metrics_row* out);
MCNOC_API mcnoc_status mcnoc_metrics_render(const mcnoc_topology* topo,
                                            mcnoc_format format,
                                            int mesh_compare, char** out);
MCNOC_API mcnoc_status mcnoc_memory_estimate_compute(
    const mcnoc_topology* topo, mcnoc_memory_estimate* out);
MCNOC_API mcnoc_status mcnoc_memory_render(const mcnoc_topology* topo,
                                           mcnoc_format format, char** out);

/* -- routing ------------------------------------------------------------- */

/* Node sequence src..dst. *length receives the node count; returns
   MCNOC_ERR_BUFFER_TOO_SMALL when it exceeds capacity. */
MCNOC_API mcnoc_status mcnoc_route(const mcnoc_topology* topo, mcnoc_algo algo,
                                   uint32_t src, uint32_t dst, uint32_t* path,
                                   size_t capacity, size_t* length);
MCNOC_API mcnoc_status mcnoc_greedy_next_hop(const mcnoc_topology* topo,
                                             uint32_t current, uint32_t dst,
                                             mcnoc_greedy_decision* out);
/* Exhaustive greedy-vs-BFS comparison; `rendered` may be NULL. */
MCNOC_API mcnoc_status mcnoc_stretch_report(const mcnoc_topology* topo,
                                            size_t max_listed,
                                            mcnoc_format format,
                                            mcnoc_stretch_summary* summary,
                                            char** rendered);

/* -- source-routed packets ------------------------------------------------ */

/* max_hops == 0 sizes the path field for the diameter. */
MCNOC_API mcnoc_status mcnoc_packet_build(const mcnoc_topology* topo,
                                          uint32_t src, uint32_t dst,
                                          uint32_t max_hops,
                                          mcnoc_packet** out);
MCNOC_API void mcnoc_packet_free(mcnoc_packet* packet);
MCNOC_API mcnoc_status mcnoc_packet_hops(const mcnoc_packet* packet,
                                         uint32_t* out);
MCNOC_API mcnoc_status mcnoc_packet_bits_per_hop(const mcnoc_packet* packet,
                                                 uint32_t* out);
/* "000|011|010": hop groups, most significant first. */
MCNOC_API mcnoc_status mcnoc_packet_render(const mcnoc_packet* packet,
                                           char** out);
/* One router step. Sets *delivered, or writes the hop taken to *action and
   advances the packet in place. */
MCNOC_API mcnoc_status mcnoc_packet_consume(const mcnoc_topology* topo,
                                            mcnoc_packet* packet,
                                            int* delivered,
                                            mcnoc_hop_action* action);

/* -- simulation and benchmarking ------------------------------------------ */

MCNOC_API mcnoc_status mcnoc_simulate(const mcnoc_topology* topo,
                                      mcnoc_algo mode,
                                      const mcnoc_traffic* traffic,
                                      uint64_t seed, mcnoc_sim_report** out);
MCNOC_API void mcnoc_sim_report_free(mcnoc_sim_report* report);
MCNOC_API mcnoc_status mcnoc_sim_report_summary(const mcnoc_sim_report* report,
                                                mcnoc_sim_summary* out);
/* Histogram entries in ascending hop order; *count receives the total. */
MCNOC_API mcnoc_status mcnoc_sim_report_histogram(
    const mcnoc_sim_report* report, uint32_t* hops, uint64_t* packets,
    size_t capacity, size_t* count);
MCNOC_API mcnoc_status mcnoc_sim_report_render(const mcnoc_sim_report* report,
                                               mcnoc_format format,
                                               char** out);

/* Median seconds per all-pairs route sweep over `repeat` runs. */
MCNOC_API mcnoc_status mcnoc_bench(const mcnoc_topology* topo, mcnoc_algo algo,
                                   uint32_t repeat, double* seconds);
MCNOC_API mcnoc_status mcnoc_bench_render(const mcnoc_topology* topo,
                                          double bfs_seconds,
                                          double greedy_seconds,
                                          mcnoc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MCNOC_MCNOC_H */
