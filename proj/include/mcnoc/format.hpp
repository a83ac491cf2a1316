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

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mcnoc/greedy_route.hpp"
#include "mcnoc/metrics.hpp"
#include "mcnoc/simulator.hpp"
#include "mcnoc/topology.hpp"

// Text renderings of reports. CSV and JSON output is byte-stable for equal
// inputs, uses '.' as the decimal separator and ends with a newline.

namespace mcnoc {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Fixed-point with `decimals` digits, independent of the global locale.
std::string fixed(double value, int decimals);

/// CSV columns: spec,n,d_mc,lav_mc[,d_mesh,lav_mesh],d_mc_analytic,lav_mc_analytic
/// Reals carry two decimals; absent analytic values are empty fields.
std::string render_metrics(std::span<const MetricsRow> rows, OutputFormat format,
                           bool mesh_compare);

/// CSV columns: mode,n,s,k,injected,delivered,avg_hops,max_hops,total_cycles
std::string render_sim_report(const CirculantSpec& spec, const SimReport& report,
                              OutputFormat format);

std::string render_memory(const CirculantSpec& spec, const MemoryEstimate& m,
                          OutputFormat format);

std::string render_bench(const CirculantSpec& spec, double bfs_seconds,
                         double greedy_seconds, OutputFormat format);

std::string render_stretch(const CirculantSpec& spec, const StretchReport& r,
                           OutputFormat format);

}  // namespace mcnoc
