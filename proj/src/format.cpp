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

#include "mcnoc/format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace mcnoc {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::vector<std::string> quoted;
  quoted.reserve(cells.size());
  for (const auto& c : cells) quoted.push_back(csv_field(c));
  return join(quoted, ',') + "\n";
}

// Left-aligned first column, right-aligned numbers.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::string pad(width[c] - r[c].size(), ' ');
      if (c) line += "  ";
      line += c == 0 ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string s_field(const CirculantSpec& spec) {
  return spec.base() ? std::to_string(*spec.base()) : "";
}

Json s_json(const CirculantSpec& spec) {
  return spec.base() ? Json(*spec.base()) : Json(nullptr);
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string fixed(double value, int decimals) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, decimals);
  std::string out(buf, res.ptr);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);  // no "-0.00"
  }
  return out;
}

std::string render_metrics(std::span<const MetricsRow> rows,
                           OutputFormat format, bool mesh_compare) {
  if (format == OutputFormat::Json) {
    Json doc = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["spec"] = r.label;
      j["n"] = r.n;
      j["diameter_bruteforce"] = r.diameter_bruteforce;
      j["avg_distance_bruteforce"] = r.avg_distance_bruteforce;
      j["diameter_analytic"] =
          r.diameter_analytic ? Json(*r.diameter_analytic) : Json(nullptr);
      j["avg_distance_analytic"] =
          r.avg_distance_analytic ? Json(*r.avg_distance_analytic) : Json(nullptr);
      if (mesh_compare) {
        j["mesh_diameter"] = r.mesh_diameter;
        j["mesh_avg"] = r.mesh_avg;
      }
      doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> lines;
  if (format == OutputFormat::Csv) {
    lines.push_back({"spec", "n", "d_mc", "lav_mc"});
  } else {
    lines.push_back({"circulant", "n", "d(MC)", "L_av(MC)"});
  }
  if (mesh_compare) {
    lines.back().push_back(format == OutputFormat::Csv ? "d_mesh" : "d(mesh)");
    lines.back().push_back(format == OutputFormat::Csv ? "lav_mesh" : "L_av(mesh)");
  }
  lines.back().push_back(format == OutputFormat::Csv ? "d_mc_analytic"
                                                     : "d(MC) analytic");
  lines.back().push_back(format == OutputFormat::Csv ? "lav_mc_analytic"
                                                     : "L_av(MC) analytic");
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.label, std::to_string(r.n),
                                   std::to_string(r.diameter_bruteforce),
                                   fixed(r.avg_distance_bruteforce, 2)};
    if (mesh_compare) {
      cells.push_back(fixed(r.mesh_diameter, 2));
      cells.push_back(fixed(r.mesh_avg, 2));
    }
    const char* absent = format == OutputFormat::Csv ? "" : "-";
    cells.push_back(r.diameter_analytic ? std::to_string(*r.diameter_analytic)
                                        : absent);
    cells.push_back(r.avg_distance_analytic ? fixed(*r.avg_distance_analytic, 2)
                                            : absent);
    lines.push_back(std::move(cells));
  }

  if (format == OutputFormat::Table) return table(lines);
  std::string out;
  for (const auto& l : lines) out += csv_line(l);
  return out;
}

std::string render_sim_report(const CirculantSpec& spec,
                              const SimReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["mode"] = to_string(report.mode);
    j["injected"] = report.injected;
    j["delivered"] = report.delivered;
    Json hist = Json::object();
    for (const auto& [hops, count] : report.hop_histogram) {
      hist[std::to_string(hops)] = count;
    }
    j["hop_histogram"] = std::move(hist);
    j["avg_hops"] = report.avg_hops;
    j["max_hops"] = report.max_hops;
    j["total_cycles"] = report.total_cycles;
    return j.dump(2) + "\n";
  }

  std::vector<std::string> header{"mode",      "n",        "s",
                                  "k",         "injected", "delivered",
                                  "avg_hops",  "max_hops", "total_cycles"};
  std::vector<std::string> row{to_string(report.mode),
                               std::to_string(spec.order()),
                               s_field(spec),
                               std::to_string(spec.dimension()),
                               std::to_string(report.injected),
                               std::to_string(report.delivered),
                               fixed(report.avg_hops, 6),
                               std::to_string(report.max_hops),
                               std::to_string(report.total_cycles)};
  if (format == OutputFormat::Csv) return csv_line(header) + csv_line(row);

  std::string out = table({header, row});
  std::vector<std::vector<std::string>> hist{{"hops", "packets"}};
  for (const auto& [hops, count] : report.hop_histogram) {
    hist.push_back({std::to_string(hops), std::to_string(count)});
  }
  return out + "\n" + table(hist);
}

std::string render_memory(const CirculantSpec& spec, const MemoryEstimate& m,
                          OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["spec"] = spec.label();
    j["s"] = s_json(spec);
    j["k"] = spec.dimension();
    j["n"] = spec.order();
    j["per_node_bits"] = m.per_node_bits;
    j["total_bits"] = m.total_bits;
    j["address_bits"] = m.address_bits;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header{"spec", "n", "per_node_bits", "total_bits",
                                  "address_bits"};
  std::vector<std::string> row{spec.label(), std::to_string(spec.order()),
                               std::to_string(m.per_node_bits),
                               std::to_string(m.total_bits),
                               std::to_string(m.address_bits)};
  if (format == OutputFormat::Csv) return csv_line(header) + csv_line(row);
  return table({header, row});
}

std::string render_bench(const CirculantSpec& spec, double bfs_seconds,
                         double greedy_seconds, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["spec"] = spec.label();
    j["n"] = spec.order();
    j["bfs_seconds"] = bfs_seconds;
    j["greedy_seconds"] = greedy_seconds;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header{"spec", "n", "bfs_seconds", "greedy_seconds"};
  std::vector<std::string> row{spec.label(), std::to_string(spec.order()),
                               fixed(bfs_seconds, 6), fixed(greedy_seconds, 6)};
  if (format == OutputFormat::Csv) return csv_line(header) + csv_line(row);
  return table({header, row});
}

std::string render_stretch(const CirculantSpec& spec, const StretchReport& r,
                           OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["spec"] = spec.label();
    j["pairs"] = r.pairs;
    j["max_stretch"] = r.max_stretch;
    j["avg_stretch"] = r.avg_stretch;
    j["suboptimal_pairs"] = r.suboptimal_pairs;
    Json worst = Json::array();
    for (const auto& p : r.worst_pairs) {
      worst.push_back({{"src", p.src},
                       {"dst", p.dst},
                       {"greedy_hops", p.greedy_hops},
                       {"shortest_hops", p.shortest_hops}});
    }
    j["worst_pairs"] = std::move(worst);
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header{"spec", "pairs", "max_stretch", "avg_stretch",
                                  "suboptimal_pairs"};
  std::vector<std::string> row{spec.label(), std::to_string(r.pairs),
                               fixed(r.max_stretch, 6), fixed(r.avg_stretch, 6),
                               std::to_string(r.suboptimal_pairs)};
  if (format == OutputFormat::Csv) return csv_line(header) + csv_line(row);
  std::string out = table({header, row});
  if (!r.worst_pairs.empty()) {
    std::vector<std::vector<std::string>> worst{
        {"src", "dst", "greedy_hops", "shortest_hops"}};
    for (const auto& p : r.worst_pairs) {
      worst.push_back({std::to_string(p.src), std::to_string(p.dst),
                       std::to_string(p.greedy_hops),
                       std::to_string(p.shortest_hops)});
    }
    out += "\n" + table(worst);
  }
  return out;
}

}  // namespace mcnoc
