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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "csv.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(MCNOC_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("route examples") {
  CHECK(run("route --s 4 --k 3 --from 5 --to 17 --algo greedy").out == "5 21 17\n");
  CHECK(run("route --s 4 --k 3 --from 5 --to 17 --algo bfs").out == "5 21 17\n");
  CHECK(run("route --s 4 --k 3 --from 5 --to 5 --algo bfs").out == "5\n");

  const auto bfs = run("route --s 4 --k 3 --from 5 --to 17 --algo bfs --show-packet");
  CHECK(bfs.code == 0);
  CHECK(bfs.out == "5 21 17\npacket: 000|000|000|011|010\n");
  const auto greedy = run("route --s 4 --k 3 --from 5 --to 17 --algo greedy --show-packet");
  CHECK(greedy.out == "5 21 17\naddress: 010001\n");
}

TEST_CASE("long routes grow the path buffer") {
  const auto r = run("route --s 2 --k 1 --from 0 --to 1 --algo bfs", true);
  CHECK(r.code == 1);  // MC(2,1) has n = 2
  const auto ring = run("route --s 40 --k 1 --from 0 --to 20 --algo greedy");
  CHECK(ring.code == 0);
  std::istringstream in(ring.out);
  int count = 0;
  for (std::string tok; in >> tok;) ++count;
  CHECK(count == 21);
}

TEST_CASE("metrics CSV") {
  const auto r = run("metrics --s 2 --k 4 --mesh-compare --format csv");
  REQUIRE(r.code == 0);
  const auto table = testcsv::parse(r.out);
  REQUIRE(table.size() == 2);
  CHECK(table[1][0] == "MC(2,4)");
  CHECK(table[1][2] == "2");
  CHECK(table[1][4] == "6.00");
  CHECK(r.out.find('2') != std::string::npos);
  CHECK(r.out.find('6') != std::string::npos);

  const auto json = nlohmann::json::parse(run("metrics --s 3 --k 6 --mesh-compare --format json").out);
  CHECK(json[0]["diameter_bruteforce"] == 6);
  CHECK(json[0]["mesh_diameter"] == 52.0);
}

TEST_CASE("simulate, memory and bench outputs") {
  const auto sim = run("simulate --s 2 --k 6 --algo bfs --traffic all --seed 1 --format csv");
  REQUIRE(sim.code == 0);
  const auto t = testcsv::parse(sim.out);
  REQUIRE(t.size() == 2);
  CHECK(t[1] == std::vector<std::string>{"source_routed", "64", "2", "6", "4032", "4032",
                                         "2.142857", "3", "3"});

  const auto pair = nlohmann::json::parse(
      run("simulate --s 4 --k 3 --algo greedy --traffic pair:5:17 --seed 0 --format json").out);
  CHECK(pair["hop_histogram"] == nlohmann::json{{"2", 1}});

  const auto mem = testcsv::parse(run("memory --s 3 --k 2 --format csv").out);
  CHECK(mem[1] == std::vector<std::string>{"MC(3,2)", "9", "19", "171", "4"});

  const auto bench = nlohmann::json::parse(run("bench --s 2 --k 4 --repeat 1 --format json").out);
  CHECK(bench["n"] == 16);
  CHECK(bench["bfs_seconds"].get<double>() >= 0.0);
}

TEST_CASE("gen writes the topology document") {
  const auto out = run("gen --s 4 --k 3");
  REQUIRE(out.code == 0);
  const auto doc = nlohmann::json::parse(out.out);
  CHECK(doc["s"] == 4);
  CHECK(doc["ports"].size() == 6);

  const auto path = std::filesystem::temp_directory_path() / "mcnoc_cli_test_gen.json";
  std::filesystem::remove(path);
  const auto written = run("gen --s 4 --k 3 --out " + path.string());
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == out.out);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 1 with one diagnostic line") {
  for (const char* args :
       {"", "bogus", "route --s 4 --k 3 --from 5", "route --s 4 --k 3 --from 5 --to 99",
        "route --s 4 --k 3 --from 5 --to 17 --algo dijkstra",
        "simulate --s 2 --k 4 --algo bfs --traffic random:x --seed 1",
        "simulate --s 2 --k 4 --algo bfs --traffic pair:3:3 --seed 1",
        "metrics --s 2 --k 4 --format xml", "memory --s 1 --k 4",
        "bench --s 2 --k 14 --repeat 1"}) {
    CAPTURE(args);
    const auto r = run(args, true);
    CHECK(r.code == 1);
    CHECK(r.out.rfind("mcnoc: ", 0) == 0);
  }
  const auto gen_bad = run("gen --s 4 --k 3 --out /nonexistent-dir/x.json", true);
  CHECK(gen_bad.code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("--version").code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* args :
       {"gen --s 3 --k 4", "metrics --s 3 --k 4 --mesh-compare --format csv",
        "route --s 5 --k 3 --from 7 --to 99 --algo bfs --show-packet",
        "simulate --s 3 --k 4 --algo greedy --traffic random:500 --seed 42 --format csv",
        "simulate --s 3 --k 4 --algo bfs --traffic random:500 --seed 42 --format json",
        "memory --s 4 --k 3 --format json"}) {
    CAPTURE(args);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("simulate --s 3 --k 4 --algo greedy --traffic random:500 --seed 42 --format json").out !=
        run("simulate --s 3 --k 4 --algo greedy --traffic random:500 --seed 43 --format json").out);
}
