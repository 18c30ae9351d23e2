// Conformance checks for the command-line surface: the worked examples are
// runnable as invocations, outputs are deterministic, and exit codes follow
// the domain/verification split.

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(POSITROIDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

nlohmann::json run_json(const std::string& args) {
  RunResult r = run(args);
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema").get<std::string>() == "positroidlab/v1");
  return j;
}

}  // namespace

TEST_CASE("necklace forward") {
  auto j = run_json("necklace forward 465213");
  std::vector<std::vector<int>> expect{{1, 2, 3}, {2, 3, 4}, {3, 4, 6},
                                       {4, 5, 6}, {2, 5, 6}, {1, 2, 6}};
  CHECK(j.at("subsets").get<std::vector<std::vector<int>>>() == expect);
}

TEST_CASE("perm length from a window") {
  auto j = run_json("perm length --window 4,6,5,8,7,9");
  CHECK(j.at("length").get<int>() == 2);
}

TEST_CASE("toggle graph dot output") {
  RunResult r = run("analysis toggle-graph 5761432 --dot");
  CHECK(r.code == 0);
  int nodes = 0, edges = 0;
  for (size_t p = r.out.find("v"); p != std::string::npos; p = r.out.find("v", p + 1))
    if (r.out.compare(p, 2, "v0") >= 0) break;
  for (size_t p = 0; (p = r.out.find("label=", p)) != std::string::npos; ++p) ++nodes;
  for (size_t p = 0; (p = r.out.find(" -- ", p)) != std::string::npos; ++p) ++edges;
  CHECK(nodes == 6);
  CHECK(edges == 4);  // two solid paths of two edges each
}

TEST_CASE("worked examples as invocations") {
  CHECK(run_json("perm type 465213").at("k").get<int>() == 3);
  CHECK(run_json("perm lift 465213").at("window").get<std::vector<long long>>() ==
        std::vector<long long>{4, 6, 5, 8, 7, 9});
  CHECK(run_json("perm leq 456213 465213").at("leq").get<bool>());
  CHECK(run_json("positroid dim 465213").at("dimension").get<int>() == 8);
  auto en = run_json("positroid enumerate 465213");
  CHECK(en.at("bases").size() == 18);
  CHECK_FALSE(run_json("positroid contains 465213 345").at("contains").get<bool>());

  auto toggled = run_json("necklace toggle --pi 465213 --at 3");
  CHECK(toggled.at("subsets")[2].get<std::vector<int>>() == std::vector<int>{2, 4, 5});
  auto duals = run_json("necklace dual --rho 123546 --iota 465123");
  CHECK(duals.at("subsets")[0].get<std::vector<int>>() == std::vector<int>{4, 5, 6});
  CHECK(duals.at("subsets")[4].get<std::vector<int>>() == std::vector<int>{2, 3, 5});

  auto cls = run_json("necklace classify --pi 465213");
  CHECK(cls.at("classification").at("3").get<std::string>() == "aligned");
  CHECK(cls.at("classification").at("2").get<std::string>() == "crossing");

  auto trips = run_json("plabic trips --pi 465213");
  CHECK(trips.at("trip").get<std::vector<int>>() == std::vector<int>{4, 6, 5, 2, 1, 3});
  CHECK(run_json("plabic reduced --pi 564123").at("reduced").get<bool>());

  auto units = run_json("necklace units 465213 456213");
  bool saw245 = false;
  for (const auto& entry : units.at("monomials"))
    if (entry.at("subset").get<std::vector<int>>() == std::vector<int>{2, 4, 5}) {
      saw245 = true;
      CHECK(entry.at("exponents").get<std::vector<long long>>() ==
            std::vector<long long>{0, 1, -1, 1, 0, 0});
    }
  CHECK(saw245);

  auto sweep = run_json("analysis sweep main-2-iff-3 --n-max 4");
  CHECK(sweep.at("all_pass").get<bool>());
}

TEST_CASE("determinism under a fixed seed") {
  RunResult a = run("twist sample 465213 --seed 7");
  RunResult b = run("twist sample 465213 --seed 7");
  CHECK(a.out == b.out);
  RunResult c = run("twist sample 465213 --seed 8");
  CHECK(a.out != c.out);

  RunResult q1 = run("seed quasi-search 465213 123456 132456 --seed 3 --points 6");
  RunResult q2 = run("seed quasi-search 465213 123456 132456 --seed 3 --points 6");
  CHECK(q1.code == 0);
  CHECK(q1.out == q2.out);
}

TEST_CASE("exit codes") {
  CHECK(run("no-such-command").code == 64);
  CHECK(run("perm type").code == 64);
  CHECK(run("perm type 11234").code == 1);
  CHECK(run("perm leq 465213 651324").code == 1);  // incomparable types
  CHECK(run("twist roundtrip --rho 123546 --iota 465123 --points 2").code == 0);
  CHECK(run("twist diagram --pi 564123 --rho 123546").code == 0);
}
