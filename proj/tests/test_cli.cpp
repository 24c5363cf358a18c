#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TGRAPH_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

const std::string fig2_path = std::string(TEST_DATA_DIR) + "/fig2.edges";

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("index subcommand") {
  RunResult r = run("index --input " + fig2_path);
  CHECK(r.status == 0);
  CHECK(r.out == "n=5 m=4 M1=16 M2=14 F=38\n");

  RunResult rj = run("index --json --input " + fig2_path);
  CHECK(rj.status == 0);
  auto j = nlohmann::json::parse(rj.out);
  CHECK(j["n"] == 5);
  CHECK(j["M1"] == 16);
  CHECK(j["M2"] == 14);
  CHECK(j["F"] == 38);
}

TEST_CASE("index input error is exit 1") {
  CHECK(run("index --input /nonexistent/file.edges").status == 1);
}

TEST_CASE("transform classical to dot") {
  const std::string out = temp_path("total.dot");
  RunResult r = run("transform --input " + fig2_path + " --classical +++ --format dot --output " + out);
  CHECK(r.status == 0);
  std::ifstream in(out);
  std::stringstream content;
  content << in.rdbuf();
  // 9 node lines, 16 edge lines
  int nodes = 0, edges = 0;
  std::string line;
  std::istringstream lines(content.str());
  while (std::getline(lines, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find(" -- ") != std::string::npos) ++edges;
  }
  CHECK(nodes == 9);
  CHECK(edges == 16);
  std::remove(out.c_str());
}

TEST_CASE("transform generalized to edge list") {
  RunResult r = run("transform --input " + fig2_path +
                    " --r 2 --s 1 --x +- --y - --z ++ --format edges");
  CHECK(r.status == 0);
  // 2*5 + 1*4 = 14 vertices
  CHECK(r.out.substr(0, r.out.find(' ')) == "14");
}

TEST_CASE("transform sign length mismatch is exit 2") {
  CHECK(run("transform --input " + fig2_path +
            " --r 2 --s 1 --x + --y - --z ++ --format edges").status == 2);
  CHECK(run("transform --input " + fig2_path + " --classical ++").status == 2);
}

TEST_CASE("verify single graph report") {
  const std::string out = temp_path("report.json");
  RunResult r = run("verify --graph " + fig2_path + " --r-max 1 --s-max 1 --report " + out);
  CHECK(r.status == 0);
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  CHECK(j["schema_version"] == "1.0");
  bool found_total = false;
  for (const auto& rec : j["records"]) {
    if (rec["family"] == "plus-incidence" && rec["p"] == 1 && rec["q"] == 1) {
      CHECK(rec["oracle"] == 130);
      CHECK(rec["derived_matches"] == true);
      found_total = true;
    }
  }
  CHECK(found_total);
  std::remove(out.c_str());
}

TEST_CASE("verify with zero trials") {
  RunResult r = run("verify --trials 0");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["record_count"] == 0);
}

TEST_CASE("verify invalid ranges are exit 2") {
  CHECK(run("verify --trials 1 --n-min 5 --n-max 2").status == 2);
  CHECK(run("verify --trials 1 --r-max 0").status == 2);
}
