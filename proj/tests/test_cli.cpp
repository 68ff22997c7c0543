#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

#include "distspec/families.hpp"
#include "distspec/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout is captured, stderr discarded
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + DISTSPEC_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("distspec_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  Run r = run("spectrum --family complete --n 5 --k 2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["S_k"]["2"].get<double>() - 3.0) <= 1e-9);
  CHECK(j["n"] == 5);
  CHECK(j["m"] == 10);
  CHECK(j["diameter"] == 1);
  CHECK(j["wiener_index"] == 10);

  r = run("spectrum --graph6 Ch --k 2 --format json");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["S_k"]["2"].get<double>() - (std::sqrt(10.0) + std::sqrt(2.0))) <= 1e-9);

  r = run("spectrum --family cycle --n 4 --format json");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  const std::array<double, 4> expected = {4, 0, -2, -2};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(j["distance_spectrum"][i].get<double>() - expected[i]) <= 1e-9);

  r = run("spectrum --family cycle --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("distance spectrum:") != std::string::npos);
}

TEST_CASE("spectrum subcommand errors") {
  CHECK(run("spectrum --graph6 B?").code == 1);        // disconnected
  CHECK(run("spectrum --graph6 'C'").code == 1);       // truncated graph6
  CHECK(run("spectrum").code == 2);                    // no source
  CHECK(run("spectrum --graph6 Ch --family path --n 4").code == 2);
  CHECK(run("spectrum --family wheel --n 5").code == 2);
  CHECK(run("spectrum --family cycle --n 2").code == 2);
  CHECK(run("spectrum --graph6 Ch --k 9").code == 2);
}

TEST_CASE("check subcommand") {
  TempDir dir;
  std::string trees;
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : distspec::enumerate_trees(n)) trees += distspec::encode_graph6(t) + "\n";
  const std::string tree_file = dir.file("trees.g6", trees);
  const std::string out_file = dir.path("trees.jsonl");
  CHECK(run("check --bounds lem2.3 --input " + tree_file + " --output " + out_file).code == 0);
  std::istringstream lines(read_file(out_file));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["bound_id"] == "lem2.3");
    CHECK(j["holds"] == true);
    ++count;
  }
  CHECK(count == 1 + 1 + 2 + 3 + 6 + 11 + 23);

  std::string graphs;
  for (const auto& g : distspec::enumerate_connected_graphs(6)) graphs += distspec::encode_graph6(g) + "\n";
  const std::string six = dir.file("six.g6", graphs);
  const Run r = run("check --bounds thm1.3 --input " + six);
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 112);

  CHECK(run("check --bounds all --input " + six + " --k 3 --s 2 --jobs 2").code == 0);
  CHECK(run("check --bounds thm1.3 --input " + dir.file("bad.g6", "B?\n")).code == 1);
  CHECK(run("check --bounds nope --input " + six).code == 2);
  CHECK(run("check --bounds thm1.3").code == 2);
  CHECK(run("check --bounds thm1.3 --input " + dir.path("missing.g6")).code == 1);
}

TEST_CASE("check output does not depend on the worker count") {
  TempDir dir;
  std::string graphs;
  for (const auto& g : distspec::enumerate_connected_graphs(5)) graphs += distspec::encode_graph6(g) + "\n";
  const std::string five = dir.file("five.g6", graphs);
  const Run one = run("check --bounds all --input " + five + " --jobs 1");
  const Run three = run("check --bounds all --input " + five + " --jobs 3");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
}

TEST_CASE("scan subcommand") {
  TempDir dir;
  const std::string csv = dir.path("path.csv");
  CHECK(run("scan --conjecture path-max --mode exhaustive --n 5 --k 2 --output " + csv).code == 0);
  const std::string summary = read_file(csv);
  CHECK(summary.find("path-max,5,2,21,0,") != std::string::npos);
  CHECK(summary.find("," + distspec::encode_graph6(distspec::build(distspec::FamilySpec::path(5))) + ",") ==
        std::string::npos);  // the extremal is reported in canonical form
  CHECK(summary.find("," + distspec::canonical_graph6(distspec::build(distspec::FamilySpec::path(5))) + ",") !=
        std::string::npos);

  Run r = run("scan --conjecture lambda2-half --mode exhaustive --n 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda2-half,6,,112,0,1,") != std::string::npos);

  r = run("scan --conjecture bipartite-sk --mode exhaustive --n 6 --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("bipartite-sk,6,2,") != std::string::npos);
  CHECK(r.out.find(",0,3,") != std::string::npos);

  CHECK(run("scan --conjecture path-max --mode trees --n 9 --k 3").code == 0);

  // k = n makes every graph tie the path, which the scan reports as violations
  const std::string viol = dir.path("tie.jsonl");
  CHECK(run("scan --conjecture path-max --mode exhaustive --n 4 --k 4 --violations " + viol).code == 1);
  const std::string records = read_file(viol);
  CHECK(std::count(records.begin(), records.end(), '\n') == 5);
}

TEST_CASE("scan subcommand errors") {
  TempDir dir;
  CHECK(run("scan --conjecture path-max --mode exhaustive --n 7 --k 2").code == 2);
  CHECK(run("scan --conjecture path-max --mode trees --n 10 --k 2").code == 2);
  CHECK(run("scan --conjecture path-max --mode file --k 2").code == 2);
  CHECK(run("scan --conjecture nope --mode exhaustive --n 4").code == 2);
  const std::string mixed = dir.file("mixed.g6", "Ch\nD~{\n");
  CHECK(run("scan --conjecture lambda2-half --mode file --input " + mixed).code == 2);
  const std::string odd = dir.file("odd.g6", distspec::encode_graph6(distspec::build(distspec::FamilySpec::cycle(5))) + "\n");
  CHECK(run("scan --conjecture bipartite-sk --mode file --k 2 --input " + odd).code == 1);
}

TEST_CASE("threshold subcommand") {
  Run r = run("threshold --k 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("n0: 109226\n") != std::string::npos);
  CHECK(r.out.find("upper estimate") == std::string::npos);
  r = run("threshold --k 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("n0: 2\n") != std::string::npos);
  r = run("threshold --k 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("upper estimate") != std::string::npos);
  CHECK(run("threshold --k 1").code == 2);
  CHECK(run("threshold").code == 2);
}

TEST_CASE("families subcommand") {
  Run r = run("families --kind trees --n 6");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  r = run("families --kind connected --n 4");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  r = run("families --family path --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Ch", 0) == 0);
}

TEST_CASE("global usage handling") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("spectrum --graph6 Ch --bogus").code == 2);
}
