#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PA_DIAM_BIN) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(cmd.c_str(), "r"), ::pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int raw = ::pclose(pipe.release());
  return {WEXITSTATUS(raw), out};
}

json run_json(const std::string& args) {
  const Result r = run(args);
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << r.out;
  return json::parse(r.out);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { fs::create_directories(dir_); }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_ = fs::temp_directory_path() / ("padiam_cli_" + std::to_string(::getpid()));
};

}  // namespace

TEST_F(Cli, GenerateAndReadBack) {
  ASSERT_EQ(run("generate --n 300 --m 2 --delta 1 --seed 4 --out " + path("g.txt")).status, 0);
  ASSERT_EQ(run("generate --n 300 --m 2 --delta 1 --seed 4 --format binary --out " +
                path("g.bin"))
                .status,
            0);
  const json a = run_json("diameter --graph " + path("g.txt"));
  const json b = run_json("diameter --graph " + path("g.bin"));
  const json c = run_json("diameter --n 300 --m 2 --delta 1 --graph-seed 4");
  EXPECT_EQ(a["diameter"], b["diameter"]);
  EXPECT_EQ(a["diameter"], c["diameter"]);
  EXPECT_EQ(a["n"], 300);
}

TEST_F(Cli, ProbAndEnumerate) {
  std::ofstream(path("ev.txt")) << "# one edge\n3 1 1\n";
  const json p = run_json("prob --events " + path("ev.txt") + " --n 3 --m 1 --delta 0");
  EXPECT_DOUBLE_EQ(p["probability"].get<double>(), 0.5);
  EXPECT_NEAR(p["log_probability"].get<double>(), std::log(0.5), 1e-15);

  const Result e = run("enumerate --n 4 --m 1 --delta 0");
  ASSERT_EQ(e.status, 0);
  EXPECT_EQ(e.out.rfind("outcome_id,edge_sequence,probability\n", 0), 0u);
  EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 7);
  EXPECT_NE(e.out.find("0,(2,1,1) (3,1,1) (4,1,1),0.25"), std::string::npos);
}

TEST_F(Cli, DistanceCommands) {
  const std::string g = " --n 2000 --m 2 --delta 1 --graph-seed 3";
  const json bfs = run_json("bfs --source 5" + g);
  EXPECT_EQ(bfs["shell_sizes"][0], 1);
  const json typ = run_json("typdist --pairs 500 --seed 2 --csv " + path("d.csv") + g);
  EXPECT_EQ(typ["pairs"], 500);
  EXPECT_TRUE(typ.contains("log_nu_n"));
  std::ifstream csv(path("d.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  EXPECT_EQ(lines, 501);
  const json growth = run_json("growth --vertex 7 --radius 3" + g);
  EXPECT_EQ(growth["cumulative"].size(), 4u);
  const json mn = run_json("minnbhd --radius 2 --threshold 5" + g);
  EXPECT_EQ(mn["threshold"], 5);
}

TEST_F(Cli, Predict) {
  const json p = run_json("predict --n 1000000 --m 1 --delta 0");
  EXPECT_EQ(p["regime"], "m1");
  EXPECT_NEAR(p["predicted_diameter"].get<double>(), 49.61, 1e-2);
  EXPECT_NEAR(p["constants"]["theta"].get<double>(), 0.278465, 1e-6);
  EXPECT_EQ(run_json("predict --n 100 --m 2 --delta 1")["regime"], "positive_delta");
}

TEST_F(Cli, ExperimentAndResume) {
  std::ofstream(path("plan.txt")) << "m = 2\ndelta = 1\nsizes = 2^8, 2^9\nseeds_per_size = 2\n"
                                  << "pairs_per_graph = 100\noutput = " << path("run.csv") << "\n";
  const json r = run_json("experiment --plan " + path("plan.txt"));
  EXPECT_EQ(r["rows"], 4);
  EXPECT_EQ(run_json("experiment --resume --workers 2 --plan " + path("plan.txt"))["rows"], 4);
}

TEST_F(Cli, ErrorsExitNonZero) {
  EXPECT_NE(run("generate --n 10 --m 1 --delta -1").status, 0);
  EXPECT_NE(run("diameter --graph " + path("missing.txt")).status, 0);
  EXPECT_NE(run("nonsense").status, 0);
  EXPECT_NE(run("").status, 0);
}
