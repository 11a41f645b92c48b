#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "assign/bench.hpp"
#include "assign/cli.hpp"
#include "json.hpp"

namespace assign::cli {
namespace {

namespace fs = std::filesystem;

const std::string kWorkedFile = ASSIGN_FIXTURE_DIR "/worked_example.txt";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("assignbench_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliSolveTest, HungarianOnWorkedExample) {
  const auto r = invoke({"solve", kWorkedFile, "--solver", "hungarian"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("optimal cost: 15"), std::string::npos);
  EXPECT_NE(r.out.find("worker 0 -> job 0"), std::string::npos);
  EXPECT_NE(r.out.find("worker 2 -> job 2"), std::string::npos);
}

TEST(CliSolveTest, EverySolverOnSingleCell) {
  TempDir dir;
  const std::string path = dir.file("one.txt");
  std::ofstream(path) << "1\n17\n";
  for (const char* s : {"brute", "hungarian", "bnb_fifo", "bnb_lifo", "bnb_least", "bnb_astar"}) {
    const auto r = invoke({"solve", path, "--solver", s});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("optimal cost: 17"), std::string::npos) << s;
  }
}

TEST(CliSolveTest, UnknownSolver) {
  const auto r = invoke({"solve", kWorkedFile, "--solver", "simplex"});
  EXPECT_EQ(r.code, kExitOperational);
  EXPECT_NE(r.err.find("usage"), std::string::npos);
}

TEST(CliSolveTest, JsonHasReportFields) {
  const auto r = invoke({"solve", kWorkedFile, "--solver", "hungarian", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  std::set<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.insert(key);
  EXPECT_EQ(keys, (std::set<std::string>{"solver", "input_digest", "optimal_cost", "assignment",
                                         "nodes_expanded", "edges_generated", "elapsed_ns",
                                         "certificate"}));
  EXPECT_EQ(j["optimal_cost"], 15);
  EXPECT_EQ(j["solver"], "hungarian");
  EXPECT_EQ(j["certificate"]["row_potentials"], nlohmann::json({7, 4, 1}));

  const auto b = invoke({"solve", kWorkedFile, "--solver", "brute", "--json"});
  EXPECT_TRUE(nlohmann::json::parse(b.out)["certificate"].is_null());
}

TEST(CliSolveTest, ParseAndCapErrors) {
  TempDir dir;
  const std::string bad = dir.file("bad.txt");
  std::ofstream(bad) << "2\n1 2\n3\n";
  EXPECT_EQ(invoke({"solve", bad}).code, kExitUsage);
  EXPECT_EQ(invoke({"solve", dir.file("missing.txt")}).code, kExitUsage);
  const std::string k13 = ASSIGN_FIXTURE_DIR "/k13.txt";
  EXPECT_EQ(invoke({"solve", k13, "--solver", "brute"}).code, kExitOperational);
  EXPECT_EQ(invoke({"solve", k13, "--solver", "hungarian"}).code, kExitOk);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "--trials", "zero"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "--sizes", "5..3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "--solvers", "brute,nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "--cost-range", "9..1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliBenchTest, CsvRowCount) {
  TempDir dir;
  const std::string csv = dir.file("out.csv");
  const auto r = invoke({"bench", "--sizes", "3..6", "--trials", "3", "--seed", "7", "--csv", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = slurp(csv);
  EXPECT_TRUE(text.starts_with(std::string(bench::kCsvHeader) + "\n"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 4 * 3 * 6);
}

TEST(CliBenchTest, SvgNeedsTwoSizes) {
  TempDir dir;
  const auto r = invoke({"bench", "--sizes", "3", "--trials", "1", "--svg", dir.file("p.svg")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("InsufficientData"), std::string::npos);
}

TEST(CliBenchTest, WritesSvgAndSkipsByCap) {
  TempDir dir;
  const auto r = invoke({"bench", "--sizes", "11,12", "--trials", "1", "--solvers",
                         "brute,hungarian", "--csv", dir.file("o.csv"), "--svg", dir.file("o.svg")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(slurp(dir.file("o.csv")).find("brute,12,"), std::string::npos);
  EXPECT_NE(slurp(dir.file("o.csv")).find(",-1,-1,-1,-1"), std::string::npos);
  EXPECT_NE(slurp(dir.file("o.svg")).find("<polyline"), std::string::npos);
}

TEST(CliBenchTest, IdenticalCsvModuloElapsed) {
  TempDir dir;
  const std::vector<std::string> flags = {"bench", "--sizes", "2..5", "--trials", "2",
                                          "--seed", "31", "--csv"};
  auto a = flags, b = flags;
  a.push_back(dir.file("a.csv"));
  b.push_back(dir.file("b.csv"));
  ASSERT_EQ(invoke(a).code, kExitOk);
  ASSERT_EQ(invoke(b).code, kExitOk);
  const std::regex elapsed(",[0-9]+,([0-9-]+)\n");
  EXPECT_EQ(std::regex_replace(slurp(dir.file("a.csv")), elapsed, ",X,$1\n"),
            std::regex_replace(slurp(dir.file("b.csv")), elapsed, ",X,$1\n"));
}

TEST(CliBenchTest, UnwritablePath) {
  const auto r = invoke({"bench", "--sizes", "2", "--csv", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, kExitOperational);
}

TEST(CliVerifyTest, WorkedExamplePasses) {
  const auto r = invoke({"verify", kWorkedFile});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS hungarian dual certificate"), std::string::npos);
}

TEST(CliVerifyTest, RandomInstancesPass) {
  const auto r = invoke({"verify", "--random", "5", "20", "99"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("20 instance(s) verified"), std::string::npos);
}

TEST(CliVerifyTest, OversizeIsOperationalError) {
  const auto r = invoke({"verify", ASSIGN_FIXTURE_DIR "/k13.txt"});
  EXPECT_EQ(r.code, kExitOperational);
  EXPECT_NE(r.err.find("InstanceTooLarge"), std::string::npos);
}

}  // namespace
}  // namespace assign::cli
