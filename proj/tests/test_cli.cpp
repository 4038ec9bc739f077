#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sline/cli/app.hpp"

namespace sline {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sline");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("sline_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, ToyTwoLineGraph) {
  auto r = run_cli({"slinegraph", "--input", test::toy_path(), "--s", "2", "--algorithm", "efficient",
                    "--heuristics", "f0", "--workers", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0\t1\n1\t2\n");
}

TEST(Cli, AllKernelsWriteIdenticalBytes) {
  std::string reference;
  for (std::string alg : {"naive", "wedge", "efficient", "spgemm"}) {
    auto r = run_cli({"slinegraph", "-i", test::toy_path(), "-s", "1", "-a", alg, "-w", "2"});
    ASSERT_EQ(r.code, 0) << alg << ": " << r.err;
    if (reference.empty()) reference = r.out;
    EXPECT_EQ(r.out, reference) << alg;
  }
  EXPECT_EQ(reference, "0\t1\n1\t2\n1\t3\n2\t3\n");
}

TEST(Cli, WeightsColumnAndRelabel) {
  auto r = run_cli({"slinegraph", "-i", test::toy_path(), "-s", "1", "--weights", "--relabel", "asc",
                    "--partition", "cyclic", "-w", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0\t1\t2\n1\t2\t3\n1\t3\t1\n2\t3\t1\n");
}

TEST(Cli, RejectsBadArguments) {
  EXPECT_EQ(run_cli({"slinegraph", "-i", test::toy_path(), "--s", "0"}).code, cli::usage);
  EXPECT_EQ(run_cli({"slinegraph", "-i", test::toy_path(), "--heuristics", "f2", "--skip-visited"}).code,
            cli::usage);
  EXPECT_EQ(run_cli({"slinegraph", "-i", test::toy_path(), "--algorithm", "magic"}).code, cli::usage);
  EXPECT_EQ(run_cli({}).code, cli::usage);
  EXPECT_EQ(run_cli({"slinegraph", "-i", "/nonexistent/file.tsv"}).code, cli::failure);
}

TEST(Cli, MalformedInputFails) {
  TempDir dir;
  auto bad = dir.file("bad.tsv", "0 1\n0 one\n");
  auto r = run_cli({"slinegraph", "-i", bad});
  EXPECT_EQ(r.code, cli::failure);
  EXPECT_NE(r.err.find("2"), std::string::npos);
}

TEST(Cli, OutputFilesAndStatsJson) {
  TempDir dir;
  auto edges = dir.file("edges.tsv");
  auto stats = dir.file("stats.json");
  auto map = dir.file("map.tsv");
  auto r = run_cli({"slinegraph", "-i", test::toy_path(), "-s", "2", "-o", edges, "--stats", stats,
                    "--squeeze-map", map, "-w", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(edges), "0\t1\n1\t2\n");
  EXPECT_EQ(slurp(map), "0\t0\n1\t1\n2\t2\n");

  auto doc = json::parse(slurp(stats));
  for (const char* key : {"algorithm", "s", "partition", "workers", "heuristics", "line_edges", "line_vertices",
                          "components", "candidate_pairs", "set_intersections", "per_worker_visits", "phase_times"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["line_edges"], 2);
  EXPECT_EQ(doc["components"], 1);
  EXPECT_EQ(doc["per_worker_visits"].size(), 2u);
  EXPECT_TRUE(doc["phase_times"].contains("load"));
  EXPECT_TRUE(doc["phase_times"].contains("overlap"));
}

TEST(Cli, SparseLabelsAreWrittenBack) {
  TempDir dir;
  auto in = dir.file("sparse.tsv", "1000 7\n1000 900000\n5000000 7\n5000000 900000\n");
  auto r = run_cli({"slinegraph", "-i", in, "-s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1000\t5000000\n");
}

TEST(Cli, Components) {
  auto r = run_cli({"components", "-i", test::toy_path(), "-s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["components"], 1);
  EXPECT_EQ(doc["largest_component"], 3);

  auto none = json::parse(run_cli({"components", "-i", test::toy_path(), "-s", "4"}).out);
  EXPECT_EQ(none["line_edges"], 0);
  EXPECT_EQ(none["components"], 0);

  TempDir dir;
  auto two = dir.file("two.tsv", "0 0\n0 1\n1 0\n1 1\n2 5\n2 6\n3 5\n3 6\n");
  auto split = json::parse(run_cli({"components", "-i", two, "-s", "2"}).out);
  EXPECT_EQ(split["components"], 2);
}

TEST(Cli, SpectralSweep) {
  auto r = run_cli({"spectral", "-i", test::toy_path(), "--s", "1", "--s", "2", "--s", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["component_size"], 4);
  EXPECT_GT(rows[0]["lambda2"].get<double>(), 0.0);
  EXPECT_NEAR(rows[1]["lambda2"].get<double>(), 1.0, 1e-9);  // path A-B-C
  EXPECT_TRUE(rows[2]["lambda2"].is_null());
}

TEST(Cli, BenchMatrixAgrees) {
  auto r = run_cli({"bench", "-i", test::toy_path(), "-s", "2", "-w", "2", "--repetitions", "2", "--cells",
                    "naive,wedge,spgemm,efficient-f0,efficient-f4-cyclic"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["consistent"].get<bool>());
  ASSERT_EQ(doc["cells"].size(), 5u);
  for (const auto& cell : doc["cells"]) {
    EXPECT_EQ(cell["line_edges"], 2);
    EXPECT_EQ(cell["seconds"].size(), 2u);
    EXPECT_TRUE(cell["counters_stable"].get<bool>());
  }
  EXPECT_EQ(doc["cells"][4]["partition"], "cyclic");
}

TEST(Cli, BenchDryCount) {
  auto r = run_cli({"bench", "--dry-count", "--num-edges", "265214", "--cells", "naive"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["cells"][0]["candidate_pairs"].get<std::uint64_t>(), 35169100291ull);
  EXPECT_EQ(run_cli({"bench", "--cells", "naive"}).code, cli::usage);
  EXPECT_EQ(run_cli({"bench", "--dry-count", "--num-edges", "3", "--cells", "warp"}).code, cli::usage);
}

TEST(Cli, Stats) {
  auto r = run_cli({"stats", "-i", test::toy_path()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 12);
  EXPECT_EQ(doc["m"], 4);
  EXPECT_EQ(doc["max_edge_size"], 8);
  EXPECT_DOUBLE_EQ(doc["avg_edge_size"].get<double>(), 4.5);
}

TEST(Cli, WorkerDefaultFromEnvironment) {
  ::setenv(cli::workers_env, "3", 1);
  EXPECT_EQ(cli::default_workers(), 3u);
  ::setenv(cli::workers_env, "zero", 1);
  EXPECT_GE(cli::default_workers(), 1u);
  ::unsetenv(cli::workers_env);
}

}  // namespace
}  // namespace sline
