#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace triwalk::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "triwalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("triwalk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string gen(const std::string& family) {
    const auto r = invoke({"gen", family});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return write(family + ".edges", r.out);
  }

  fs::path dir_;
};

std::string data(const std::string& name) { return std::string(TRIWALK_TEST_DATA) + "/" + name; }

TEST_F(CliTest, Gen) {
  EXPECT_EQ(lines(invoke({"gen", "double-cone:5"}).out), 15u);
  EXPECT_EQ(lines(invoke({"gen", "k4"}).out), 6u);
  EXPECT_EQ(invoke({"gen", "complete:5"}).code, kExitOk);
  EXPECT_EQ(invoke({"gen", "cycle:2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "wheel:5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "k4", "--format", "json"}).out.rfind("{\"n\": 4", 0), 0u);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", data("k4.edges"), "--tol", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "/nonexistent/graph.edges"}).code, kExitUsage);
}

TEST_F(CliTest, Triangulate) {
  const auto k4 = invoke({"triangulate", data("k4.edges")});
  EXPECT_EQ(k4.code, kExitOk);
  EXPECT_EQ(lines(k4.out), 4u);

  const auto c4 = invoke({"triangulate", data("c4.edges")});
  EXPECT_EQ(c4.code, kExitNotTriangulable);
  EXPECT_NE(c4.err.find("not triangulable: no directed triangles"), std::string::npos);

  const auto g6 = invoke({"triangulate", gen("double-cone:6")});
  EXPECT_EQ(g6.code, kExitOk);
  EXPECT_EQ(lines(g6.out), 12u);

  EXPECT_EQ(invoke({"triangulate", gen("double-cone:8"), "--limit", "1"}).code, kExitNumerical);
}

TEST_F(CliTest, VerifyExitCodes) {
  const auto k4 = invoke({"verify", data("k4.edges"), data("k4.partition")});
  EXPECT_EQ(k4.code, kExitOk) << k4.err;
  EXPECT_NE(k4.out.find("\"matched\": true"), std::string::npos);

  for (int n = 3; n <= 8; ++n)
    EXPECT_EQ(invoke({"verify", gen("double-cone:" + std::to_string(n))}).code, kExitOk);

  const auto bad = invoke({"verify", data("k4.edges"), data("k4_corrupted.partition")});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.err.find("overlap"), std::string::npos);

  EXPECT_EQ(invoke({"verify", data("c4.edges")}).code, kExitNotTriangulable);
  EXPECT_EQ(invoke({"verify", data("c4.edges"), "--conventional"}).code, kExitOk);
  // A pairing tolerance below round-off cannot be met.
  EXPECT_EQ(invoke({"verify", data("k4.edges"), "--tol", "1e-30"}).code, kExitValidation);
}

TEST_F(CliTest, DimensionCap) {
  ::setenv("TRIWALK_MAX_DIM", "10", 1);
  const auto r = invoke({"verify", data("k4.edges")});
  ::unsetenv("TRIWALK_MAX_DIM");
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("TRIWALK_MAX_DIM"), std::string::npos);
}

TEST_F(CliTest, Spectrum) {
  const auto t = invoke({"spectrum", data("k4.edges"), "--op", "T"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_EQ(lines(t.out), 4u);
  std::istringstream in(t.out);
  double prev = -10.0;
  for (double x; in >> x; prev = x) EXPECT_GE(x, prev);

  const auto sc = invoke({"spectrum", data("k4.edges"), "--op", "Sc", "--format", "json"});
  EXPECT_EQ(sc.code, kExitOk);
  EXPECT_NE(sc.out.find("\"eigenvalues\": [{\"re\": "), std::string::npos);
  EXPECT_EQ(invoke({"spectrum", data("k4.edges"), "--op", "X"}).code, kExitUsage);
}

TEST_F(CliTest, Simulate) {
  const auto r = invoke({"simulate", gen("double-cone:3"), "--steps", "50", "--start-arc", "0 2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), 52u);
  EXPECT_EQ(r.out.rfind("t,vertex_0,vertex_1,vertex_2,vertex_3,vertex_4\n", 0), 0u);

  EXPECT_EQ(invoke({"simulate", data("k4.edges"), "--start-arc", "0 9"}).code, kExitValidation);
  EXPECT_EQ(invoke({"simulate", data("k4.edges"), "--start-arc", "zero"}).code, kExitUsage);
  const auto strided = invoke({"simulate", data("k4.edges"), "--steps", "10", "--stride", "5"});
  EXPECT_EQ(lines(strided.out), 4u);
}

TEST_F(CliTest, OracleAndLedger) {
  const auto spec = invoke({"oracle", "double-cone", "4", "--what", "T-spectrum"});
  EXPECT_EQ(spec.code, kExitOk);
  EXPECT_NE(spec.out.find("\"b\": 2"), std::string::npos);

  const auto vectors = invoke({"oracle", "double-cone", "4", "--what", "birth-vectors", "--k", "0"});
  EXPECT_EQ(vectors.code, kExitOk);
  EXPECT_NE(vectors.out.find("\"even_extra\": true"), std::string::npos);
  EXPECT_EQ(invoke({"oracle", "double-cone", "2"}).code, kExitUsage);

  const auto ledger = invoke({"ledger", gen("double-cone:5")});
  EXPECT_EQ(ledger.code, kExitOk);
  EXPECT_NE(ledger.out.find("\"consistent\": true"), std::string::npos);
}

TEST_F(CliTest, OutputFileAndDeterminism) {
  const std::string path = (dir_ / "report.json").string();
  EXPECT_EQ(invoke({"verify", data("k4.edges"), "--out", path}).code, kExitOk);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), invoke({"verify", data("k4.edges")}).out);
  EXPECT_EQ(invoke({"oracle", "double-cone", "5", "--what", "T-eigenvectors"}).out,
            invoke({"oracle", "double-cone", "5", "--what", "T-eigenvectors"}).out);
}

}  // namespace
}  // namespace triwalk::cli
