// Front end behavior: exit codes, file formats, config fallback, determinism.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "appellkit/cli.hpp"
#include "appellkit/verify.hpp"

using namespace appellkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "appellkit");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("appellkit_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> v;
  for (std::string s; std::getline(in, s);) {
    v.push_back(s);
  }
  return v;
}

}  // namespace

TEST(Cli, TablesKmax4) {
  const auto dir = scratch("tables4");
  const auto r = cli({"tables", "--kmax", "4", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = lines(dir / "ck.csv");
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[1], "0,1");
  EXPECT_EQ(c[2], "1,1/3");
  EXPECT_EQ(c[3], "2,1/3");
  EXPECT_EQ(c[4], "3,1/5");
  EXPECT_EQ(c[5], "4,1/5");
  // fock row k = 2: b_2 = 2!/(3*4)
  const auto w = lines(dir / "weights.csv");
  EXPECT_EQ(w[0], "k,c_hardy,b_hardy,c_fock,b_fock,c_dirichlet,b_dirichlet,c_bergman,b_bergman");
  EXPECT_EQ(w[3].substr(0, 2), "2,");
  std::stringstream row(w[3]);
  std::vector<std::string> cells;
  for (std::string cell; std::getline(row, cell, ',');) {
    cells.push_back(cell);
  }
  EXPECT_EQ(cells[4], "1/6");
}

TEST(Cli, TablesKmax0) {
  const auto dir = scratch("tables0");
  ASSERT_EQ(cli({"tables", "--kmax", "0", "--out", dir.string()}).code, 0);
  const auto t = lines(dir / "tjk.csv");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1], "0,0,1");
  EXPECT_EQ(lines(dir / "ck.csv")[1], "0,1");
}

TEST(Cli, TablesErrors) {
  EXPECT_EQ(cli({"tables", "--kmax", "65"}).code, 2);
  const auto r = cli({"tables", "--kmax", "2", "--out", "/nonexistent/appellkit/dir"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("IOError"), std::string::npos);
}

TEST(Cli, KernelFockReal) {
  const auto r = cli({"kernel", "--space", "fock", "--q", "0.5", "--p", "0.5", "-N", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::stringstream ss(r.out);
  std::string header;
  std::string row;
  std::getline(ss, header);
  std::getline(ss, row);
  std::vector<double> v;
  std::stringstream cells(row);
  for (std::string c; std::getline(cells, c, ',');) {
    v.push_back(std::stod(c));
  }
  ASSERT_EQ(v.size(), 13u);
  EXPECT_NEAR(v[8], std::exp(0.25), 1e-15 + v[12]);
}

TEST(Cli, KernelHardyOutsideBall) {
  const auto r = cli({"kernel", "--space", "hardy", "--q", "1.2", "--p", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OutOfDomain"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, KernelGrid) {
  const auto r = cli({"kernel", "--space", "hardy", "--grid", "-0.5:0.5:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
  EXPECT_EQ(cli({"kernel", "--grid", "0:1"}).code, 2);
}

TEST(Cli, TransformEta3) {
  const auto dir = scratch("transform");
  std::ofstream(dir / "in.json") << "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]]";
  const auto r = cli({"transform", "--input", (dir / "in.json").string(), "--output", (dir / "out.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j;
  std::ifstream(dir / "out.json") >> j;
  ASSERT_EQ(j.size(), 4u);
  EXPECT_NEAR(j[3][0].get<double>(), 1.0 / std::sqrt(6.0), 1e-16);
  EXPECT_EQ(j[0][0].get<double>(), 0.0);
}

TEST(Cli, TransformRejectsBadInput) {
  const auto dir = scratch("transform_bad");
  std::ofstream(dir / "in.json") << "[[1,2,3]]";
  EXPECT_EQ(cli({"transform", "--input", (dir / "in.json").string()}).code, 2);
  EXPECT_EQ(cli({"transform", "--input", (dir / "missing.json").string()}).code, 2);
}

TEST(Cli, VerifyFmrPassesWithExactTable) {
  const auto r = cli({"verify", "--suite", "fmr"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  bool saw_table = false;
  for (const auto& res : j.at("results")) {
    if (res.at("identity") == "table1") {
      saw_table = true;
      const auto note = res.at("note").get<std::string>();
      EXPECT_EQ(note.find("mismatch"), std::string::npos);
    }
  }
  EXPECT_TRUE(saw_table);
}

TEST(Cli, VerifyGammaFaultFailsNamed) {
  const auto r = cli({"verify", "--suite", "operators", "--inject-gamma-fault", "0.9"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  bool named = false;
  for (const auto& res : j.at("results")) {
    if (res.at("identity") == "gamma_recurrence") {
      named = !res.at("pass").get<bool>();
    }
  }
  EXPECT_TRUE(named);
  EXPECT_NE(r.err.find("FAIL gamma_recurrence"), std::string::npos);
}

TEST(Cli, VerifyDeterministic) {
  const auto a = cli({"verify", "--suite", "spaces", "--seed", "11"});
  const auto b = cli({"verify", "--suite", "spaces", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConfigFromEnvironment) {
  const auto dir = scratch("config");
  std::ofstream(dir / "cfg.json") << R"({"degree_cap": 6, "format": "csv"})";
  ::setenv("APPELLKIT_CONFIG", (dir / "cfg.json").string().c_str(), 1);
  const auto r = cli({"verify", "--suite", "appell"});
  ::unsetenv("APPELLKIT_CONFIG");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("identity,reference", 0), 0u);
  EXPECT_NE(r.out.find("fueter_regularity,\"fueter_operator(Q_k) = 0, k <= N\",7,"), std::string::npos);
}

TEST(Cli, BadConfigIsUsageError) {
  const auto dir = scratch("badconfig");
  std::ofstream(dir / "cfg.json") << R"({"degree_cap": 30})";
  const auto r = cli({"verify", "--config", (dir / "cfg.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DomainError"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Table1Markdown) {
  const auto r = cli({"table1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| bergman |"), std::string::npos);
  EXPECT_NE(r.out.find("1/2 |f'(0)|^2"), std::string::npos);
  EXPECT_EQ(cli({"table1", "--format", "csv"}).code, 0);
}
