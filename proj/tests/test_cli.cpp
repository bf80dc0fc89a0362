// Copyright 2026 The apnkit Authors.
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "apnkit/constructions.hpp"
#include "apnkit/invariants.hpp"
#include "apnkit/vbf.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace apnkit {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_(std::filesystem::temp_directory_path() /
              (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()))) {}
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }
  void write(const std::string& text) const { std::ofstream(path_) << text; }

 private:
  std::filesystem::path path_;
};

TEST(CliCatalog, MatchesGoldenTable) {
  const CliRun r = run({"catalog", "--m-max", "34"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, slurp(std::filesystem::path(APNKIT_TEST_DATA_DIR) / "table2.csv"));
}

TEST(CliCatalog, FigureDataAtPowerOfTwo) {
  const CliRun r = run({"catalog", "--m-max", "16", "--figure-data"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  std::string line, last;
  std::getline(in, line);
  EXPECT_EQ(line, "m,count,lower_bound,upper_bound");
  int rows = 0;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  EXPECT_EQ(rows, 7);
  EXPECT_EQ(last, "16,20,32.000000,20.000000");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliCatalog, RejectsBadArguments) {
  EXPECT_EQ(run({"catalog", "--m-max", "3"}).code, cli::kParameterError);
  EXPECT_EQ(run({"catalog", "--m-max", "0"}).code, cli::kParameterError);
  EXPECT_EQ(run({"catalog"}).code, cli::kParameterError);
  EXPECT_EQ(run({"catalog", "--m-max", "4", "--figure-data", "--with-invariants"}).code,
            cli::kParameterError);
  EXPECT_EQ(run({"catalog", "--m-max", "8", "--with-invariants"}).code, cli::kParameterError);
}

TEST(CliCatalog, WithInvariantsRows) {
  const FieldCtx ctx = FieldCtx::create(2);
  const std::uint64_t rank2 = gamma_rank(pott_zhou(ctx, pott_zhou_params(ctx, 1, 0)));
  const CliRun r = run({"catalog", "--m-max", "4", "--with-invariants"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "m,k,s,alpha,n,is_apn,algebraic_degree,gamma_rank,aut_l_order\n"
            "2,1,0,2,4,true,2," + std::to_string(rank2) + ",360\n"
            "4,1,0,2,8,true,2,,180\n"
            "4,1,2,2,8,true,2,,180\n");
}

TEST(CliConstruct, PottZhouTableMatchesLibrary) {
  const CliRun r = run({"construct", "--family", "pott-zhou", "--m", "4", "--k", "1", "--s", "0"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  const Vbf f = read_vbf(in);
  EXPECT_EQ(f.size(), 256u);
  const FieldCtx ctx = FieldCtx::create(4);
  EXPECT_EQ(f, pott_zhou(ctx, pott_zhou_params(ctx, 1, 0)));
}

TEST(CliConstruct, GoldTableHas32Entries) {
  const CliRun r = run({"construct", "--family", "gold", "--m", "5", "--k", "1"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  EXPECT_EQ(read_vbf(in).size(), 32u);
}

TEST(CliConstruct, InvalidParametersNameTheInvariant) {
  CliRun r = run({"construct", "--m", "4", "--k", "1", "--s", "1"});
  EXPECT_EQ(r.code, cli::kParameterError);
  EXPECT_NE(r.err.find("s must be even"), std::string::npos) << r.err;
  r = run({"construct", "--m", "4", "--k", "2", "--s", "0"});
  EXPECT_EQ(r.code, cli::kParameterError);
  r = run({"construct", "--m", "4", "--k", "1", "--s", "0", "--alpha", "1"});
  EXPECT_EQ(r.code, cli::kParameterError);
  r = run({"construct", "--m", "4", "--k", "1", "--s", "0", "--alpha", "zz"});
  EXPECT_EQ(r.code, cli::kParameterError);
  r = run({"construct", "--m", "4", "--k", "1", "--s", "0", "--alpha", "10"});
  EXPECT_EQ(r.code, cli::kParameterError);
  r = run({"construct", "--family", "bent", "--m", "4"});
  EXPECT_EQ(r.code, cli::kParameterError);
}

TEST(CliConstruct, UnsafeFlagBuildsNonApnFunction) {
  TempFile file("apnkit_unsafe");
  ASSERT_EQ(run({"construct", "--m", "4", "--k", "1", "--s", "1", "--unsafe-skip-validation",
                 "--out", file.str()})
                .code,
            cli::kOk);
  const CliRun r = run({"check", file.str(), "--apn"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json::parse(r.out)["is_apn"], false);
}

TEST(CliCheck, ReportsAllFieldsByDefault) {
  TempFile file("apnkit_check");
  ASSERT_EQ(run({"construct", "--m", "2", "--k", "1", "--s", "0", "--out", file.str()}).code,
            cli::kOk);
  const CliRun r = run({"check", "--in", file.str()});
  ASSERT_EQ(r.code, cli::kOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["is_apn"], true);
  EXPECT_EQ(j["algebraic_degree"], 2);
  // 15 directions, 8 values hit twice, 8 missed.
  EXPECT_EQ(j["differential_spectrum"], json::parse(R"({"0":120,"2":120})"));
  const json only = json::parse(run({"check", file.str(), "--degree"}).out);
  EXPECT_FALSE(only.contains("is_apn"));
  EXPECT_EQ(only["algebraic_degree"], 2);
}

TEST(CliCheck, MalformedFileExitsWithFormatError) {
  TempFile file("apnkit_bad");
  file.write("n=2\n0 1 2\n");
  EXPECT_EQ(run({"check", file.str()}).code, cli::kFormatError);
  file.write("garbage\n");
  EXPECT_EQ(run({"check", file.str()}).code, cli::kFormatError);
  EXPECT_EQ(run({"check", "/nonexistent/apnkit.vbf"}).code, cli::kFormatError);
}

TEST(CliWitness, AllModesVerify) {
  struct Case {
    std::vector<std::string> args;
    unsigned k, s;
  };
  const std::vector<Case> cases = {
      {{"witness", "--m", "6", "--k", "1", "--s", "2", "--negate-k"}, 5, 2},
      {{"witness", "--m", "6", "--k", "1", "--s", "2", "--negate-s"}, 1, 4},
      {{"witness", "--m", "6", "--k", "1", "--s", "2", "--negate-both"}, 5, 4},
      {{"witness", "--m", "4", "--k", "1", "--s", "0", "--to-alpha", "4"}, 1, 0},
  };
  for (const Case& c : cases) {
    const CliRun r = run(c.args);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["target"]["k"], c.k);
    EXPECT_EQ(j["target"]["s"], c.s);
    EXPECT_TRUE(j["witness"].contains("L"));
  }
}

TEST(CliWitness, RejectsAmbiguousOrInvalidRequests) {
  EXPECT_EQ(run({"witness", "--m", "6", "--k", "1", "--s", "2"}).code, cli::kParameterError);
  EXPECT_EQ(run({"witness", "--m", "6", "--k", "1", "--s", "2", "--negate-k", "--negate-s"}).code,
            cli::kParameterError);
  EXPECT_EQ(run({"witness", "--m", "6", "--k", "1", "--s", "2", "--to-alpha", "1"}).code,
            cli::kParameterError);
  EXPECT_EQ(run({"witness", "--m", "6", "--k", "1", "--s", "3", "--negate-k"}).code,
            cli::kParameterError);
}

TEST(CliGoldAut, M4Breakdown) {
  const CliRun r = run({"gold-aut", "--m", "4", "--k", "1"});
  ASSERT_EQ(r.code, cli::kOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["monomial"], 60);
  EXPECT_EQ(j["binomial"], 300);
  EXPECT_EQ(j["formula_total"], 360);
  EXPECT_EQ(j["case2"]["candidates"], 900);
  EXPECT_EQ(j["case2"]["permutations"], 0);
  EXPECT_EQ(j["search_aut_l"], 360);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_FALSE(j.contains("witnesses"));
}

TEST(CliGoldAut, M5SearchAgrees) {
  const CliRun r = run({"gold-aut", "--m", "5", "--enumerate"});
  ASSERT_EQ(r.code, cli::kOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["monomial"], 155);
  EXPECT_TRUE(j["binomial"].is_null());
  EXPECT_EQ(j["search_aut_l"], 155);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_EQ(j["witnesses"].size(), 155u);
}

TEST(CliGoldAut, GcdViolationIsAParameterError) {
  EXPECT_EQ(run({"gold-aut", "--m", "6", "--k", "2"}).code, cli::kParameterError);
  EXPECT_EQ(run({"gold-aut", "--m", "11"}).code, cli::kParameterError);
}

TEST(CliInvariants, AutOrdersForSmallPottZhou) {
  const CliRun r = run({"invariants", "--m", "2", "--k", "1", "--s", "0", "--aut"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["aut_order"], 5760);
  EXPECT_EQ(j["aut_l_order"], 360);
  EXPECT_TRUE(j["gamma_rank"].is_null());
}

TEST(CliInvariants, ReadsFilesAndComputesGammaRank) {
  TempFile file("apnkit_inv");
  ASSERT_EQ(run({"construct", "--family", "gold", "--m", "5", "--out", file.str()}).code, cli::kOk);
  const CliRun r = run({"invariants", "--in", file.str(), "--gamma-rank", "--aut"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["gamma_rank"].is_number());
  EXPECT_EQ(j["aut_l_order"], 155);
  EXPECT_EQ(j["aut_order"], 4960);
}

TEST(CliInvariants, NonQuadraticFunctionsUseTheGraphSearch) {
  TempFile file("apnkit_cube");
  std::ostringstream text;
  write_vbf(text, power_function(FieldCtx::create(3), 7));
  file.write(text.str());
  const CliRun r = run({"invariants", "--in", file.str(), "--aut"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["aut_ea_order"].is_null());
  EXPECT_TRUE(j["aut_order"].is_number());
}

TEST(CliInvariants, RefusesGammaRankAbove16) {
  const CliRun r = run({"invariants", "--family", "gold", "--m", "17", "--gamma-rank"});
  EXPECT_EQ(r.code, cli::kParameterError);
  EXPECT_NE(r.err.find("n <= 16"), std::string::npos) << r.err;
  EXPECT_EQ(run({"invariants", "--gamma-rank"}).code, cli::kParameterError);
}

TEST(CliInvariants, TimeoutGivesPartialReportAndExit4) {
  const CliRun r = run({"invariants", "--m", "6", "--k", "1", "--s", "2", "--aut", "--timeout",
                     "0.001"});
  ASSERT_EQ(r.code, cli::kTimeout) << r.out << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["aut_l_order"].is_null());
  EXPECT_EQ(j["is_apn"], true);
  EXPECT_EQ(run({"invariants", "--m", "2", "--aut", "--timeout", "-1"}).code,
            cli::kParameterError);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"catalog", "--m-max", "20", "--figure-data"},
        std::vector<std::string>{"witness", "--m", "8", "--k", "3", "--s", "2", "--negate-both"},
        std::vector<std::string>{"construct", "--m", "4", "--k", "1", "--s", "2"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, HelpAndVersion) {
  CliRun r = run({"--version"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("apnkit 0.1.0"), std::string::npos);
  r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("m=4:0x13"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kParameterError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParameterError);
}

}  // namespace
}  // namespace apnkit
