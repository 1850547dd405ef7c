// Copyright 2026 The rayclass Authors.
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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"

namespace rayclass::cli {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "rayclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

double value_of(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(name + ",", 0) == 0) return std::stod(line.substr(name.size() + 1));
  }
  return std::nan("");
}

TEST(CliBoundTest, Examples) {
  const Invocation zm = run({"bound", "zm", "--m", "11000", "--index", "1"});
  EXPECT_EQ(zm.code, kExitSuccess);
  EXPECT_NEAR(value_of(zm.out, "bound"), 1385.5221151, 1e-6);

  const Invocation ray = run({"bound", "ray", "--delta", "8", "--norm-m0", "1", "--minf", "0", "--omega",
                       "0", "--index", "1"});
  EXPECT_EQ(ray.code, kExitSuccess);
  EXPECT_DOUBLE_EQ(std::floor(value_of(ray.out, "bound") * 100) / 100, 95.36);

  const Invocation iso = run({"bound", "isogeny", "--delta", "23", "--conductor-norm", "1", "--hplus", "1"});
  EXPECT_NEAR(value_of(iso.out, "bound"), 255.6144234, 1e-6);

  const Invocation cyc = run({"bound", "cyclotomic", "--hk0", "1", "--log-delta", "1"});
  EXPECT_NEAR(value_of(cyc.out, "bound"), 46.7856, 1e-9);
}

TEST(CliBoundTest, VerboseIntermediates) {
  const Invocation r = run({"bound", "-v", "ray", "--delta", "5", "--norm-m0", "12", "--minf", "2",
                     "--omega", "2", "--index", "3"});
  ASSERT_EQ(r.code, kExitSuccess);
  EXPECT_NEAR(value_of(r.out, "log_delta_norm"), std::log(60.0), 1e-12);
  EXPECT_NEAR(value_of(r.out, "infinity_term"), 2.58, 1e-12);
  EXPECT_NEAR(value_of(r.out, "omega_term"), 2.76, 1e-12);
  EXPECT_FALSE(std::isnan(value_of(r.out, "simplified_bound")));
  const Invocation zm = run({"bound", "zm", "--m", "30", "-v"});
  EXPECT_EQ(value_of(zm.out, "omega_m"), 3.0);
}

TEST(CliBoundTest, PreconditionViolationsAreUsageErrors) {
  const Invocation index0 = run({"bound", "zm", "--m", "11", "--index", "0"});
  EXPECT_EQ(index0.code, kExitUsage);
  EXPECT_NE(index0.err.find("index"), std::string::npos);
  EXPECT_EQ(run({"bound", "zm", "--m", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "isogeny", "--delta", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "ray", "--delta", "8"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "cyclotomic", "--log-delta", "1", "--delta", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "cyclotomic", "--hk0", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "constants", "check"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitSuccess);
}

TEST(CliConstantsTest, AllRowsPass) {
  const Invocation r = run({"constants", "check", "-q"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_NE(r.out.find("4*s1(95) <= 2.71"), std::string::npos);
  EXPECT_NE(r.out.find("s5(95) + 2C/e < 0"), std::string::npos);
  EXPECT_NE(r.out.find("<= 0.67"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerifyTest, ZmSmallRangeAndEmptyRange) {
  const Invocation r = run({"verify", "zm", "--max-m", "500", "-q"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const Invocation empty = run({"verify", "zm", "--max-m", "1", "-q", "--format", "json"});
  EXPECT_EQ(empty.code, kExitSuccess);
  const Report rep = report_from_json(empty.out);
  EXPECT_TRUE(rep.rows.empty());
  EXPECT_EQ(rep.summary, Summary{});
}

TEST(CliVerifyTest, ExhaustedSieveFailsRun) {
  const Invocation r = run({"verify", "zm", "--min-m", "13", "--max-m", "13", "--sieve-limit", "50", "-q"});
  EXPECT_EQ(r.code, kExitVerificationFailure);
  EXPECT_NE(r.out.find("FAIL-INCOMPLETE"), std::string::npos);
}

TEST(CliVerifyTest, SkipsAreCountedButDoNotFail) {
  const Invocation r = run({"verify", "zm", "--min-m", "24", "--max-m", "24", "--subgroup-cap", "3", "-q",
                     "--format", "json"});
  EXPECT_EQ(r.code, kExitSuccess);
  const Report rep = report_from_json(r.out);
  EXPECT_EQ(rep.summary.skip, 1U);
  EXPECT_EQ(rep.summary.fail, 0U);
}

TEST(CliVerifyTest, QuadConductorTwo) {
  const Invocation r = run({"verify", "quad", "--max-absdisc", "100", "--conductor", "2", "-q", "--format",
                     "json"});
  EXPECT_EQ(r.code, kExitSuccess);
  const Report rep = report_from_json(r.out);
  ASSERT_FALSE(rep.rows.empty());
  EXPECT_EQ(rep.summary.pass, rep.rows.size());
  for (const auto& row : rep.rows) EXPECT_EQ(std::get<std::int64_t>(row[4]), 4);
  EXPECT_EQ(run({"verify", "quad", "--max-absdisc", "100", "--conductor", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "quad", "--min-absdisc", "11", "--max-absdisc", "11", "--conductor",
                 "1000", "-q"})
                .code,
            kExitResource);
}

TEST(CliReportTest, CsvAndJsonAgreeFieldForField) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"verify", "zm", "--max-m", "80"},
           {"verify", "quad", "--max-absdisc", "300", "--conductor", "3"},
           {"constants", "check"}}) {
    auto csv_args = cmd;
    csv_args.insert(csv_args.end(), {"-q", "--format", "csv"});
    auto json_args = cmd;
    json_args.insert(json_args.end(), {"-q", "--format", "json"});
    const Invocation csv = run(csv_args);
    const Invocation json = run(json_args);
    ASSERT_EQ(csv.code, kExitSuccess);
    const Report rep = report_from_json(json.out);
    const auto rows = rows_from_csv(csv.out, rep.columns);
    EXPECT_EQ(rows, rep.rows);
    Report copy = rep;
    copy.tally();
    EXPECT_EQ(copy.summary, rep.summary);
    EXPECT_EQ(to_json(rep), json.out);
  }
}

TEST(CliReportTest, ByteIdenticalAcrossJobs) {
  const std::vector<std::string> base{"verify", "zm", "--max-m", "400", "-q", "--format", "json",
                                      "--timestamp", "2026-01-01T00:00:00Z"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto four = base;
  four.insert(four.end(), {"--jobs", "4"});
  const Invocation a = run(one);
  const Invocation b = run(four);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"timestamp\": \"2026-01-01T00:00:00Z\""), std::string::npos);
}

TEST(CliReportTest, OutFileAndProgress) {
  const auto path = std::filesystem::temp_directory_path() / "rayclass_cli_test.csv";
  const Invocation r = run({"verify", "zm", "--max-m", "200", "--out", path.string()});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("verify zm: 199/199"), std::string::npos);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("status,modulus,", 0), 0U);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"constants", "check", "--out", "/nonexistent-dir/x.csv"}).code, kExitResource);
}

TEST(ReportTest, Serialization) {
  Report rep;
  rep.columns = {{"status", ColumnType::kString}, {"x", ColumnType::kReal}, {"s", ColumnType::kString}};
  rep.add_row({std::string("PASS"), 0.1, std::string("a,\"b\"")});
  rep.add_row({std::string("SKIPPED"), 1e-300, std::string("")});
  EXPECT_THROW(rep.add_row({std::string("PASS")}), std::invalid_argument);
  EXPECT_THROW(rep.add_row({std::string("PASS"), std::int64_t{1}, std::string()}), std::invalid_argument);
  rep.tally();
  EXPECT_EQ(rep.summary, (Summary{1, 0, 1}));
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  const std::string csv = to_csv(rep);
  EXPECT_EQ(rows_from_csv(csv, rep.columns), rep.rows);
  EXPECT_EQ(report_from_json(to_json(rep)).rows, rep.rows);
}

}  // namespace
}  // namespace rayclass::cli
