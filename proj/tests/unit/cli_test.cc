// Copyright 2026 The holtrans Authors.
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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "holtrans/kernel/signature.h"
#include "test_dirs.h"

namespace holtrans::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Corpus(const std::string& name) {
  return (testing::CorpusDir() / (name + ".art")).string();
}

TEST(CliTranslate, IdentityArticle) {
  testing::TempDir dir;
  const Result r = RunCli({"translate", "-o", dir.path().string(), Corpus("identity")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir.path() / "hol.dk"));
  EXPECT_TRUE(fs::exists(dir.path() / "identity.dk"));
  EXPECT_TRUE(fs::exists(dir.path() / kStatsFile));
  const Result check =
      RunCli({"check", dir / "hol.dk", dir / "identity.dk"});
  EXPECT_EQ(check.code, kExitOk) << check.err;
  EXPECT_NE(check.out.find("checked 2 files"), std::string::npos);
}

TEST(CliTranslate, EmptyInputIsAUsageError) {
  EXPECT_EQ(RunCli({"translate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"translate", "--mode", "lean", Corpus("identity")}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
}

TEST(CliTranslate, MissingFileIsAnIoError) {
  testing::TempDir dir;
  EXPECT_EQ(RunCli({"translate", "-o", dir.path().string(), dir / "none.art"}).code,
            kExitUsage);
}

TEST(CliTranslate, SequentMismatchWritesNothing) {
  testing::TempDir dir;
  std::string text = testing::ReadFile(Corpus("identity"));
  const std::string original = "3\ndef\nrefl\n";
  text.replace(text.find(original), original.size(), "3\ndef\n2\nref\nrefl\n");
  testing::WriteFile(dir / "broken.art", text);
  const fs::path out = dir.path() / "out";
  // A good article first: nothing may be written for it either.
  const Result r =
      RunCli({"translate", "-o", out.string(), Corpus("identity"), dir / "broken.art"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("SequentMismatch"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("broken.art"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("command"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out / "identity.dk"));
  EXPECT_FALSE(fs::exists(out / "broken.dk"));
  EXPECT_FALSE(fs::exists(out / "hol.dk"));
}

TEST(CliTranslate, DuplicateModulesAreRejected) {
  testing::TempDir dir;
  fs::create_directory(dir.path() / "a");
  fs::copy_file(Corpus("identity"), dir.path() / "a" / "identity.art");
  EXPECT_EQ(RunCli({"translate", "-o", dir / "out", Corpus("identity"),
                    (dir.path() / "a" / "identity.art").string()})
                .code,
            kExitUsage);
}

TEST(CliCheck, BaseSignature) {
  testing::TempDir dir;
  ASSERT_EQ(RunCli({"translate", "--mode", "pts", "-o", dir.path().string(),
                    Corpus("identity")})
                .code,
            kExitOk);
  EXPECT_EQ(RunCli({"check", dir / "hol.dk"}).code, kExitOk);
}

TEST(CliCheck, UndeclaredConstantFails) {
  testing::TempDir dir;
  ASSERT_EQ(RunCli({"translate", "-o", dir.path().string(), Corpus("identity")}).code, kExitOk);
  testing::WriteFile(dir / "bad.dk", "x : undeclared.\n");
  const Result r = RunCli({"check", dir / "bad.dk"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("x"), std::string::npos);
  EXPECT_NE(r.err.find("UnboundConstant"), std::string::npos) << r.err;
  testing::WriteFile(dir / "garbled.dk", "x : .\n");
  EXPECT_EQ(RunCli({"check", dir / "garbled.dk"}).code, kExitFailure);
}

TEST(CliCheck, MissingBaseIsAUsageError) {
  testing::TempDir dir;
  testing::WriteFile(dir / "lonely.dk", "a : Type.\n");
  EXPECT_EQ(RunCli({"check", dir / "lonely.dk"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"check"}).code, kExitUsage);
}

TEST(CliStats, EmptyRunHasAZeroTotal) {
  testing::TempDir dir;
  const Result r = RunCli({"stats", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Size (kB)"), std::string::npos);
  EXPECT_NE(r.out.find("Time (s)"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line, total;
  while (std::getline(lines, line)) {
    if (line.rfind("Total", 0) == 0) total = line;
  }
  ASSERT_FALSE(total.empty()) << r.out;
  for (char c : total.substr(5)) {
    EXPECT_TRUE(c == ' ' || c == '0' || c == '.') << total;
  }
}

TEST(CliStats, TableAndJsonAfterTranslate) {
  testing::TempDir dir;
  ASSERT_EQ(RunCli({"translate", "-o", dir.path().string(), Corpus("identity"),
                    Corpus("example_trans")})
                .code,
            kExitOk);
  const Result table = RunCli({"stats", dir.path().string()});
  EXPECT_NE(table.out.find("identity"), std::string::npos);
  EXPECT_NE(table.out.find("example_trans"), std::string::npos);
  EXPECT_NE(table.out.find("gzip size ratio"), std::string::npos);
  const Result json = RunCli({"stats", "--json", dir.path().string()});
  EXPECT_NE(json.out.find("\"packages\""), std::string::npos);
  EXPECT_NE(json.out.find("\"gzip_ratio\""), std::string::npos);
}

TEST(CliStats, RecordsRoundTrip) {
  PackageStats a{"p", 10, 20, 5, 7, 0.5, 0.25, 3, 1};
  PackageStats b{"q.r", 1, 2, 3, 4, 0, 1.5, 0, 0};
  std::stringstream buf;
  WriteStats(buf, {a, b});
  EXPECT_EQ(ReadStats(buf), (std::vector<PackageStats>{a, b}));
  const PackageStats t = Total({a, b});
  EXPECT_EQ(t.package, "Total");
  EXPECT_EQ(t.output_bytes, 22u);
  EXPECT_DOUBLE_EQ(t.verify_seconds, 1.75);
  std::stringstream bad("package=x input_bytes=oops\n");
  EXPECT_THROW(ReadStats(bad), std::runtime_error);
}

TEST(CliStats, SharingShrinksTheCorpus) {
  testing::TempDir on, off;
  std::vector<std::string> args = {"translate", "-o", on.path().string()};
  for (const std::string& f : testing::CorpusFiles()) args.push_back(f);
  ASSERT_EQ(RunCli(args).code, kExitOk);
  args[2] = off.path().string();
  args.push_back("--no-sharing");
  ASSERT_EQ(RunCli(args).code, kExitOk);
  EXPECT_GT(testing::TotalBytes(off.path(), ".dk"), testing::TotalBytes(on.path(), ".dk"));
}

TEST(CliSelftest, Passes) {
  const Result r = RunCli({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
}

TEST(CliHelpers, GzipShrinksRepetitiveText) {
  const std::string text(10000, 'a');
  const auto size = GzipSize(text);
  EXPECT_GT(size, 0u);
  EXPECT_LT(size, 200u);
}

TEST(CliHelpers, FuelFromEnvironment) {
  ::setenv("HOLTRANS_FUEL", "1234", 1);
  EXPECT_EQ(DefaultFuel(), 1234u);
  ::setenv("HOLTRANS_FUEL", "many", 1);
  EXPECT_EQ(DefaultFuel(), kernel::kDefaultFuel);
  ::unsetenv("HOLTRANS_FUEL");
  EXPECT_EQ(DefaultFuel(), kernel::kDefaultFuel);
}

TEST(CliHelpers, TinyFuelFailsTheCheck) {
  testing::TempDir dir;
  ASSERT_EQ(RunCli({"translate", "-o", dir.path().string(), Corpus("conversion")}).code, kExitOk);
  EXPECT_EQ(RunCli({"check", "--fuel", "1", dir / "hol.dk", dir / "conversion.dk"}).code,
            kExitFailure);
}

}  // namespace
}  // namespace holtrans::cli
