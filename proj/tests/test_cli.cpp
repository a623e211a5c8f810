#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "zeck/signed.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zeck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Examples) {
  EXPECT_EQ(run({"add", "101", "100"}).out, "1010\n");
  EXPECT_EQ(run({"sub", "--dec", "3", "5"}).out, "-10\n");
  const Result v = run({"validate", "110"});
  EXPECT_EQ(v.out, "non-canonical: adjacent ones\n");
  EXPECT_EQ(v.code, 2);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", "10100"}).code, 0);
  EXPECT_EQ(run({"validate", "0"}).code, 0);
  EXPECT_EQ(run({"validate", "0101"}).out, "non-canonical: leading zero\n");
  EXPECT_EQ(run({"validate", "120"}).out, "non-canonical: digit out of range\n");
  EXPECT_EQ(run({"validate", "1x"}).code, 2);
}

TEST(Cli, Arithmetic) {
  EXPECT_EQ(run({"add", "--dec", "-7", "3"}).out, oracle::signed_zeckendorf(-4) + "\n");
  EXPECT_EQ(run({"sub", "-101", "-101"}).out, "0\n");
  EXPECT_EQ(run({"mul", "100", "101"}).out, "10101\n");
  EXPECT_EQ(run({"mul", "--method", "binary", "--dec", "123", "456"}).out,
            oracle::zeckendorf(56088) + "\n");
  EXPECT_EQ(run({"divrem", "10101", "1000"}).out, "10\n10\n");
  EXPECT_EQ(run({"sqrtrem", "--dec", "1000000"}).out, oracle::zeckendorf(1000) + "\n0\n");
}

TEST(Cli, OutputsParseAsSignedZeck) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"add", "--dec", "-99", "17"}, {"sub", "--dec", "5", "500"}, {"mul", "--dec", "12", "0"},
           {"divrem", "--dec", "1000", "7"}, {"sqrtrem", "--dec", "99"}}) {
    std::istringstream lines(run(args).out);
    std::string line;
    while (std::getline(lines, line)) EXPECT_NO_THROW(zeck::SignedZeck::parse(line)) << line;
  }
}

TEST(Cli, Conversions) {
  EXPECT_EQ(run({"tozeck", "24"}).out, "1000100\n");
  EXPECT_EQ(run({"tozeck", "--bin", "111"}).out, "1010\n");
  EXPECT_EQ(run({"tobin", "1000100"}).out, "11000\n");
  EXPECT_EQ(run({"tobin", "--dec", "1000100"}).out, "24\n");
  for (const char* n : {"0", "1", "97", "123456789012345678901234567890"}) {
    const std::string z = run({"tozeck", n}).out;
    EXPECT_EQ(run({"tobin", "--dec", z.substr(0, z.size() - 1)}).out, std::string(n) + "\n");
  }
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"add", "1"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"mul", "--method", "karatsuba", "1", "1"}).code, 1);
  const Result bad = run({"add", "110", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err, "non-canonical: adjacent ones\n");
  const Result div = run({"divrem", "101", "0"});
  EXPECT_EQ(div.code, 2);
  EXPECT_EQ(div.err, "division by zero\n");
  EXPECT_EQ(run({"mul", "-1", "1"}).code, 2);
  EXPECT_EQ(run({"tozeck", "1.5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TraceFlagWritesToDiagnostics) {
  const Result r = run({"add", "--trace", "10101", "10101"});
  EXPECT_EQ(r.out, "1000100\n");
  EXPECT_EQ(r.err,
            "stage1 offset=2 rule=020x 0202 -> 1003\n"
            "stage1 offset=4 rule=030x 0302 -> 1103\n"
            "stage1 offset=6 rule=end:03 03 -> 11\n"
            "stage2_rl offset=3 rule=011 011 -> 100\n"
            "stage2_rl offset=1 rule=011 011 -> 100\n"
            "stage2_lr offset=5 rule=011 011 -> 100\n");
}

TEST(Cli, TraceCommand) {
  const Result one = run({"trace", "--pass", "stage1", "000201"});
  EXPECT_EQ(one.out,
            "stage1 offset=2 rule=020x 0201 -> 1002\n"
            "stage1 offset=4 rule=end:02 02 -> 10\n"
            "001010\n");
  const Result pre = run({"trace", "--pass", "signed_prelim", "0001N00"});
  EXPECT_EQ(pre.out, "signed_prelim offset=3 rule=1N0 1N0 -> 001\n0000010\n");
  const Result sub = run({"trace", "--dec", "4", "-3"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_EQ(sub.out.substr(sub.out.rfind('\n', sub.out.size() - 2) + 1), "1\n");
  EXPECT_EQ(run({"trace", "--pass", "nope", "0000"}).code, 2);
}

TEST(Cli, BenchLines) {
  const Result r = run({"bench", "--pass", "stage1", "--digits", "100", "--trials", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::istringstream lines(r.err);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    EXPECT_EQ(line.rfind("pass=stage1 n=100 placements=97 firings=", 0), 0u) << line;
    EXPECT_NE(line.find(" height=0 ns_per_digit="), std::string::npos);
  }
  EXPECT_EQ(count, 2);
  const Result p = run({"bench", "--pass", "stage2_rl", "--digits", "1024", "--trials", "1",
                        "--prefix", "--chunk", "7"});
  EXPECT_NE(p.err.find("placements=1022"), std::string::npos);
  EXPECT_NE(p.err.find("height=10"), std::string::npos);
}

class CliCodec : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("zeck_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                               "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }
  std::string path(const char* name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST_F(CliCodec, GoldenRoundTrip) {
  const std::string values = std::string(ZECK_GOLDEN_DIR) + "/codec_values.txt";
  ASSERT_EQ(run({"codec", "encode", values, path("out.zfib")}).code, 0);
  EXPECT_EQ(slurp(path("out.zfib")), slurp(std::string(ZECK_GOLDEN_DIR) + "/codec_values.zfib"));
  ASSERT_EQ(run({"codec", "decode", path("out.zfib"), path("back.txt")}).code, 0);
  EXPECT_EQ(slurp(path("back.txt")), slurp(values));
}

TEST_F(CliCodec, Errors) {
  std::ofstream(path("zero.txt")) << "3\n0\n";
  EXPECT_EQ(run({"codec", "encode", path("zero.txt"), path("x")}).code, 2);
  std::ofstream(path("junk.zfib"), std::ios::binary) << "ZFIX\x01";
  const Result r = run({"codec", "decode", path("junk.zfib"), path("y")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("corrupt stream:", 0), 0u);
  EXPECT_EQ(run({"codec", "decode", path("missing"), path("y")}).code, 2);
  EXPECT_EQ(run({"codec"}).code, 1);
}

}  // namespace
