#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "dickson/cli.hpp"

namespace dickson::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"dicksonlab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, EvalRows) {
  const Result r = invoke({"--p", "5", "--e", "1", "--k", "3", "--n", "4", "eval"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"n,k,x,value", "4,3,0,1", "4,3,1,4",
                                                     "4,3,2,0", "4,3,3,4", "4,3,4,1"}));
  const Result zero = invoke({"--p", "5", "--e", "1", "--k", "3", "--n", "0", "eval"});
  for (std::size_t i = 1; i < lines(zero.out).size(); ++i)
    EXPECT_EQ(lines(zero.out)[i].substr(lines(zero.out)[i].rfind(',') + 1), "4");
}

TEST(Cli, ExtensionFieldElementsAreQuoted) {
  const Result r = invoke({"--p", "5", "--e", "2", "--k", "1", "--n", "3", "eval"});
  ASSERT_EQ(r.code, kOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 26u);
  EXPECT_EQ(l[8].substr(0, 11), "3,1,\"2,1\",\"");
}

TEST(Cli, UsageErrors) {
  auto code = [](std::initializer_list<const char*> args) { return invoke(args).code; };
  const Result bad_p = invoke({"--p", "4", "--e", "1", "eval"});
  EXPECT_EQ(bad_p.code, kUsage);
  EXPECT_EQ(bad_p.err, "dicksonlab: p must be a prime greater than 3\n");
  EXPECT_EQ(code({"--p", "3", "--n", "1", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--e", "0", "--n", "1", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--e", "20", "--n", "1", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--k", "5", "--n", "1", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--k", "x", "--n", "1", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--n", "1", "--n-range", "1:2", "eval"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--n-range", "3:1", "scan-pp"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--n-range", "0:25", "scan-pp"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--n-range", "0:3", "moments"}), kUsage);
  EXPECT_EQ(code({"--p", "17", "moments"}), kUsage);
  EXPECT_EQ(code({"--p", "17", "scan-pp"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--format", "xml", "verify"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--skip", "bogus", "verify"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--jobs", "0", "verify"}), kUsage);
  EXPECT_EQ(code({"--p", "5"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "eval", "verify"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--bogus", "verify"}), kUsage);
  EXPECT_EQ(code({"--p", "5", "--out", "/nonexistent/dir/x.csv", "--n", "1", "eval"}), kUsage);
}

TEST(Cli, ScanPp) {
  const Result r = invoke({"--p", "5", "--e", "1", "--k", "3", "--n-range", "0:24", "scan-pp"});
  ASSERT_EQ(r.code, kOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 26u);
  EXPECT_EQ(l[0], "n,k,is_pp,witness_x1,witness_x2,mod6_class");
  EXPECT_EQ(l[6].substr(0, 10), "5,3,false,");
  EXPECT_EQ(l[6].find(",,"), std::string::npos);
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i].find(",true,") != std::string::npos) {
      EXPECT_NE(l[i].back(), '1') << l[i];
      EXPECT_NE(l[i].find("true,,,"), std::string::npos);
    }
  }
  // rows ordered by (k, n)
  const Result all = invoke({"--p", "5", "--n-range", "2:3", "scan-pp"});
  const auto la = lines(all.out);
  ASSERT_EQ(la.size(), 11u);
  EXPECT_EQ(la[1].substr(0, 4), "2,0,");
  EXPECT_EQ(la[2].substr(0, 4), "3,0,");
  EXPECT_EQ(la[3].substr(0, 4), "2,1,");
}

TEST(Cli, Moments) {
  const Result r = invoke({"--p", "5", "--k", "0", "moments"});
  ASSERT_EQ(r.code, kOk);
  const auto l = lines(r.out);
  EXPECT_EQ(l.front(), "n,k,direct,reconstructed,agrees");
  EXPECT_EQ(l[2], "2,0,0,0,true");
  EXPECT_EQ(l.back(), "# mismatches=0");
  EXPECT_EQ(l.size(), 26u);

  const Result literal = invoke({"--p", "5", "--k", "3", "--paper-literal", "moments"});
  EXPECT_EQ(literal.code, kOk);
  EXPECT_NE(literal.out.find("# literal-divergence n="), std::string::npos);
  const Result second = invoke({"--p", "5", "--k", "1", "--paper-literal", "moments"});
  EXPECT_NE(second.out.find("# literal-divergences=0\n"), std::string::npos);
}

TEST(Cli, JsonMirrorsCsv) {
  const Result r = invoke({"--p", "5", "--k", "2", "--n-range", "4:5", "--format", "json", "scan-pp"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, 2), "[\n");
  EXPECT_NE(r.out.find("\"is_pp\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"mod6_class\": 5"), std::string::npos);
  const Result m = invoke({"--p", "5", "--k", "2", "--n", "3", "--format", "json", "moments"});
  EXPECT_EQ(m.err, "# mismatches=0\n");
  EXPECT_NE(m.out.find("\"agrees\": true"), std::string::npos);
}

TEST(Cli, VerifyReport) {
  const Result r = invoke({"--p", "5", "--e", "1", "verify"});
  ASSERT_EQ(r.code, kOk) << r.out;
  std::size_t errata = 0;
  for (const auto& line : lines(r.out)) {
    if (line.rfind("erratum,", 0) == 0) {
      ++errata;
      EXPECT_NE(line.find(",validated,"), std::string::npos) << line;
    }
    if (line.rfind("check,", 0) == 0) EXPECT_NE(line.find(",pass,"), std::string::npos) << line;
  }
  EXPECT_EQ(errata, 5u);
}

TEST(Cli, Deterministic) {
  const Result a = invoke({"--p", "7", "--jobs", "3", "scan-pp"});
  const Result b = invoke({"--p", "7", "--jobs", "1", "scan-pp"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const Result v1 = invoke({"--p", "5", "verify", "--jobs", "4"});
  const Result v2 = invoke({"--p", "5", "verify"});
  EXPECT_EQ(v1.out, v2.out);
}

TEST(Cli, OutFileAndEnvJobs) {
  const auto path = std::filesystem::temp_directory_path() / "dicksonlab_cli_test.csv";
  ::setenv("DICKSONLAB_JOBS", "2", 1);
  const Result r = invoke({"--p", "5", "--k", "1", "--n", "2", "--out", path.c_str(), "eval"});
  ::setenv("DICKSONLAB_JOBS", "zero", 1);
  const Result bad = invoke({"--p", "5", "--k", "1", "--n", "2", "eval"});
  ::unsetenv("DICKSONLAB_JOBS");
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,k,x,value");
  std::filesystem::remove(path);
  EXPECT_EQ(bad.code, kUsage);
}

TEST(Cli, ConfigFileDefaultsLoseToFlags) {
  const auto path = std::filesystem::temp_directory_path() / "dicksonlab_cli_test.ini";
  {
    std::ofstream f(path);
    f << "p=7\nk=2\nn=3\n";
  }
  const Result r = invoke({"--config", path.c_str(), "--k", "1", "eval"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 8u);
  EXPECT_EQ(l[1].substr(0, 4), "3,1,");
}

TEST(Cli, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("scan-pp"), std::string::npos);
}

}  // namespace
}  // namespace dickson::cli
