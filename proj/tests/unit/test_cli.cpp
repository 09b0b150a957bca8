#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "gencheb/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gencheb::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChebU) {
  const CliRun r = run({"cheb", "u", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "8*x^3 - 4*x\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"cheb", "u", "--n", "-1"}).code, 2);
  EXPECT_EQ(run({"gcn", "pow", "--a", "x +", "--b", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"cheb", "u", "--n", "2", "--nmax", "3"}).code, 2);
  const CliRun bad = run({"gcn", "pow", "--a", "x +", "--b", "1", "--n", "2"});
  EXPECT_NE(bad.err.find("offset 3"), std::string::npos) << bad.err;
}

TEST(Cli, ChebyshevMethodRejectsDeterminant) {
  const CliRun r = run({"mat", "pow", "--m", "1,1;0,2", "--n", "3", "--method", "chebyshev"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("det"), std::string::npos);
}

TEST(Cli, VerifyAllIsDeterministic) {
  const CliRun a = run({"verify", "all", "--nmax", "24", "--format", "json"});
  const CliRun b = run({"verify", "all", "--nmax", "24", "--format", "json"});
  EXPECT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc.at("schema"), 1);
  EXPECT_EQ(doc.at("suite"), "all");
  EXPECT_TRUE(doc.at("failures").empty());
  EXPECT_GT(doc.at("cases").get<long>(), 0);
}

TEST(Cli, BenchCsv) {
  const CliRun r = run({"mat", "bench", "--m", "2,1;1,1", "--sizes", "4,8", "--trials", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("method,n,median_ns,max_coeff_bits\n", 0), 0U) << r.out;
}

TEST(Cli, U2Table) {
  const CliRun r = run({"u2", "series", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "u^3 - 2*u*v + 1\n");
}
