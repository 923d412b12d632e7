#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcalc_cli/cli.hpp"

namespace qcalc::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string doc(const std::string& name) { return std::string(QCALC_SOURCE_DIR) + "/docs/" + name; }
std::string input(const std::string& name) {
  return std::string(QCALC_SOURCE_DIR) + "/tests/golden/inputs/" + name;
}

std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, ClassifyNormalForm) {
  const Result r = invoke({"classify", "--gamma", "1,0,0,-1,0,1,1,0"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "\nElliptic (mu = -1)\n")) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, BornAlphaSolvesToTwo) {
  const Result r = invoke({"born-alpha", "--target", "2", "--samples", "1000", "--alphas", "2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "solved alpha = 2.0000000000\n")) << r.out;
}

TEST(CliTest, TreePathMatchesDirectRatio) {
  const Result r = invoke({"tree", "--file", doc("worked_tree.json"), "--path", "B:O"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, fixed10(2.0 / 9.0))) << r.out;
  EXPECT_EQ(fixed10(2.0 / 9.0), "0.2222222222");
}

TEST(CliTest, MachZehnderFringe) {
  for (double delta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi}) {
    char phase[64];
    std::snprintf(phase, sizeof phase, "delay=%.17g", delta);
    const Result r = invoke({"simulate", "--file", doc("mach_zehnder.json"), "--phase", phase, "--csv"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const std::string c = fixed10(std::pow(std::cos(delta / 2), 2));
    const std::string s = fixed10(std::pow(std::sin(delta / 2), 2));
    EXPECT_TRUE(contains(r.out, "d1," + c + "\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "d2," + s + "\n")) << r.out;
  }
}

TEST(CliTest, HeaderEchoesSeed) {
  const Result r = invoke({"sample", "--what", "prior", "--count", "3", "--seed", "123"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("# qcalc sample seed=123\n", 0), 0u) << r.out;
  const Result d = invoke({"classify", "--gamma", "1,0,0,-1,0,1,1,0"});
  EXPECT_EQ(d.out.rfind("# qcalc classify seed=0\n", 0), 0u) << d.out;
}

TEST(CliTest, SameSeedSameBytes) {
  const std::vector<std::string> args = {"sample", "--what", "object", "--n", "4", "--count", "50", "--seed", "9"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  auto other = args;
  other.back() = "10";
  EXPECT_NE(invoke(args).out, invoke(other).out);
}

TEST(CliTest, ThreadCountDoesNotChangeOutput) {
  const Result one = invoke({"born-alpha", "--samples", "200000", "--alphas", "1,3", "--threads", "1"});
  const Result four = invoke({"born-alpha", "--samples", "200000", "--alphas", "1,3", "--threads", "4"});
  EXPECT_EQ(one.out, four.out);
}

TEST(CliTest, MissingFileIsInvalidInput) {
  const Result r = invoke({"tree", "--file", input("does_not_exist.json")});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, SchemaViolationReportsJsonPointer) {
  const Result r = invoke({"simulate", "--file", input("bad_rate.json")});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_TRUE(contains(r.err, "/elements/0/params/rate")) << r.err;
  const Result t = invoke({"tree", "--file", input("bad_tree.json")});
  EXPECT_EQ(t.code, kInvalidInput);
  EXPECT_TRUE(contains(t.err, "/nodes/1")) << t.err;
  EXPECT_TRUE(contains(t.err, "color")) << t.err;
}

TEST(CliTest, UnknownFlagsAndSubcommandsAreRejected) {
  EXPECT_EQ(invoke({"classify", "--gamma", "1,0,0,-1,0,1,1,0", "--bogus"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"nonsense"}).code, kInvalidInput);
  EXPECT_EQ(invoke({}).code, kInvalidInput);
  EXPECT_EQ(invoke({"simulate", "--file", doc("mach_zehnder.json"), "--mode", "quantum"}).code, kInvalidInput);
}

TEST(CliTest, DomainErrorsAreInvalidInput) {
  EXPECT_EQ(invoke({"classify", "--gamma", "1,2"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"classify", "--gamma", "1,x,0,0,0,0,0,0"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"born-alpha", "--target", "0.5"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"bayes", "--prior", "0.5,0.5", "--likelihood", "0,0"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"bayes", "--prior", "0.9,0.5", "--likelihood", "1,1"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"tree", "--file", doc("worked_tree.json"), "--path", "B"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"simulate", "--file", doc("mach_zehnder.json"), "--phase", "nowhere=1"}).code, kInvalidInput);
}

TEST(CliTest, ToleranceOverridesAreHonoured) {
  // A prior that misses 1 by 1e-6 passes only with a looser tolerance.
  EXPECT_EQ(invoke({"bayes", "--prior", "0.500001,0.5", "--likelihood", "1,1"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"bayes", "--prior", "0.500001,0.5", "--likelihood", "1,1", "--normalization-tol", "1e-5"}).code,
            kOk);
}

TEST(CliTest, HelpAndVersion) {
  const Result h = invoke({"--help"});
  EXPECT_EQ(h.code, kOk);
  EXPECT_TRUE(contains(h.out, "born-alpha"));
  const Result sub = invoke({"classify", "--help"});
  EXPECT_EQ(sub.code, kOk);
  EXPECT_TRUE(contains(sub.out, "--gamma"));
  EXPECT_EQ(invoke({"--version"}).code, kOk);
}

}  // namespace
}  // namespace qcalc::cli
