#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "suita/cli.hpp"
#include "suita/optimize.hpp"

namespace suita::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

double row_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string k;
    double v;
    if (ls >> k >> v && k == key) return v;
  }
  ADD_FAILURE() << "no row " << key << " in\n" << text;
  return NAN;
}

TEST(Cli, EvalText) {
  const auto o = invoke({"eval", "--tau", "0,2"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NEAR(row_value(o.out, "F"), -1.8229, 1e-3);
  EXPECT_NEAR(row_value(o.out, "capacity"), 3.11817, 1e-5);
  EXPECT_EQ(row_value(o.out, "bergman_density"), 0.5);
}

TEST(Cli, EvalJsonSortedAndParsable) {
  const auto o = invoke({"eval", "--tau", "0.5,1.9192", "--json"});
  ASSERT_EQ(o.code, kOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j["f"].get<double>(), -1.8251, 5e-4);
  std::string prev;
  for (const auto& [k, v] : j.items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
  EXPECT_NE(o.out.find("\"f\": -1.825082748,\n"), std::string::npos) << o.out;
}

TEST(Cli, DomainErrorExitTwo) {
  const auto o = invoke({"eval", "--tau", "0,-1"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("Im tau > 0"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(invoke({"eval", "--tau", "0,0.0001"}).code, kUsage);  // below the floor
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"eval"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--tau", "abc"}).code, kUsage);
  EXPECT_EQ(invoke({"--tol", "0", "eval", "--tau", "0,1"}).code, kUsage);
  EXPECT_EQ(invoke({"minimize", "--grid", "10by10"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--suite", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, SurfaceCsv) {
  const auto o = invoke({"surface", "--re", "-1,1", "--im", "1,2", "--rows", "3", "--cols", "4"});
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(o.out.find('\r'), std::string::npos);
  std::istringstream in(o.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u * 4u + 1u);
  EXPECT_EQ(lines[0], "re_tau,im_tau,F");
  EXPECT_EQ(lines[1], "-1,1," + format_number(f_ratio(Tau(-1, 1)).f));
  // Row-major in Im then Re: the second line walks along Re.
  EXPECT_EQ(lines[2].substr(0, lines[2].find(',', lines[2].find(',') + 1)), "-0.3333333333,1");
  EXPECT_EQ(lines[5].substr(0, 4), "-1,1");
}

TEST(Cli, SurfaceToFile) {
  const auto path = std::filesystem::temp_directory_path() / "suita_surface_test.csv";
  const auto o = invoke({"surface", "--rows", "5", "--cols", "6", "--out", path.string()});
  ASSERT_EQ(o.code, kOk);
  std::ifstream f(path);
  int count = 0;
  for (std::string line; std::getline(f, line);) ++count;
  EXPECT_EQ(count, 31);
  std::filesystem::remove(path);
}

TEST(Cli, MinimizeJson) {
  const auto o = invoke({"minimize", "--re", "-1,1", "--im", "0.05,4", "--grid", "100x100", "--refine", "--json"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j["alpha"].get<double>(), 6.2034, 5e-3);
  EXPECT_NEAR(j["exp_f_min"].get<double>(), 0.1612, 5e-4);
  EXPECT_TRUE(j["refined"].get<bool>());
  for (const char* key : {"f_min", "exp_f_min", "alpha", "tau_re", "tau_im", "grid_f_min", "grid_tau_re",
                          "grid_tau_im", "refined", "evaluations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, MinimizeIterationCapExitsOne) {
  const auto o = invoke({"minimize", "--grid", "20x20", "--refine", "--max-iter", "2"});
  EXPECT_EQ(o.code, kFailure);
  EXPECT_NE(o.err.find("best point so far"), std::string::npos);
  EXPECT_FALSE(o.out.empty());
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args{"minimize", "--grid", "30x30", "--refine", "--json", "--threads", "2"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> s{"surface", "--rows", "7", "--cols", "7", "--threads", "3"};
  const std::vector<std::string> s1{"surface", "--rows", "7", "--cols", "7"};
  EXPECT_EQ(invoke(s).out, invoke(s1).out);
}

TEST(Cli, Green) {
  const auto o = invoke({"green", "--tau", "0,2", "--z", "0.25,0", "--w", "0,0"});
  ASSERT_EQ(o.code, kOk);
  EXPECT_NEAR(row_value(o.out, "g"), -0.7006239609, 1e-10);
  const auto c = invoke({"green", "--tau", "0,2", "--z", "1.3,2", "--w", "0.3,0"});
  EXPECT_EQ(c.code, kUsage);
  EXPECT_NE(c.err.find("same point"), std::string::npos);
}

TEST(Cli, CheckTheta) {
  const auto o = invoke({"check", "--suite", "theta", "--seed", "42"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out.rfind("PASS theta_identity", 0), 0u);
  const auto j = invoke({"check", "--suite", "capacity", "--json"});
  EXPECT_EQ(j.code, kOk);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_TRUE(parsed["passed"].get<bool>());
  EXPECT_EQ(parsed["reports"].size(), 2u);
}

TEST(Cli, ToleranceFromEnvironment) {
  // A loose tolerance keeps opposite-sign q-terms out of S: F(2i) moves by ~1.4e-5.
  ::setenv(kTolEnv, "1e-3", 1);
  const auto loose = invoke({"eval", "--tau", "0,2"});
  const auto flag = invoke({"--tol", "1e-14", "eval", "--tau", "0,2"});
  ::unsetenv(kTolEnv);
  const auto dflt = invoke({"eval", "--tau", "0,2"});
  EXPECT_EQ(row_value(loose.out, "qsum_term"), 0.0);
  EXPECT_EQ(flag.out, dflt.out);
  EXPECT_NE(loose.out, dflt.out);
}

TEST(Cli, ParityMatchesGridMinOnSharedMesh) {
  const auto o = invoke({"parity", "--x", "1", "--y", "4", "--K", "100"});
  ASSERT_EQ(o.code, kOk);
  EXPECT_NE(o.err.find("notice"), std::string::npos);

  const ParityResult p = matlab_myplot(1, 4, 100, 100, 100);
  EXPECT_EQ(row_value(o.out, "f"), std::stod(format_number(p.f)));
  EXPECT_EQ(row_value(o.out, "b"), std::stod(format_number(p.b)));

  const GridPoint g = grid_min(sweep_grid(p.x_nodes, p.y_nodes));
  EXPECT_NEAR(p.f, g.value, 1e-12);
  EXPECT_EQ(p.b, g.im);
  EXPECT_NEAR(std::abs(p.a), std::abs(g.re), 1e-12);  // mirror-image nodes tie
}

TEST(Cli, NegativeRangeArguments) {
  const auto o = invoke({"surface", "--re", "-1,-0.5", "--im", "1,2", "--rows", "2", "--cols", "2"});
  EXPECT_EQ(o.code, kOk) << o.err;
}

}  // namespace
}  // namespace suita::cli
