#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pantslab/cli.hpp"
#include "pantslab/errors.hpp"
#include "pantslab/intersection.hpp"

using namespace pantslab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Word) {
  const auto r = run({"word", "3", "2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["word"], "yxyXyXy");
  EXPECT_EQ(j["length"], 7);
  const auto bad = run({"word", "2", "2", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("a must be odd"), std::string::npos) << bad.err;
}

TEST(Cli, SelfintMatchesLibrary) {
  const auto r = run({"selfint", "3", "2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["formula"], 7);
  EXPECT_EQ(j["computed"], 7);
  const auto r2 = run({"selfint", "19", "8", "5"});
  EXPECT_EQ(json::parse(r2.out)["computed"], self_intersection(gamma_word({19, 8, 5})));
}

TEST(Cli, ArcsMatchLibrary) {
  const auto r = run({"arcs", "3", "2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const auto w = gamma_word({3, 2, 1});
  const auto spec = arc_spectrum(w, LiftSearch::for_length(w.size()));
  for (ArcType arc : kAllArcTypes) {
    EXPECT_EQ(j["arcs"][std::string(arc_name(arc))], spec.counts[arc]);
  }
}

TEST(Cli, Trace) {
  const auto r = run({"trace", "x", "Y"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["polynomial"], "1 X^1 Y^1 Z^0 + -1 X^0 Y^0 Z^1");
  EXPECT_EQ(run({"trace", "xq"}).code, 2);
}

TEST(Cli, FamilyAnchor) {
  const auto r = run({"family", "2", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["certificate"]["verdict"], "verified");
  EXPECT_EQ(j["certificate"]["self_intersection"]["computed"][0], 34);
  EXPECT_EQ(j["certificate"]["self_intersection"]["computed"][1], 34);
  EXPECT_EQ(run({"family", "3", "3"}).code, 2);
}

TEST(Cli, PairVerdicts) {
  EXPECT_EQ(run({"pair", "17", "12", "3", "19", "8", "5"}).code, 0);
  const auto failed = run({"pair", "3", "2", "1", "5", "2", "3"});
  EXPECT_EQ(failed.code, 1);
  EXPECT_EQ(json::parse(failed.out)["verdict"], "failed");
  EXPECT_EQ(run({"pair", "3", "2", "1", "3", "2", "1"}).code, 2);
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--max-a", "11"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["pairs"][0][0], json::array({9, 8, 1}));
  EXPECT_EQ(json::parse(run({"enumerate", "--max-a", "8"}).out)["count"], 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"selfint", "3", "2"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"sweep"}).code, 2);
  EXPECT_EQ(run({"sweep", "--k", "2:4", "--t", "3:5", "--max-a", "11"}).code, 2);
  EXPECT_EQ(run({"sweep", "--k", "2:4", "--t", "3:5", "--format", "xml"}).code, 2);
}

TEST(Cli, SweepByteIdenticalAcrossThreads) {
  const auto one = run({"sweep", "--k", "2:4", "--t", "3:5", "--threads", "1"});
  const auto four = run({"sweep", "--k", "2:4", "--t", "3:5", "--threads", "4"});
  const auto again = run({"sweep", "--k", "2:4", "--t", "3:5"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, again.out);
  EXPECT_EQ(json::parse(one.out)["certificates"].size(), 4u);

  const auto csv1 = run({"sweep", "--max-a", "21", "--format", "csv", "--threads", "1"});
  const auto csv3 = run({"sweep", "--max-a", "21", "--format", "csv", "--threads", "3"});
  EXPECT_EQ(csv1.out, csv3.out);
  EXPECT_EQ(csv1.code, csv3.code);
}

TEST(Cli, SweepToFile) {
  const auto path = std::filesystem::temp_directory_path() / "pantslab_sweep_test.json";
  const auto r = run({"sweep", "--k", "2", "--t", "3", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const auto j = json::parse(in);
  EXPECT_EQ(j["certificates"][0]["certificate"]["verdict"], "verified");
  std::filesystem::remove(path);
}

TEST(SweepSpec, Validation) {
  cli::SweepSpec s;
  EXPECT_THROW(s.validate(), InvariantViolation);
  s.max_a = 11;
  EXPECT_NO_THROW(s.validate());
  s.k_range = cli::IntRange::parse("2:4");
  s.t_range = cli::IntRange::parse("3");
  EXPECT_THROW(s.validate(), InvariantViolation);
  EXPECT_THROW(cli::IntRange::parse("4:2"), InvariantViolation);
  EXPECT_THROW(cli::IntRange::parse("a:b"), InvariantViolation);
}
