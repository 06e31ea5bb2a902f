#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include "cli.hpp"
#include "urt/graph_io.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "urtlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = urtlab::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  Result r = run({"sample", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--radius"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"sample", "no_such_law"}).code, 2);
  EXPECT_EQ(run({"test", "involution", "--mu", "canopy", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"sample", "chain_cover:0.5,0.5"}).code, 2);
  EXPECT_EQ(run({"hyperbolic", "--keep", "1.5"}).code, 2);
  EXPECT_THROW(urtlab::parse_fixture("regular:x"), urtlab::UsageError);
}

TEST(Cli, ParsesFixturesAndGraphs) {
  EXPECT_EQ(urtlab::parse_fixture("canopy")->name(), "canopy");
  EXPECT_EQ(urtlab::parse_fixture("chain_cover:uniform:1:4")->degree_bound(), 8);
  EXPECT_EQ(urtlab::parse_graph("star:4").vertex_count(), 5u);
  EXPECT_EQ(urtlab::parse_graph("sierpinski:1").vertex_count(), 6u);
  EXPECT_EQ(urtlab::parse_family("regular_tree_ball:3", {1, 2}).size(), 2u);
}

TEST(Cli, InvolutionVerdicts) {
  Result good = run({"test", "involution", "--mu", "canopy", "--radius", "2", "--n", "5000", "--seed", "7"});
  EXPECT_EQ(good.code, 0) << good.err;
  json doc = json::parse(good.out);
  EXPECT_EQ(doc["report"]["verdict"], "pass");
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_TRUE(doc.contains("streams"));

  Result bad = run({"test", "involution", "--mu", "ray_from_endpoint", "--n", "2000"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json::parse(bad.out)["report"]["verdict"], "fail");
}

TEST(Cli, Determinism) {
  std::vector<std::string> args{"test", "involution", "--mu", "canopy", "--d", "3",
                                "--radius", "1", "--n", "3000", "--seed", "3"};
  Result a = run(args);
  args.insert(args.begin(), {"--threads", "1"});
  Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("URTLAB_SEED", "11", 1);
  Result a = run({"test", "mtp", "--mu", "canopy", "--n", "500"});
  ::unsetenv("URTLAB_SEED");
  Result b = run({"test", "mtp", "--mu", "canopy", "--n", "500", "--seed", "11"});
  EXPECT_EQ(json::parse(a.out)["config"]["seed"], 11);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MtpRayFails) {
  Result r = run({"test", "mtp", "--mu", "ray_from_endpoint", "--mass", "leaf_sender", "--n", "1000"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["report"]["diagnostics"]["difference_mean"], 1.0);
}

TEST(Cli, SampleOutputParses) {
  Result r = run({"sample", "canopy", "--radius", "3", "--count", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  auto nets = urt::read_networks(in);
  ASSERT_EQ(nets.size(), 5u);
  for (const auto& g : nets) EXPECT_EQ(g.radius(), 3);

  Result whole = run({"sample", "sierpinski:2", "--whole"});
  std::istringstream win(whole.out);
  EXPECT_EQ(urt::read_networks(win).front().vertex_count(), 15u);

  Result emb = run({"embed", "--mu", "line", "--d", "3", "--radius", "2", "--emit", "stripped"});
  std::istringstream ein(emb.out);
  EXPECT_EQ(urt::read_networks(ein).front().vertex_count(), 5u);
}

TEST(Cli, TightnessAndConverge) {
  Result stars = run({"tightness", "--family", "star", "--sizes", "20,30,40", "--r", "1", "--M", "2"});
  EXPECT_EQ(stars.code, 1);
  Result trees = run({"test", "tightness", "--family", "regular_tree_ball:3", "--sizes", "2,4,6",
                      "--r", "2", "--M", "3"});
  EXPECT_EQ(trees.code, 0);
  Result conv = run({"converge", "--family", "regular_tree_ball:3", "--sizes", "6,10",
                     "--target", "canopy", "--radius", "2", "--n", "20000"});
  EXPECT_EQ(conv.code, 0) << conv.out;
}

TEST(Cli, HyperbolicCsv) {
  std::string path = ::testing::TempDir() + "urtlab_rays.csv";
  Result r = run({"hyperbolic", "--qmax", "2", "--n", "10000", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["report"]["rays"].size(), 4u);
  std::ifstream csv(path);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "horoball,n,distance,speed,disc_x,disc_y");
}
