#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "urt/embed.hpp"
#include "urt/errors.hpp"
#include "urt/generators.hpp"
#include "urt/stats.hpp"

using namespace urt;

namespace {

CanonicalCode code_of(const RootedNetwork& g) { return canonical_code(g, 1); }

EmpiricalRootedDist two_class(double pa, const CanonicalCode& a, const CanonicalCode& b) {
  EmpiricalRootedDist d(1, 0.0);
  d.add(a, pa);
  d.add(b, 1.0 - pa);
  d.set_samples(0);
  return d;
}

}  // namespace

TEST(Empirical, SingleVertexHasOneClass) {
  auto d = empirical_distribution(*point_mass_sampler(PointMass::single_vertex), 2, 1000, 1);
  EXPECT_EQ(d.class_count(), 1u);
  EXPECT_DOUBLE_EQ(d.sorted_frequencies().front().second, 1.0);
  EXPECT_EQ(d.samples(), 1000);
}

TEST(Empirical, CanopyDepthZeroIsOneClass) {
  auto d = empirical_distribution(*canopy_sampler(), 0, 2000, 2);
  EXPECT_EQ(d.class_count(), 1u);
}

TEST(Empirical, CanopyDepthOneLeafFrequency) {
  const long n = 100000;
  auto d = empirical_distribution(*canopy_sampler(), 1, n, 3);
  double leaf = d.frequency(canonical_code(oracle::canopy_chunk(-1, 1), 1));
  EXPECT_NEAR(leaf, 0.5, 3.0 * std::sqrt(0.25 / n));
}

TEST(Empirical, FiniteGraphExactLaw) {
  auto d = empirical_distribution(star_graph(4), 1, 0, 0);
  EXPECT_EQ(d.samples(), 0);
  EXPECT_DOUBLE_EQ(d.frequency(code_of(star_graph(4))), 0.2);
  EXPECT_DOUBLE_EQ(d.frequency(code_of(star_graph(4).with_root(1))), 0.8);
}

TEST(Empirical, WorkerCountDoesNotMatter) {
  set_max_workers(1);
  auto a = empirical_distribution(*canopy_sampler(), 2, 5000, 9);
  set_max_workers(3);
  auto b = empirical_distribution(*canopy_sampler(), 2, 5000, 9);
  set_max_workers(0);
  EXPECT_EQ(a.weights(), b.weights());
}

TEST(Tv, Examples) {
  CanonicalCode a = code_of(star_graph(1)), b = code_of(star_graph(2));
  auto x = two_class(0.75, a, b);
  EXPECT_EQ(tv_distance(x, x), 0.0);
  EXPECT_DOUBLE_EQ(tv_distance(x, two_class(0.25, a, b)), 0.5);
  EXPECT_DOUBLE_EQ(tv_distance(two_class(1.0, a, b), two_class(0.0, a, b)), 1.0);
  EXPECT_THROW(tv_distance(x, EmpiricalRootedDist(2, 0.0)), DomainError);
  EXPECT_THROW(tv_distance(x, EmpiricalRootedDist(1, 0.5)), DomainError);
  EXPECT_EQ(tv_standard_error(x, x), 0.0);
}

TEST(Mtp, ConstantMassBalances) {
  auto r = mtp_test(*canopy_sampler(), mass_one(), 20000, 4);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.diagnostics["sent_mean"], 2.0, 0.05);
}

TEST(Mtp, RayFailsWithUnitImbalance) {
  auto r = mtp_test(*ray_from_endpoint_sampler(), mass_leaf_sender(), 1000, 5);
  EXPECT_FALSE(r.pass);
  EXPECT_DOUBLE_EQ(r.diagnostics["sent_mean"], 1.0);
  EXPECT_DOUBLE_EQ(r.diagnostics["received_mean"], 0.0);
  EXPECT_TRUE(std::isinf(r.statistic));
}

TEST(Mtp, CanopyLeafSenderPasses) {
  auto r = mtp_test(*canopy_sampler(), mass_leaf_sender(), 50000, 6);
  EXPECT_TRUE(r.pass) << r.statistic;
}

TEST(Mtp, BoundViolationIsReported) {
  MassFunction big{"big", [](const DoublyRootedNetwork&) { return 5.0; }, 0, 1.0};
  EXPECT_THROW(mtp_test(*canopy_sampler(), big, 10, 1), ContractViolation);
}

TEST(Involution, UnimodularFixturesPass) {
  // Each run is a 1%-level test, so ask for a clear majority over seeds.
  InvolutionOptions opt;
  opt.depth = 2;
  for (const auto& mu : {canopy_sampler(), chain_cover_sampler(OffspringLaw::uniform(1, 2))}) {
    int passes = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) passes += involution_test(*mu, 5000, seed, opt).pass;
    EXPECT_GE(passes, 4) << mu->name();
  }
}

TEST(Involution, RayFails) {
  auto r = involution_test(*ray_from_endpoint_sampler(), 2000, 8);
  EXPECT_FALSE(r.pass);
  EXPECT_DOUBLE_EQ(r.statistic, 1.0);
  ASSERT_FALSE(r.per_class.empty());
}

TEST(Involution, SingleVertexIsDegeneratePass) {
  auto r = involution_test(*point_mass_sampler(PointMass::single_vertex), 100, 9);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Involution, SeedHarnessCalibration) {
  InvolutionOptions opt;
  opt.calibration = Calibration::seed_harness;
  opt.replicates = 20;
  auto r = involution_test(*canopy_sampler(), 2000, 10, opt);
  EXPECT_GT(r.threshold, 0.0);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(involution_test(*ray_from_endpoint_sampler(), 2000, 10, opt).pass);
}

TEST(Involution, FixedThresholdOverridesCalibration) {
  InvolutionOptions opt;
  opt.fixed_threshold = 0.25;
  auto r = involution_test(*canopy_sampler(), 1000, 11, opt);
  EXPECT_EQ(r.threshold, 0.25);
  EXPECT_FALSE(r.diagnostics.contains("null_median"));
}

TEST(DegreeBiased, StarHubHasHalfTheMass) {
  for (int n : {1, 5, 20}) {
    auto w = degree_biased(star_graph(n));
    EXPECT_DOUBLE_EQ(w[star_graph(n).root()], 0.5);
  }
  EXPECT_THROW(degree_biased(oracle::make_net(1, {})), DomainError);
}

TEST(Stationarity, MatchesDenseOracle) {
  for (const RootedNetwork& g : {star_graph(5), sierpinski_graph(2), regular_tree_ball(3, 4)}) {
    EXPECT_LT(stationarity_residual(g), 1e-12);
    EXPECT_LT(oracle::dense_stationarity_residual(g), 1e-12);
  }
}

TEST(Tightness, StarsAreNotTight) {
  const int M = 2;
  std::vector<RootedNetwork> stars;
  for (int n = 10 * M; n <= 10 * M + 40; n += 10) stars.push_back(star_graph(n));
  auto rep = tightness_report(stars, 1, M);
  EXPECT_FALSE(rep.tight);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    double n = static_cast<double>(stars[i].degree(stars[i].root()));
    EXPECT_DOUBLE_EQ(rep.rows[i].p_uniform, 1.0);
    EXPECT_GE(rep.rows[i].p_uniform, n / (n + 1.0));
    EXPECT_DOUBLE_EQ(rep.rows[i].ui_tail, n / (n + 1.0));
    EXPECT_DOUBLE_EQ(rep.rows[i].mean_degree, 2.0 * n / (n + 1.0));
    EXPECT_GE(rep.rows[i].ui_tail, 0.9);
  }
}

TEST(Tightness, RegularTreeBallsAreTight) {
  std::vector<RootedNetwork> fam;
  for (int n = 1; n <= 8; ++n) fam.push_back(regular_tree_ball(3, n));
  for (int r = 0; r <= 3; ++r) {
    auto rep = tightness_report(fam, r, 3);
    EXPECT_TRUE(rep.tight);
    EXPECT_EQ(rep.sup_uniform, 0.0);
    EXPECT_EQ(rep.sup_biased, 0.0);
    EXPECT_EQ(rep.sup_ui_tail, 0.0);
  }
  EXPECT_FALSE(tightness_report(fam, 0, 2).tight);
}

TEST(Convergence, RegularTreeBallsApproachCanopy) {
  auto target = oracle::canopy_exact_law(2);
  std::vector<RootedNetwork> seq{regular_tree_ball(3, 4), regular_tree_ball(3, 8),
                                 regular_tree_ball(3, 12)};
  auto tv = convergence_check(seq, target, 0, 0);
  ASSERT_EQ(tv.size(), 3u);
  EXPECT_GT(tv[0], tv[1]);
  EXPECT_GT(tv[1], tv[2]);
  // Exact: the leaves and the vertices next to them account for the gap.
  EXPECT_LT(tv[2], 0.01);
}

TEST(Convergence, ConstantSequenceAgainstItself) {
  RootedNetwork g = sierpinski_graph(2);
  auto target = empirical_distribution(g, 2, 0, 0);
  auto tv = convergence_check({g, g, g}, target, 0, 0);
  for (double x : tv) EXPECT_EQ(x, 0.0);
  for (double x : cauchy_trend({g, g}, 1)) EXPECT_EQ(x, 0.0);
}

TEST(Convergence, GasketCauchyTrendDecreases) {
  std::vector<RootedNetwork> seq;
  for (int n = 1; n <= 6; ++n) seq.push_back(sierpinski_graph(n));
  auto trend = cauchy_trend(seq, 1);
  for (std::size_t i = 1; i < trend.size(); ++i) EXPECT_LT(trend[i], trend[i - 1]);
}

TEST(Consistency, CanopyAndChainCover) {
  EXPECT_TRUE(consistency_test(*canopy_sampler(), 2, 3, 2, 20000, 12).pass);
  EXPECT_TRUE(consistency_test(*chain_cover_sampler(OffspringLaw::uniform(1, 3)), 2, 3, 2, 20000, 12).pass);
}
