#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "urt/canonical.hpp"
#include "urt/errors.hpp"
#include "urt/generators.hpp"
#include "urt/stats.hpp"

using namespace urt;

namespace {

std::map<std::size_t, long> root_degree_counts(const RootedLawSampler& mu, long n, std::uint64_t seed) {
  Rng rng(seed);
  std::map<std::size_t, long> counts;
  for (long i = 0; i < n; ++i) {
    RootedNetwork g = sample_ball(mu, 1, rng);
    ++counts[g.degree(g.root())];
  }
  return counts;
}

}  // namespace

TEST(OffspringLaw, Validation) {
  EXPECT_THROW(OffspringLaw({0.5, 0.4}), DomainError);
  EXPECT_THROW(OffspringLaw({-0.1, 1.1}), DomainError);
  EXPECT_THROW(OffspringLaw::uniform(3, 2), DomainError);
  OffspringLaw u = OffspringLaw::uniform(1, 4);
  EXPECT_DOUBLE_EQ(u.mean(), 2.5);
  EXPECT_EQ(u.min_support(), 1);
  EXPECT_EQ(u.max_value(), 4);
  Rng rng(1);
  std::map<int, long> seen;
  for (int i = 0; i < 40000; ++i) ++seen[u.sample(rng)];
  ASSERT_EQ(seen.size(), 4u);
  for (auto [k, c] : seen) EXPECT_NEAR(c / 40000.0, 0.25, 0.01) << k;
}

TEST(Canopy, RootDegreeLaw) {
  auto mu = canopy_sampler();
  const long n = 100000;
  auto counts = root_degree_counts(*mu, n, 3);
  ASSERT_EQ(counts.size(), 2u);
  double leaf = counts[1] / static_cast<double>(n);
  EXPECT_NEAR(leaf, 0.5, 3.0 * std::sqrt(0.25 / n));
  double mean = (counts[1] + 3.0 * counts[3]) / n;
  EXPECT_NEAR(mean, 2.0, 0.02);
  EXPECT_EQ(mu->degree_bound(), 3);
}

TEST(Canopy, ExactLawMatchesSamplerAtDepthTwo) {
  auto mu = canopy_sampler();
  EmpiricalRootedDist exact = oracle::canopy_exact_law(2);
  EmpiricalRootedDist emp = empirical_distribution(*mu, 2, 50000, 17);
  EXPECT_NEAR(exact.total(), 1.0, 1e-15);
  EXPECT_EQ(emp.class_count(), exact.class_count());
  EXPECT_LT(tv_distance(emp, exact), 3.0 * tv_standard_error(emp, exact));
}

TEST(Canopy, LevelProbabilities) {
  EXPECT_DOUBLE_EQ(oracle::canopy_level_probability(-1), 0.5);
  double total = 0.0;
  for (int n = -1; n < 60; ++n) total += oracle::canopy_level_probability(n);
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(Canopy, BallsAreTreesOfBoundedDegree) {
  auto mu = canopy_sampler();
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    RootedNetwork g = mu->sample(4, rng);
    ASSERT_GE(g.radius(), 4);
    RootedNetwork b = ball(g, g.root(), 4);
    EXPECT_TRUE(b.is_tree());
    auto dist = b.distances_from(b.root());
    for (VertexId v = 0; v < b.vertex_count(); ++v) {
      if (dist[v] < 4) EXPECT_TRUE(b.degree(v) == 1 || b.degree(v) == 3);
    }
  }
}

TEST(PointMass, Examples) {
  Rng rng(0);
  for (int r : {0, 1, 5}) {
    RootedNetwork one = point_mass_sampler(PointMass::single_vertex)->sample(r, rng);
    EXPECT_EQ(one.vertex_count(), 1u);
  }
  RootedNetwork line = sample_ball(*point_mass_sampler(PointMass::line), 2, rng);
  EXPECT_EQ(line.vertex_count(), 5u);
  EXPECT_EQ(line.degree(line.root()), 2u);
  EXPECT_EQ(canonical_code(line, 2), canonical_code(oracle::make_net(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 2), 2));
  RootedNetwork t3 = sample_ball(*point_mass_sampler(PointMass::regular, 3), 1, rng);
  EXPECT_EQ(t3.vertex_count(), 4u);
  EXPECT_EQ(t3.degree(t3.root()), 3u);
  EXPECT_THROW(point_mass_sampler(PointMass::regular, 0), DomainError);
}

TEST(RayFromEndpoint, RootIsTheEnd) {
  Rng rng(0);
  RootedNetwork g = sample_ball(*ray_from_endpoint_sampler(), 3, rng);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.degree(g.root()), 1u);
}

TEST(RegularTreeBall, Counts) {
  EXPECT_EQ(regular_tree_ball(3, 1).vertex_count(), 4u);
  for (int n = 0; n <= 10; ++n) {
    RootedNetwork g = regular_tree_ball(3, n);
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(3 * (1 << n) - 2));
    EXPECT_TRUE(g.is_tree());
  }
  RootedNetwork g = regular_tree_ball(3, 12);
  long leaves = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) leaves += g.degree(v) == 1;
  EXPECT_NEAR(leaves / static_cast<double>(g.vertex_count()), 0.5, 0.01);
  EXPECT_THROW(regular_tree_ball(1, 2), DomainError);
  EXPECT_THROW(regular_tree_ball(3, -1), DomainError);
}

TEST(Sierpinski, CountsAndDegrees) {
  for (int n = 0; n <= 6; ++n) {
    RootedNetwork g = sierpinski_graph(n);
    long p = 1;
    for (int i = 0; i <= n; ++i) p *= 3;
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>((p + 3) / 2)) << n;
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(p)) << n;
    std::map<std::size_t, long> degrees;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++degrees[g.degree(v)];
    if (n >= 1) {
      EXPECT_EQ(degrees.size(), 2u);
      EXPECT_EQ(degrees[2], 3);
      EXPECT_EQ(degrees[4], static_cast<long>(g.vertex_count()) - 3);
    }
  }
  EXPECT_EQ(sierpinski_graph(0).degree(0), 2u);
}

TEST(Star, Examples) {
  RootedNetwork s1 = star_graph(1);
  EXPECT_EQ(s1.vertex_count(), 2u);
  EXPECT_EQ(s1.edge_count(), 1u);
  for (int n : {1, 4, 9}) {
    RootedNetwork s = star_graph(n);
    double mean = 2.0 * s.edge_count() / s.vertex_count();
    EXPECT_DOUBLE_EQ(mean, 2.0 * n / (n + 1.0));
    EXPECT_EQ(s.degree(s.root()), static_cast<std::size_t>(n));
  }
  EXPECT_THROW(star_graph(0), DomainError);
}

TEST(ChainCover, PointMassesGiveLineAndFourRegularTree) {
  Rng rng(4);
  auto delta1 = chain_cover_sampler(OffspringLaw::point_mass(1));
  auto delta2 = chain_cover_sampler(OffspringLaw::point_mass(2));
  auto line = point_mass_sampler(PointMass::line);
  auto t4 = point_mass_sampler(PointMass::regular, 4);
  for (int r = 0; r <= 4; ++r) {
    EXPECT_EQ(canonical_code(sample_ball(*delta1, r, rng), r), canonical_code(sample_ball(*line, r, rng), r));
    RootedNetwork cover = sample_ball(*delta2, r, rng);
    EXPECT_TRUE(cover.is_tree());
    EXPECT_EQ(canonical_code(cover, r), canonical_code(sample_ball(*t4, r, rng), r));
  }
}

TEST(ChainCover, UniformOneTwoMeanDegreeThree) {
  auto mu = chain_cover_sampler(OffspringLaw::uniform(1, 2));
  const long n = 100000;
  auto counts = root_degree_counts(*mu, n, 12);
  double mean = 0.0;
  for (auto [k, c] : counts) mean += static_cast<double>(k) * c;
  mean /= n;
  // Var(N_{-1} + N_0) = 1/2.
  EXPECT_NEAR(mean, 3.0, 4.0 * std::sqrt(0.5 / n));
  EXPECT_EQ(mu->degree_bound(), 4);
}

TEST(ChainCover, RejectsZeroMultiplicity) {
  EXPECT_THROW(chain_cover_sampler(OffspringLaw({0.5, 0.5})), DomainError);
}

TEST(ChainCover, LiftDegreesMatchMultiplicities) {
  // A lift of k has degree N_{k-1} + N_k, so the two neighbors of the root
  // along gap 0 see the same multiplicity N_0 from the other side.
  auto mu = chain_cover_sampler(OffspringLaw::uniform(1, 4));
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    RootedNetwork g = sample_ball(*mu, 3, rng);
    EXPECT_TRUE(g.is_tree());
    auto dist = g.distances_from(g.root());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] < 3) {
        EXPECT_GE(g.degree(v), 2u);
        EXPECT_LE(g.degree(v), 8u);
      }
    }
  }
}
