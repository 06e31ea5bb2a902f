#pragma once

// Independent reference constructions used by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "urt/canonical.hpp"
#include "urt/network.hpp"
#include "urt/stats.hpp"

namespace oracle {

using urt::NetworkBuilder;
using urt::RootedNetwork;
using urt::VertexId;

inline RootedNetwork make_net(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                              int root = 0, int radius = RootedNetwork::kUnbounded) {
  NetworkBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex();
  for (auto [u, v] : edges) b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return std::move(b).build(static_cast<VertexId>(root), radius);
}

// The canopy tree as a one-sided chain x_{-1}, x_0, x_1, ... where x_n (n >= 0)
// also carries a complete binary tree T_n of height n hanging from a child c_n.
// Only the part within distance `r` of x_{root_n} is needed, so the chain stops
// at x_{root_n + r + 1}.
inline RootedNetwork canopy_chunk(int root_n, int r) {
  NetworkBuilder b;
  int top = root_n + r + 1;
  std::vector<VertexId> x;
  for (int n = -1; n <= top; ++n) {
    x.push_back(b.add_vertex());
    if (n > -1) b.add_edge(x[x.size() - 2], x.back());
  }
  std::function<void(VertexId, int)> grow = [&](VertexId v, int height) {
    if (height == 0) return;
    for (int k = 0; k < 2; ++k) {
      VertexId c = b.add_vertex();
      b.add_edge(v, c);
      grow(c, height - 1);
    }
  };
  for (int n = 0; n <= top; ++n) {
    VertexId c = b.add_vertex();
    b.add_edge(x[static_cast<std::size_t>(n + 1)], c);
    grow(c, std::min(n, r + 1));
  }
  RootedNetwork whole = std::move(b).build(x[static_cast<std::size_t>(root_n + 1)]);
  return urt::ball(whole, whole.root(), r);
}

inline double canopy_level_probability(int n) { return std::ldexp(1.0, -n - 2); }

// Exact depth-r law: roots x_n for n = -1..r-2 individually, and every
// n >= r-1 pooled (their r-balls coincide), with total mass 2^{-r}.
inline urt::EmpiricalRootedDist canopy_exact_law(int depth, double q = 0.0) {
  urt::EmpiricalRootedDist law(depth, q);
  for (int n = -1; n <= depth - 2; ++n) {
    law.add(urt::canonical_code(canopy_chunk(n, depth), depth, q),
            canopy_level_probability(n));
  }
  law.add(urt::canonical_code(canopy_chunk(std::max(depth - 1, -1), depth), depth, q),
          std::ldexp(1.0, -depth));
  law.set_samples(0);
  return law;
}

// Dense transition-matrix check of deg-weighted stationarity.
inline double dense_stationarity_residual(const RootedNetwork& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> P(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    P[e.u][e.v] += 1.0;
    P[e.v][e.u] += 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double rowsum = std::accumulate(P[i].begin(), P[i].end(), 0.0);
    for (double& p : P[i]) p /= rowsum;
  }
  double worst = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    double s = 0.0;
    for (std::size_t x = 0; x < n; ++x) s += static_cast<double>(g.degree(static_cast<VertexId>(x))) * P[x][y];
    worst = std::max(worst, std::abs(s - static_cast<double>(g.degree(static_cast<VertexId>(y)))));
  }
  return worst;
}

// Root-preserving isomorphism by trying every vertex permutation. Edge
// multiplicities and vertex tags must match; intended for <= 8 vertices.
inline bool brute_force_isomorphic(const RootedNetwork& a, const RootedNetwork& b) {
  std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto adjacency = [](const RootedNetwork& g) {
    std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) {
      ++m[e.u][e.v];
      ++m[e.v][e.u];
    }
    return m;
  };
  auto ma = adjacency(a), mb = adjacency(b);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.root()] != b.root()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (a.vertex_mark(static_cast<VertexId>(i)).tag() !=
          b.vertex_mark(static_cast<VertexId>(perm[i])).tag()) {
        ok = false;
      }
      for (std::size_t j = 0; j < n && ok; ++j) ok = ma[i][j] == mb[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Pearson statistic of observed counts against equal expected counts.
inline double chi_square_uniform(const std::vector<long>& counts) {
  double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  double expected = total / static_cast<double>(counts.size());
  double s = 0.0;
  for (long c : counts) s += (c - expected) * (c - expected) / expected;
  return s;
}

// Geodesic length by composite Simpson quadrature of the metric |dz|/y along
// the geodesic through a and b (vertical line or half circle).
inline double quadrature_distance(double x1, double y1, double x2, double y2, int steps = 20000) {
  auto simpson = [&](auto f, double lo, double hi) {
    double h = (hi - lo) / steps, s = f(lo) + f(hi);
    for (int i = 1; i < steps; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  if (x1 == x2) {
    return std::abs(simpson([](double y) { return 1.0 / y; }, std::min(y1, y2), std::max(y1, y2)));
  }
  double c = ((x2 * x2 + y2 * y2) - (x1 * x1 + y1 * y1)) / (2.0 * (x2 - x1));
  double t1 = std::atan2(y1, x1 - c), t2 = std::atan2(y2, x2 - c);
  // On the circle, |dz| / y = d(theta) / sin(theta).
  return simpson([](double t) { return 1.0 / std::sin(t); }, std::min(t1, t2), std::max(t1, t2));
}

}  // namespace oracle
