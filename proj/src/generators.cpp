#include "urt/generators.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "urt/errors.hpp"

namespace urt {

OffspringLaw::OffspringLaw(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw DomainError("offspring law needs at least one mass");
  double total = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("offspring probabilities must be finite and nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw DomainError("offspring probabilities must sum to 1");
  }
  while (p_.size() > 1 && p_.back() == 0.0) p_.pop_back();
  cumulative_.resize(p_.size());
  std::partial_sum(p_.begin(), p_.end(), cumulative_.begin());
  cumulative_.back() = 1.0;
}

OffspringLaw OffspringLaw::uniform(int lo, int hi) {
  if (lo < 0 || hi < lo) throw DomainError("uniform law needs 0 <= lo <= hi");
  std::vector<double> p(static_cast<std::size_t>(hi) + 1, 0.0);
  for (int k = lo; k <= hi; ++k) p[static_cast<std::size_t>(k)] = 1.0 / (hi - lo + 1);
  return OffspringLaw(std::move(p));
}

OffspringLaw OffspringLaw::point_mass(int k) {
  if (k < 0) throw DomainError("point mass must sit on a nonnegative integer");
  std::vector<double> p(static_cast<std::size_t>(k) + 1, 0.0);
  p.back() = 1.0;
  return OffspringLaw(std::move(p));
}

int OffspringLaw::min_support() const {
  for (std::size_t k = 0; k < p_.size(); ++k) {
    if (p_[k] > 0.0) return static_cast<int>(k);
  }
  return max_value();
}

double OffspringLaw::probability(int k) const {
  if (k < 0 || k > max_value()) return 0.0;
  return p_[static_cast<std::size_t>(k)];
}

double OffspringLaw::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < p_.size(); ++k) m += static_cast<double>(k) * p_[k];
  return m;
}

int OffspringLaw::sample(Rng& rng) const {
  double u = uniform01(rng);
  for (std::size_t k = 0; k < cumulative_.size(); ++k) {
    if (u < cumulative_[k] && p_[k] > 0.0) return static_cast<int>(k);
  }
  return max_value();
}

namespace {

class CanopySampler final : public RootedLawSampler {
 public:
  // Vertices carry a level: leaves are level 0, each level-l vertex (l >= 1)
  // has two children at level l-1 and one parent at level l+1. The canopy
  // vertex x_n sits at level n+1.
  RootedNetwork sample(int r, Rng& rng) const override {
    int level = 0;
    while (true) {
      std::uint64_t word = rng();
      if (word != 0) {
        level += std::countr_zero(word);
        break;
      }
      level += 64;
    }
    return build(level, r);
  }

  static RootedNetwork build(int root_level, int r) {
    enum class From { none, above, below };
    struct Node {
      int level;
      int depth;
      From from;
    };
    NetworkBuilder b;
    std::vector<Node> nodes{{root_level, 0, From::none}};
    b.add_vertex();
    auto child = [&](VertexId parent, int level, From from) {
      VertexId id = b.add_vertex();
      nodes.push_back({level, nodes[parent].depth + 1, from});
      b.add_edge(parent, id);
    };
    for (VertexId i = 0; i < nodes.size(); ++i) {
      Node n = nodes[i];
      if (n.depth == r) continue;
      bool up = n.from != From::above;
      int down = n.level == 0 ? 0 : (n.from == From::below ? 1 : 2);
      if (up) child(i, n.level + 1, From::below);
      for (int k = 0; k < down; ++k) child(i, n.level - 1, From::above);
    }
    return std::move(b).build(0, r);
  }

  std::string name() const override { return "canopy"; }
  std::optional<int> degree_bound() const override { return 3; }
};

RootedNetwork path_centered(int r) {
  NetworkBuilder b(2 * static_cast<std::size_t>(r) + 1);
  b.add_vertex();
  VertexId left = 0, right = 0;
  for (int i = 0; i < r; ++i) {
    VertexId l = b.add_vertex();
    b.add_edge(left, l);
    left = l;
    VertexId rr = b.add_vertex();
    b.add_edge(right, rr);
    right = rr;
  }
  return std::move(b).build(0, r);
}

class PointMassSampler final : public RootedLawSampler {
 public:
  PointMassSampler(PointMass kind, int degree) : kind_(kind), degree_(degree) {}

  RootedNetwork sample(int r, Rng&) const override {
    switch (kind_) {
      case PointMass::single_vertex: {
        NetworkBuilder b;
        b.add_vertex();
        return std::move(b).build(0);
      }
      case PointMass::line:
        return path_centered(r);
      case PointMass::regular:
        if (degree_ == 1) return star_graph(1);
        if (degree_ == 2) return path_centered(r);
        return regular_tree_ball(degree_, r).with_radius(r);
    }
    throw DomainError("unknown point mass");
  }

  std::string name() const override {
    switch (kind_) {
      case PointMass::single_vertex:
        return "single_vertex";
      case PointMass::line:
        return "line";
      case PointMass::regular:
        return "regular:" + std::to_string(degree_);
    }
    return "point_mass";
  }

  std::optional<int> degree_bound() const override { return root_degree(); }

  std::optional<DegreeLaw> known_root_degree_law() const override {
    return DegreeLaw{{root_degree(), 1.0}};
  }

 private:
  int root_degree() const {
    switch (kind_) {
      case PointMass::single_vertex:
        return 0;
      case PointMass::line:
        return 2;
      case PointMass::regular:
        return degree_;
    }
    return 0;
  }

  PointMass kind_;
  int degree_;
};

class RayFromEndpoint final : public RootedLawSampler {
 public:
  RootedNetwork sample(int r, Rng&) const override { return path_graph(r + 1).with_radius(r); }
  std::string name() const override { return "ray_from_endpoint"; }
  std::optional<int> degree_bound() const override { return 2; }
  std::optional<DegreeLaw> known_root_degree_law() const override {
    return DegreeLaw{{1, 1.0}};
  }
};

class ChainCoverSampler final : public RootedLawSampler {
 public:
  explicit ChainCoverSampler(OffspringLaw law) : law_(std::move(law)) {
    if (law_.probability(0) > 0.0) {
      throw DomainError("chain cover multiplicities must be supported on k >= 1");
    }
  }

  RootedNetwork sample(int r, Rng& rng) const override {
    // mult[k + r] joins base vertices k and k+1, for k in [-r, r].
    std::vector<int> mult(2 * static_cast<std::size_t>(r) + 1);
    for (int& m : mult) m = law_.sample(rng);
    auto gap = [&](int k) { return mult[static_cast<std::size_t>(k + r)]; };

    // A cover vertex is a non-backtracking walk from 0; it remembers its base
    // vertex and the edge copy it arrived by (gap index, copy), if any.
    struct Lift {
      int base;
      int depth;
      int via_gap;  // gap k joins k and k+1; INT_MIN for the root
      int via_copy;
    };
    std::vector<Lift> lifts{{0, 0, std::numeric_limits<int>::min(), 0}};
    NetworkBuilder b;
    b.add_vertex();
    for (VertexId i = 0; i < lifts.size(); ++i) {
      Lift x = lifts[i];
      if (x.depth == r) continue;
      for (int side = 0; side < 2; ++side) {
        int g = side == 0 ? x.base - 1 : x.base;
        int next = side == 0 ? x.base - 1 : x.base + 1;
        for (int c = 0; c < gap(g); ++c) {
          if (g == x.via_gap && c == x.via_copy) continue;
          VertexId id = b.add_vertex();
          lifts.push_back({next, x.depth + 1, g, c});
          b.add_edge(i, id);
        }
      }
    }
    return std::move(b).build(0, r);
  }

  std::string name() const override { return "chain_cover"; }
  std::optional<int> degree_bound() const override { return 2 * law_.max_value(); }

 private:
  OffspringLaw law_;
};

}  // namespace

SamplerPtr canopy_sampler() { return std::make_shared<CanopySampler>(); }

SamplerPtr point_mass_sampler(PointMass kind, int degree) {
  if (kind == PointMass::regular && degree < 1) {
    throw DomainError("regular point mass needs degree >= 1");
  }
  return std::make_shared<PointMassSampler>(kind, degree);
}

SamplerPtr ray_from_endpoint_sampler() { return std::make_shared<RayFromEndpoint>(); }

SamplerPtr chain_cover_sampler(OffspringLaw multiplicity) {
  return std::make_shared<ChainCoverSampler>(std::move(multiplicity));
}

RootedNetwork regular_tree_ball(int d, int n) {
  if (d < 2) throw DomainError("regular tree ball needs d >= 2");
  if (n < 0) throw DomainError("regular tree ball needs n >= 0");
  NetworkBuilder b;
  b.add_vertex();
  std::vector<int> depth{0};
  for (VertexId i = 0; i < depth.size(); ++i) {
    if (depth[i] == n) continue;
    int kids = i == 0 ? d : d - 1;
    for (int k = 0; k < kids; ++k) {
      VertexId id = b.add_vertex();
      depth.push_back(depth[i] + 1);
      b.add_edge(i, id);
    }
  }
  return std::move(b).build(0);
}

RootedNetwork sierpinski_graph(int n) {
  if (n < 0) throw DomainError("gasket stage must be nonnegative");
  if (n > 12) throw DomainError("gasket stage too large");
  // Unit triangles with lower-left corner (a, b) in lattice coordinates.
  std::vector<std::pair<long, long>> tri{{0, 0}};
  for (int s = 1; s <= n; ++s) {
    long shift = 1L << (s - 1);
    std::size_t m = tri.size();
    for (std::size_t i = 0; i < m; ++i) tri.emplace_back(tri[i].first + shift, tri[i].second);
    for (std::size_t i = 0; i < m; ++i) tri.emplace_back(tri[i].first, tri[i].second + shift);
  }
  std::map<std::pair<long, long>, VertexId> ids;
  NetworkBuilder b;
  auto vertex = [&](long a, long c) {
    auto [it, fresh] = ids.emplace(std::make_pair(a, c), 0);
    if (fresh) it->second = b.add_vertex();
    return it->second;
  };
  vertex(0, 0);
  for (auto [a, c] : tri) {
    VertexId p = vertex(a, c), q = vertex(a + 1, c), s = vertex(a, c + 1);
    b.add_edge(p, q);
    b.add_edge(q, s);
    b.add_edge(s, p);
  }
  return std::move(b).build(0);
}

RootedNetwork sierpinski_graph(int n, Rng& rng) {
  RootedNetwork g = sierpinski_graph(n);
  return g.with_root(static_cast<VertexId>(uniform_index(rng, g.vertex_count())));
}

RootedNetwork star_graph(int n) {
  if (n < 1) throw DomainError("star needs at least one leaf");
  NetworkBuilder b(static_cast<std::size_t>(n) + 1);
  b.add_vertex();
  for (int i = 0; i < n; ++i) b.add_edge(0, b.add_vertex());
  return std::move(b).build(0);
}

RootedNetwork path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  NetworkBuilder b(static_cast<std::size_t>(n));
  b.add_vertex();
  for (int i = 1; i < n; ++i) b.add_edge(static_cast<VertexId>(i - 1), b.add_vertex());
  return std::move(b).build(0);
}

}  // namespace urt
