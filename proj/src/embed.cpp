#include "urt/embed.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "urt/errors.hpp"

namespace urt {

namespace {

void check_bound(const RootedLawSampler& mu, int d) {
  if (d < 1) throw DomainError("degree bound d must be >= 1");
  auto bound = mu.degree_bound();
  if (bound && *bound > d) {
    throw ContractViolation(mu.name() + " has degree bound " + std::to_string(*bound) +
                            " > d = " + std::to_string(d));
  }
}

int checked_degree(const RootedNetwork& net, VertexId v, int d, const std::string& who) {
  auto k = static_cast<int>(net.degree(v));
  if (k > d) {
    throw ContractViolation(who + " produced a vertex of degree " + std::to_string(k) +
                            " > d = " + std::to_string(d));
  }
  return k;
}

Mark open_mark(const Mark& m) { return m.with_front(kOpen); }
Mark closed_mark() { return Mark(0, {kClosed}); }

bool has_color(const Mark& m) {
  return !m.empty() && (m[0] == kOpen || m[0] == kClosed);
}

class BiasedSampler final : public RootedLawSampler {
 public:
  BiasedSampler(SamplerPtr mu, int d) : mu_(std::move(mu)), d_(d) {
    check_bound(*mu_, d_);
    if (auto law = mu_->known_root_degree_law()) {
      auto it = law->find(d_);
      if (it != law->end() && it->second >= 1.0) {
        throw DegenerateMeasureError(mu_->name() + " puts all mass on root degree d");
      }
    }
  }

  RootedNetwork sample(int r, Rng& rng) const override {
    int draw_r = std::max(r, 1);
    for (long tries = 0; tries < kMaxRejections; ++tries) {
      RootedNetwork t = sample_ball(*mu_, draw_r, rng);
      int k = checked_degree(t, t.root(), d_, mu_->name());
      if (uniform01(rng) * d_ < static_cast<double>(d_ - k)) {
        return draw_r == r ? t : ball(t, t.root(), r);
      }
    }
    throw DegenerateMeasureError("no root of degree < d in " +
                                 std::to_string(kMaxRejections) + " draws from " +
                                 mu_->name());
  }

  std::string name() const override { return "biased(" + mu_->name() + ")"; }
  std::optional<int> degree_bound() const override { return mu_->degree_bound(); }

 private:
  SamplerPtr mu_;
  int d_;
};

// Grows rho / nu balls breadth-first. Each pending job hangs a fresh tree
// below `parent` (through a closed edge) and may reach `budget` steps deeper.
class Grower {
 public:
  Grower(const RootedLawSampler* mu, const RootedLawSampler* biased, int d)
      : mu_(mu), biased_(biased), d_(d) {}

  RootedNetwork grow_rho(int r, Rng& rng) {
    place(sample_ball(*mu_, r, rng), std::nullopt, r, false, *mu_);
    drain(rng);
    return std::move(out_).build(0, r);
  }

  RootedNetwork grow_nu(int r, Rng& rng) {
    place(sample_ball(*biased_, r, rng), std::nullopt, r, true, *biased_);
    drain(rng);
    return std::move(out_).build(0, r);
  }

 private:
  struct Job {
    VertexId parent;
    int budget;
  };

  void drain(Rng& rng) {
    if (!jobs_.empty() && biased_ == nullptr) {
      throw ContractViolation(mu_->name() + " declared all roots of degree d");
    }
    while (!jobs_.empty()) {
      Job job = jobs_.front();
      jobs_.pop_front();
      place(sample_ball(*biased_, job.budget, rng), job.parent, job.budget, true, *biased_);
    }
  }

  // `tree` is an exact ball of radius `budget` around its root.
  void place(const RootedNetwork& tree, std::optional<VertexId> parent, int budget,
             bool nu_root, const RootedLawSampler& from) {
    auto offset = static_cast<VertexId>(out_.vertex_count());
    for (const Mark& m : tree.vertex_marks()) out_.add_vertex(m);
    for (const Edge& e : tree.edges()) {
      out_.add_edge(offset + e.u, offset + e.v, open_mark(e.at_u), open_mark(e.at_v));
    }
    if (parent) out_.add_edge(*parent, offset + tree.root(), closed_mark(), closed_mark());
    if (budget == 0) return;
    std::vector<int> dist = tree.distances_from(tree.root(), budget - 1);
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
      if (dist[v] < 0) continue;
      int k = checked_degree(tree, v, d_, from.name());
      int closed = d_ - k - (nu_root && v == tree.root() ? 1 : 0);
      for (int c = 0; c < closed; ++c) jobs_.push_back({offset + v, budget - dist[v] - 1});
    }
  }

  const RootedLawSampler* mu_;
  const RootedLawSampler* biased_;
  int d_;
  NetworkBuilder out_;
  std::deque<Job> jobs_;
};

class RhoSampler final : public RootedLawSampler {
 public:
  RhoSampler(SamplerPtr mu, int d) : mu_(std::move(mu)), d_(d) {
    check_bound(*mu_, d_);
    try {
      biased_ = std::make_shared<BiasedSampler>(mu_, d_);
    } catch (const DegenerateMeasureError&) {
      // Every vertex already has degree d, so no closed edge is ever needed.
    }
  }

  RootedNetwork sample(int r, Rng& rng) const override {
    Grower g(mu_.get(), biased_.get(), d_);
    return g.grow_rho(r, rng);
  }

  std::string name() const override {
    return "rho(" + mu_->name() + "," + std::to_string(d_) + ")";
  }
  std::optional<int> degree_bound() const override { return d_; }
  std::optional<DegreeLaw> known_root_degree_law() const override {
    return DegreeLaw{{d_, 1.0}};
  }

 private:
  SamplerPtr mu_;
  SamplerPtr biased_;
  int d_;
};

class RhoPrimeSampler final : public RootedLawSampler {
 public:
  RhoPrimeSampler(SamplerPtr mu, int d) : rho_(rho_sampler(std::move(mu), d)), d_(d) {}

  RootedNetwork sample(int r, Rng& rng) const override {
    RootedNetwork marked = direction_marks(rho_->sample(r + 1, rng), rng);
    return ball(marked, marked.root(), r);
  }

  std::string name() const override { return "rho_prime" + rho_->name().substr(3); }
  std::optional<int> degree_bound() const override { return d_; }
  std::optional<DegreeLaw> known_root_degree_law() const override {
    return DegreeLaw{{d_, 1.0}};
  }

 private:
  SamplerPtr rho_;
  int d_;
};

class TruncatedSampler final : public RootedLawSampler {
 public:
  TruncatedSampler(SamplerPtr mu, int d) : mu_(std::move(mu)), d_(d) {
    if (d_ < 0) throw DomainError("truncation degree must be >= 0");
  }

  RootedNetwork sample(int r, Rng& rng) const override {
    RootedNetwork t = truncate_degree(mu_->sample(r + 1, rng), d_);
    return ball(t, t.root(), r);
  }

  std::string name() const override {
    return "truncated(" + mu_->name() + "," + std::to_string(d_) + ")";
  }
  std::optional<int> degree_bound() const override {
    auto b = mu_->degree_bound();
    return b ? std::min(*b, d_) : d_;
  }

 private:
  SamplerPtr mu_;
  int d_;
};

class IidMarkedSampler final : public RootedLawSampler {
 public:
  IidMarkedSampler(SamplerPtr mu, RealLaw law, std::string law_name)
      : mu_(std::move(mu)), law_(std::move(law)), law_name_(std::move(law_name)) {}

  RootedNetwork sample(int r, Rng& rng) const override {
    return add_iid_marks(mu_->sample(r, rng), law_, rng);
  }

  std::string name() const override { return mu_->name() + "+" + law_name_; }
  std::optional<int> degree_bound() const override { return mu_->degree_bound(); }
  std::optional<DegreeLaw> known_root_degree_law() const override {
    return mu_->known_root_degree_law();
  }

 private:
  SamplerPtr mu_;
  RealLaw law_;
  std::string law_name_;
};

int reduced(int radius, int by) {
  if (radius == RootedNetwork::kUnbounded) return radius;
  return std::max(radius - by, 0);
}

}  // namespace

DegreeProfile degree_profile(const RootedLawSampler& mu, int d, long samples, Rng& rng) {
  check_bound(mu, d);
  DegreeProfile out;
  out.d = d;
  if (auto law = mu.known_root_degree_law()) {
    out.p = *law;
    for (auto [k, _] : out.p) {
      if (k > d) throw ContractViolation(mu.name() + " root degree exceeds d");
    }
  } else {
    if (samples < 1) throw DomainError("degree_profile needs at least one sample");
    std::map<int, long> counts;
    for (long i = 0; i < samples; ++i) {
      RootedNetwork t = mu.sample(1, rng);
      ++counts[checked_degree(t, t.root(), d, mu.name())];
    }
    for (auto [k, c] : counts) out.p[k] = static_cast<double>(c) / static_cast<double>(samples);
    out.samples = samples;
  }
  for (auto [k, p] : out.p) out.alpha += p * (d - k);
  return out;
}

SamplerPtr biased_sampler(SamplerPtr mu, int d) {
  return std::make_shared<BiasedSampler>(std::move(mu), d);
}

RootedNetwork nu_sample(const RootedLawSampler& mu_biased, int d, int r, Rng& rng) {
  if (r < 0) throw DomainError("radius must be >= 0");
  Grower g(nullptr, &mu_biased, d);
  return g.grow_nu(r, rng);
}

SamplerPtr rho_sampler(SamplerPtr mu, int d) {
  return std::make_shared<RhoSampler>(std::move(mu), d);
}

RootedNetwork direction_marks(const RootedNetwork& ball, Rng& rng) {
  std::vector<Edge> edges(ball.edges().begin(), ball.edges().end());
  for (const Edge& e : edges) {
    if (!has_color(e.at_u) || !has_color(e.at_v)) {
      throw DomainError("direction_marks needs edge colors in values[0]");
    }
  }
  std::vector<EdgeId> closed;
  std::vector<int> perm;
  for (VertexId x = 0; x < ball.vertex_count(); ++x) {
    closed.clear();
    for (const auto& inc : ball.incident(x)) {
      if (ball.edge(inc.edge).mark_at(x)[0] == kClosed) closed.push_back(inc.edge);
    }
    perm.resize(closed.size());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      Edge& e = edges[closed[i]];
      Mark& m = e.u == x ? e.at_u : e.at_v;
      m = Mark(m.tag(), {kClosed, static_cast<double>(perm[i])});
    }
  }
  std::vector<Mark> marks(ball.vertex_marks().begin(), ball.vertex_marks().end());
  return RootedNetwork(std::move(marks), std::move(edges), ball.root(),
                       reduced(ball.radius(), 1));
}

SamplerPtr rho_prime_sampler(SamplerPtr mu, int d) {
  return std::make_shared<RhoPrimeSampler>(std::move(mu), d);
}

RootedNetwork strip_closed(const RootedNetwork& ball) {
  std::vector<bool> keep(ball.edge_count());
  for (EdgeId e = 0; e < ball.edge_count(); ++e) {
    const Edge& edge = ball.edge(e);
    if (!has_color(edge.at_u) || !has_color(edge.at_v)) {
      throw DomainError("strip_closed needs edge colors in values[0]");
    }
    keep[e] = edge.at_u[0] == kOpen;
  }
  RootedNetwork open = root_component(ball, keep, ball.radius());
  std::vector<Edge> edges(open.edges().begin(), open.edges().end());
  for (Edge& e : edges) {
    e.at_u = e.at_u.without_front();
    e.at_v = e.at_v.without_front();
  }
  std::vector<Mark> marks(open.vertex_marks().begin(), open.vertex_marks().end());
  return RootedNetwork(std::move(marks), std::move(edges), 0, open.radius());
}

RootedNetwork truncate_degree(const RootedNetwork& net, int d) {
  std::vector<bool> keep(net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    keep[e] = static_cast<int>(net.degree(edge.u)) <= d &&
              static_cast<int>(net.degree(edge.v)) <= d;
  }
  return root_component(net, keep, reduced(net.radius(), 1));
}

SamplerPtr truncated_sampler(SamplerPtr mu, int d) {
  return std::make_shared<TruncatedSampler>(std::move(mu), d);
}

RootedNetwork map_marks(const RootedNetwork& net, const MarkMap& phi, int locality) {
  if (locality < 0) throw DomainError("locality must be >= 0");
  if (!net.is_finite() && net.radius() < locality) {
    throw TruncationError("mark map needs radius " + std::to_string(locality) +
                          " but the network is valid to " + std::to_string(net.radius()));
  }
  std::vector<Mark> marks;
  marks.reserve(net.vertex_count());
  for (VertexId x = 0; x < net.vertex_count(); ++x) marks.push_back(phi(net, x));
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  return RootedNetwork(std::move(marks), std::move(edges), net.root(),
                       reduced(net.radius(), locality));
}

RootedNetwork add_iid_marks(const RootedNetwork& net, const RealLaw& law, Rng& rng) {
  std::vector<Mark> marks;
  marks.reserve(net.vertex_count());
  for (const Mark& m : net.vertex_marks()) marks.push_back(m.with_back(law(rng)));
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  return RootedNetwork(std::move(marks), std::move(edges), net.root(), net.radius());
}

SamplerPtr iid_marked_sampler(SamplerPtr mu, RealLaw law, std::string law_name) {
  return std::make_shared<IidMarkedSampler>(std::move(mu), std::move(law),
                                            std::move(law_name));
}

}  // namespace urt
