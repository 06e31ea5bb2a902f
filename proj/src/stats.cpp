#include "urt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "urt/embed.hpp"
#include "urt/errors.hpp"

namespace urt {

void EmpiricalRootedDist::add(const CanonicalCode& code, double weight) {
  if (code.depth != depth_ || code.quantization != q_) {
    throw DomainError("code depth or quantization does not match the distribution");
  }
  add_bytes(code.bytes, weight);
}

void EmpiricalRootedDist::add_bytes(const std::string& bytes, double weight) {
  weights_[bytes] += weight;
  total_ += weight;
  ++samples_;
}

void EmpiricalRootedDist::merge(const EmpiricalRootedDist& other) {
  if (other.depth_ != depth_ || other.q_ != q_) {
    throw DomainError("cannot merge distributions of different depth or quantization");
  }
  for (const auto& [k, w] : other.weights_) weights_[k] += w;
  total_ += other.total_;
  samples_ += other.samples_;
}

double EmpiricalRootedDist::frequency(const std::string& bytes) const {
  if (total_ <= 0.0) return 0.0;
  auto it = weights_.find(bytes);
  return it == weights_.end() ? 0.0 : it->second / total_;
}

std::vector<std::pair<std::string, double>> EmpiricalRootedDist::sorted_frequencies() const {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(weights_.size());
  for (const auto& [k, w] : weights_) out.emplace_back(k, w / total_);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

namespace {

void check_compatible(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b) {
  if (a.depth() != b.depth() || a.quantization() != b.quantization()) {
    throw DomainError("distributions differ in depth or quantization");
  }
  if (a.total() <= 0.0 || b.total() <= 0.0) {
    throw DomainError("distribution has no mass");
  }
}

template <class F>
void for_each_class(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b, F&& f) {
  for (const auto& [k, _] : a.weights()) f(a.frequency(k), b.frequency(k));
  for (const auto& [k, _] : b.weights()) {
    if (!a.weights().contains(k)) f(0.0, b.frequency(k));
  }
}

// Fills one EmpiricalRootedDist per chunk and merges them in chunk order.
template <class Body>
EmpiricalRootedDist chunked_distribution(int depth, double q, long samples,
                                         std::uint64_t seed, Body&& body) {
  if (samples < 1) throw DomainError("need at least one sample");
  std::vector<EmpiricalRootedDist> parts(kDefaultChunks, EmpiricalRootedDist(depth, q));
  parallel_chunks(kDefaultChunks, seed, [&](std::size_t i, Rng& rng) {
    auto [lo, hi] = chunk_range(static_cast<std::size_t>(samples), kDefaultChunks, i);
    for (std::size_t s = lo; s < hi; ++s) body(parts[i], rng);
  });
  EmpiricalRootedDist out(depth, q);
  for (const auto& p : parts) out.merge(p);
  return out;
}

DoublyRootedNetwork pair_ball(const RootedNetwork& g, VertexId x, VertexId y, int s) {
  std::vector<VertexId> ids;
  RootedNetwork b = ball(g, x, s, &ids);
  auto it = std::find(ids.begin(), ids.end(), y);
  if (it == ids.end()) throw DomainError("second root outside the mass-function ball");
  return DoublyRootedNetwork(std::move(b), static_cast<VertexId>(it - ids.begin()));
}

double quantile_of(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size()))) - 1;
  return v[std::min(idx, v.size() - 1)];
}

struct PairObservation {
  std::string forward;
  std::string backward;
  double weight;
};

std::vector<PairObservation> pair_observations(const RootedLawSampler& mu, long samples,
                                               std::uint64_t seed, int depth, double q) {
  std::vector<std::vector<PairObservation>> parts(kDefaultChunks);
  parallel_chunks(kDefaultChunks, seed, [&](std::size_t i, Rng& rng) {
    auto [lo, hi] = chunk_range(static_cast<std::size_t>(samples), kDefaultChunks, i);
    for (std::size_t s = lo; s < hi; ++s) {
      RootedNetwork g = sample_ball(mu, depth + 1, rng);
      VertexId o = g.root();
      std::size_t k = g.degree(o);
      if (k == 0) {
        parts[i].push_back({{}, {}, 0.0});
        continue;
      }
      VertexId o2 = g.incident(o)[uniform_index(rng, k)].neighbor;
      auto fwd = canonical_code(DoublyRootedNetwork(g, o2), depth, q);
      auto bwd = canonical_code(DoublyRootedNetwork(g.with_root(o2), o), depth, q);
      parts[i].push_back({std::move(fwd.bytes), std::move(bwd.bytes),
                          static_cast<double>(k)});
    }
  });
  std::vector<PairObservation> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

struct IndexedPairs {
  std::vector<std::uint32_t> f, b;
  std::vector<double> w;
  std::vector<std::string> names;
  double total = 0.0;
};

IndexedPairs index_pairs(const std::vector<PairObservation>& obs) {
  IndexedPairs out;
  std::unordered_map<std::string, std::uint32_t> ids;
  auto id = [&](const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<std::uint32_t>(ids.size()));
    if (fresh) out.names.push_back(s);
    return it->second;
  };
  for (const auto& o : obs) {
    if (o.weight == 0.0) continue;
    out.f.push_back(id(o.forward));
    out.b.push_back(id(o.backward));
    out.w.push_back(o.weight);
    out.total += o.weight;
  }
  return out;
}

double pair_tv(const IndexedPairs& p) {
  std::vector<double> diff(p.names.size(), 0.0);
  for (std::size_t i = 0; i < p.w.size(); ++i) {
    diff[p.f[i]] += p.w[i];
    diff[p.b[i]] -= p.w[i];
  }
  double s = 0.0;
  for (double x : diff) s += std::abs(x);
  return 0.5 * s / p.total;
}

std::vector<ClassRow> class_rows(const std::vector<std::string>& names,
                                 const std::vector<double>& a, const std::vector<double>& b,
                                 int depth, double q) {
  std::vector<ClassRow> rows;
  for (std::size_t c = 0; c < names.size(); ++c) {
    rows.push_back({CanonicalCode{names[c], depth, q}.digest(), a[c], b[c]});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ClassRow& x, const ClassRow& y) {
    return std::abs(x.a - x.b) > std::abs(y.a - y.b);
  });
  return rows;
}

// Forward-minus-backward class masses re-weighted by Rademacher multipliers
// after centering each sample's contribution at the observed mean.
std::vector<double> multiplier_bootstrap(const IndexedPairs& p, int replicates, Rng& rng) {
  std::vector<double> mean(p.names.size(), 0.0);
  auto n = static_cast<double>(p.w.size());
  for (std::size_t i = 0; i < p.w.size(); ++i) {
    mean[p.f[i]] += p.w[i] / n;
    mean[p.b[i]] -= p.w[i] / n;
  }
  std::vector<double> out;
  std::vector<double> acc(p.names.size());
  std::bernoulli_distribution coin(0.5);
  for (int rep = 0; rep < replicates; ++rep) {
    std::fill(acc.begin(), acc.end(), 0.0);
    double signs = 0.0;
    for (std::size_t i = 0; i < p.w.size(); ++i) {
      double e = coin(rng) ? 1.0 : -1.0;
      signs += e;
      if (p.f[i] == p.b[i]) continue;
      acc[p.f[i]] += e * p.w[i];
      acc[p.b[i]] -= e * p.w[i];
    }
    double s = 0.0;
    for (std::size_t c = 0; c < p.names.size(); ++c) s += std::abs(acc[c] - mean[c] * signs);
    out.push_back(0.5 * s / p.total);
  }
  return out;
}

// Null draws from independent replications: TV between the forward laws of
// two disjoint sample sets of the same size.
std::vector<double> seed_harness(const RootedLawSampler& mu, long samples,
                                 std::uint64_t seed, const InvolutionOptions& opt) {
  SeedTree tree(seed);
  std::vector<double> out;
  for (int rep = 0; rep < opt.replicates; ++rep) {
    EmpiricalRootedDist a(opt.depth, opt.quantization), b(opt.depth, opt.quantization);
    for (auto [dist, side] : {std::pair{&a, 0}, std::pair{&b, 1}}) {
      auto obs = pair_observations(mu, samples, tree.derive("harness", 2 * rep + side),
                                   opt.depth, opt.quantization);
      for (const auto& o : obs) {
        if (o.weight > 0.0) dist->add_bytes(o.forward, o.weight);
      }
    }
    out.push_back(a.total() > 0.0 && b.total() > 0.0 ? tv_distance(a, b) : 0.0);
  }
  return out;
}

}  // namespace

EmpiricalRootedDist empirical_distribution(const RootedLawSampler& mu, int depth,
                                           long samples, std::uint64_t seed,
                                           double quantization, int sample_radius) {
  if (depth < 0) throw DomainError("depth must be >= 0");
  int radius = sample_radius < 0 ? depth : sample_radius;
  if (radius < depth) throw TruncationError("sample radius below the code depth");
  return chunked_distribution(depth, quantization, samples, seed,
                              [&](EmpiricalRootedDist& out, Rng& rng) {
                                out.add(canonical_code(mu.sample(radius, rng), depth,
                                                       quantization));
                              });
}

EmpiricalRootedDist empirical_distribution(const RootedNetwork& g, int depth, long samples,
                                           std::uint64_t seed, double quantization) {
  if (depth < 0) throw DomainError("depth must be >= 0");
  if (!g.is_finite()) throw TruncationError("U(G) needs a finite network");
  auto code = [&](VertexId x) {
    return canonical_code(ball(g, x, depth), depth, quantization);
  };
  if (samples == 0) {
    EmpiricalRootedDist out(depth, quantization);
    for (VertexId x = 0; x < g.vertex_count(); ++x) out.add(code(x));
    out.set_samples(0);
    return out;
  }
  return chunked_distribution(depth, quantization, samples, seed,
                              [&](EmpiricalRootedDist& out, Rng& rng) {
                                out.add(code(static_cast<VertexId>(
                                    uniform_index(rng, g.vertex_count()))));
                              });
}

double tv_distance(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b) {
  check_compatible(a, b);
  double s = 0.0;
  for_each_class(a, b, [&](double pa, double pb) { s += std::abs(pa - pb); });
  return std::min(1.0, 0.5 * s);
}

double tv_standard_error(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b) {
  check_compatible(a, b);
  double inv = 0.0;
  if (a.samples() > 0) inv += 1.0 / static_cast<double>(a.samples());
  if (b.samples() > 0) inv += 1.0 / static_cast<double>(b.samples());
  double wa = a.samples() > 0 ? static_cast<double>(a.samples()) : 0.0;
  double wb = b.samples() > 0 ? static_cast<double>(b.samples()) : 0.0;
  double s = 0.0;
  for_each_class(a, b, [&](double pa, double pb) {
    double pooled = wa + wb > 0.0 ? (wa * pa + wb * pb) / (wa + wb) : pa;
    s += std::sqrt(pooled * (1.0 - pooled) * inv);
  });
  return 0.5 * s;
}

MassFunction mass_one() {
  return {"one", [](const DoublyRootedNetwork&) { return 1.0; }, 0, 1.0};
}

MassFunction mass_leaf_sender() {
  return {"leaf_sender",
          [](const DoublyRootedNetwork& g) {
            return g.network().degree(g.first()) == 1 ? 1.0 : 0.0;
          },
          1, 1.0};
}

TestReport mtp_test(const RootedLawSampler& mu, const MassFunction& f, long samples,
                    std::uint64_t seed, double threshold) {
  if (samples < 2) throw DomainError("mtp_test needs at least two samples");
  if (f.locality < 0) throw DomainError("mass locality must be >= 0");
  struct Part {
    double sum_d = 0, sum_d2 = 0, sent = 0, received = 0;
  };
  // The second root is a neighbor, so the ball must reach distance one.
  const int s = std::max(f.locality, 1);
  std::vector<Part> parts(kDefaultChunks);
  auto eval = [&](const DoublyRootedNetwork& pair) {
    double v = f.f(pair);
    if (!std::isfinite(v) || std::abs(v) > f.bound) {
      throw ContractViolation("mass function " + f.name + " exceeded its bound");
    }
    return v;
  };
  parallel_chunks(kDefaultChunks, seed, [&](std::size_t i, Rng& rng) {
    auto [lo, hi] = chunk_range(static_cast<std::size_t>(samples), kDefaultChunks, i);
    Part& p = parts[i];
    std::vector<VertexId> seen;
    for (std::size_t k = lo; k < hi; ++k) {
      RootedNetwork g = sample_ball(mu, s + 1, rng);
      VertexId o = g.root();
      seen.clear();
      double out = 0.0, in = 0.0;
      for (const auto& inc : g.incident(o)) {
        if (std::find(seen.begin(), seen.end(), inc.neighbor) != seen.end()) continue;
        seen.push_back(inc.neighbor);
        out += eval(pair_ball(g, o, inc.neighbor, s));
        in += eval(pair_ball(g, inc.neighbor, o, s));
      }
      p.sent += out;
      p.received += in;
      p.sum_d += out - in;
      p.sum_d2 += (out - in) * (out - in);
    }
  });
  Part t;
  for (const Part& p : parts) {
    t.sum_d += p.sum_d;
    t.sum_d2 += p.sum_d2;
    t.sent += p.sent;
    t.received += p.received;
  }
  auto n = static_cast<double>(samples);
  double mean = t.sum_d / n;
  double var = std::max(0.0, (t.sum_d2 - n * mean * mean) / (n - 1.0));
  double se = std::sqrt(var / n);
  double z;
  if (se > 0.0) {
    z = std::abs(mean) / se;
  } else {
    z = std::abs(mean) > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  TestReport r;
  r.test = "mtp:" + f.name;
  r.statistic = z;
  r.threshold = threshold;
  r.pass = z <= threshold;
  r.samples = samples;
  r.seed = seed;
  r.diagnostics = {{"sent_mean", t.sent / n},
                   {"received_mean", t.received / n},
                   {"difference_mean", mean},
                   {"difference_se", se}};
  return r;
}

TestReport involution_test(const RootedLawSampler& mu, long samples, std::uint64_t seed,
                           const InvolutionOptions& opt) {
  if (opt.depth < 1) throw DomainError("involution test needs depth >= 1");
  if (samples < 1) throw DomainError("need at least one sample");
  SeedTree tree(seed);
  auto obs = pair_observations(mu, samples, tree.derive("pairs"), opt.depth,
                               opt.quantization);
  IndexedPairs pairs = index_pairs(obs);
  TestReport r;
  r.test = "involution";
  r.samples = samples;
  r.seed = seed;
  if (pairs.w.empty()) {
    r.pass = true;
    r.warnings.push_back("every sampled root is isolated; the test is vacuous");
    r.diagnostics["isolated_fraction"] = 1.0;
    return r;
  }
  r.statistic = pair_tv(pairs);
  {
    std::vector<double> fa(pairs.names.size()), fb(pairs.names.size());
    for (std::size_t i = 0; i < pairs.w.size(); ++i) {
      fa[pairs.f[i]] += pairs.w[i] / pairs.total;
      fb[pairs.b[i]] += pairs.w[i] / pairs.total;
    }
    r.per_class = class_rows(pairs.names, fa, fb, opt.depth, opt.quantization);
  }
  r.diagnostics["classes"] = static_cast<double>(pairs.names.size());
  r.diagnostics["isolated_fraction"] =
      1.0 - static_cast<double>(pairs.w.size()) / static_cast<double>(samples);
  if (opt.fixed_threshold > 0.0) {
    r.threshold = opt.fixed_threshold;
  } else {
    std::vector<double> null;
    if (opt.calibration == Calibration::multiplier_bootstrap) {
      Rng rng = tree.stream("bootstrap");
      null = multiplier_bootstrap(pairs, opt.replicates, rng);
    } else {
      null = seed_harness(mu, samples, tree.derive("harness"), opt);
    }
    r.threshold = quantile_of(null, opt.quantile);
    r.diagnostics["null_median"] = quantile_of(null, 0.5);
  }
  r.pass = r.statistic <= r.threshold;
  return r;
}

std::vector<double> degree_biased(const RootedNetwork& g) {
  std::vector<double> w(g.vertex_count());
  double total = 0.0;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) == 0) throw DomainError("degree-biased law needs no isolated vertices");
    w[x] = static_cast<double>(g.degree(x));
    total += w[x];
  }
  for (double& x : w) x /= total;
  return w;
}

double stationarity_residual(const RootedNetwork& g) {
  std::vector<double> flow(g.vertex_count(), 0.0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    auto k = static_cast<double>(g.degree(x));
    if (k == 0.0) throw DomainError("random walk undefined at an isolated vertex");
    for (const auto& inc : g.incident(x)) flow[inc.neighbor] += k * (1.0 / k);
  }
  double worst = 0.0;
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    worst = std::max(worst, std::abs(flow[y] - static_cast<double>(g.degree(y))));
  }
  return worst;
}

TightnessReport tightness_report(const std::vector<RootedNetwork>& family, int r, int M,
                                 double epsilon) {
  if (r < 0 || M < 0) throw DomainError("tightness needs r >= 0 and M >= 0");
  if (family.empty()) throw DomainError("empty family");
  TightnessReport out;
  out.r = r;
  out.M = M;
  out.epsilon = epsilon;
  for (const RootedNetwork& g : family) {
    if (!g.is_finite()) throw DomainError("tightness family members must be finite");
    degree_biased(g);  // rejects isolated vertices
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    TightnessRow row;
    auto n = static_cast<double>(g.vertex_count());
    double degree_sum = 0.0, tail_sum = 0.0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      auto k = static_cast<double>(g.degree(x));
      degree_sum += k;
      if (k > M) {
        dist[x] = 0;
        queue.push_back(x);
        tail_sum += k;
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      VertexId x = queue[h];
      if (dist[x] == r) continue;
      for (const auto& inc : g.incident(x)) {
        if (dist[inc.neighbor] < 0) {
          dist[inc.neighbor] = dist[x] + 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    double covered_degree = 0.0;
    for (VertexId x : queue) covered_degree += static_cast<double>(g.degree(x));
    row.mean_degree = degree_sum / n;
    row.ui_tail = tail_sum / n;
    row.p_uniform = static_cast<double>(queue.size()) / n;
    row.p_biased = covered_degree / degree_sum;
    out.sup_uniform = std::max(out.sup_uniform, row.p_uniform);
    out.sup_biased = std::max(out.sup_biased, row.p_biased);
    out.sup_ui_tail = std::max(out.sup_ui_tail, row.ui_tail);
    out.rows.push_back(row);
  }
  out.tight = out.sup_uniform <= epsilon && out.sup_biased <= epsilon;
  return out;
}

std::vector<double> convergence_check(const std::vector<RootedNetwork>& sequence,
                                      const EmpiricalRootedDist& target, long samples,
                                      std::uint64_t seed) {
  SeedTree tree(seed);
  std::vector<double> out;
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    auto d = empirical_distribution(sequence[n], target.depth(), samples,
                                    tree.derive("member", n), target.quantization());
    out.push_back(tv_distance(d, target));
  }
  return out;
}

std::vector<double> cauchy_trend(const std::vector<RootedNetwork>& sequence, int depth,
                                 double quantization) {
  std::vector<double> out;
  for (std::size_t n = 0; n + 1 < sequence.size(); ++n) {
    auto a = empirical_distribution(sequence[n], depth, 0, 0, quantization);
    auto b = empirical_distribution(sequence[n + 1], depth, 0, 0, quantization);
    out.push_back(tv_distance(a, b));
  }
  return out;
}

TestReport consistency_test(const RootedLawSampler& mu, int depth, int radius_a,
                            int radius_b, long samples, std::uint64_t seed,
                            double quantization) {
  SeedTree tree(seed);
  auto a = empirical_distribution(mu, depth, samples, tree.derive("radius_a"), quantization,
                                  radius_a);
  auto b = empirical_distribution(mu, depth, samples, tree.derive("radius_b"), quantization,
                                  radius_b);
  TestReport r;
  r.test = "consistency";
  r.statistic = tv_distance(a, b);
  double se = tv_standard_error(a, b);
  r.threshold = 3.0 * se;
  r.pass = r.statistic <= r.threshold;
  r.samples = samples;
  r.seed = seed;
  r.diagnostics = {{"tv_se", se}, {"classes", static_cast<double>(a.class_count())}};
  std::vector<std::string> names;
  std::vector<double> fa, fb;
  for (const auto& [k, _] : a.weights()) names.push_back(k);
  for (const auto& [k, _] : b.weights()) {
    if (!a.weights().contains(k)) names.push_back(k);
  }
  std::sort(names.begin(), names.end());
  for (const auto& k : names) {
    fa.push_back(a.frequency(k));
    fb.push_back(b.frequency(k));
  }
  r.per_class = class_rows(names, fa, fb, depth, quantization);
  return r;
}

std::vector<double> truncation_tv_profile(const RootedLawSampler& mu,
                                          const std::vector<int>& degrees, int depth,
                                          long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("need at least one sample");
  std::size_t m = degrees.size();
  using Row = std::vector<EmpiricalRootedDist>;
  std::vector<Row> parts(kDefaultChunks, Row(m + 1, EmpiricalRootedDist(depth, 0.0)));
  parallel_chunks(kDefaultChunks, seed, [&](std::size_t i, Rng& rng) {
    auto [lo, hi] = chunk_range(static_cast<std::size_t>(samples), kDefaultChunks, i);
    for (std::size_t s = lo; s < hi; ++s) {
      RootedNetwork g = mu.sample(depth + 1, rng);
      parts[i][m].add(canonical_code(g, depth));
      for (std::size_t j = 0; j < m; ++j) {
        parts[i][j].add(canonical_code(truncate_degree(g, degrees[j]), depth));
      }
    }
  });
  Row total(m + 1, EmpiricalRootedDist(depth, 0.0));
  for (const Row& row : parts) {
    for (std::size_t j = 0; j <= m; ++j) total[j].merge(row[j]);
  }
  std::vector<double> out;
  for (std::size_t j = 0; j < m; ++j) out.push_back(tv_distance(total[j], total[m]));
  return out;
}

}  // namespace urt
