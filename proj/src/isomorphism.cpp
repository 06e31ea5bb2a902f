#include "urt/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "urt/errors.hpp"

namespace urt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool within(const Mark& a, const Mark& b, double tol) {
  double d = mark_distance(a, b);
  return std::isfinite(d) && d <= tol;
}

// Kuhn's augmenting-path bipartite matching on a dense compatibility matrix.
bool perfect_matching(const std::vector<std::vector<char>>& compat) {
  const std::size_t k = compat.size();
  std::vector<int> match_right(k, -1);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!compat[i][j] || visited[j]) continue;
      visited[j] = 1;
      if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]))) {
        match_right[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    visited.assign(k, 0);
    if (!augment(i)) return false;
  }
  return true;
}

struct TreeView {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> children;
  std::vector<std::uint64_t> shape;  // structural hash of the rooted subtree
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t mark_shape(const Mark& m) {
  return (static_cast<std::uint64_t>(m.tag()) << 8) | m.size();
}

TreeView tree_view(const RootedNetwork& t) {
  const std::size_t n = t.vertex_count();
  TreeView view;
  view.children.resize(n);
  view.shape.assign(n, 0);
  std::vector<VertexId> order{t.root()};
  std::vector<char> seen(n, 0);
  seen[t.root()] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId x = order[head];
    for (const auto& inc : t.incident(x)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      view.children[x].emplace_back(inc.neighbor, inc.edge);
      order.push_back(inc.neighbor);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId x = *it;
    std::vector<std::uint64_t> kids;
    for (auto [c, e] : view.children[x]) {
      const Edge& ed = t.edge(e);
      std::uint64_t h = mix(view.shape[c], mark_shape(ed.mark_at(x)));
      kids.push_back(mix(h, mark_shape(ed.mark_at(c))));
    }
    std::sort(kids.begin(), kids.end());
    std::uint64_t h = mix(0x51ed27, mark_shape(t.vertex_mark(x)));
    h = mix(h, kids.size());
    for (auto k : kids) h = mix(h, k);
    view.shape[x] = h;
  }
  return view;
}

class TreeMatcher {
 public:
  TreeMatcher(const RootedNetwork& a, const RootedNetwork& b, double tol)
      : a_(a), b_(b), va_(tree_view(a)), vb_(tree_view(b)), tol_(tol) {}

  bool run() { return match(a_.root(), b_.root()); }

 private:
  bool match(VertexId u, VertexId v) {
    if (va_.shape[u] != vb_.shape[v]) return false;
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = within(a_.vertex_mark(u), b_.vertex_mark(v), tol_);
    const auto& cu = va_.children[u];
    const auto& cv = vb_.children[v];
    ok = ok && cu.size() == cv.size();
    if (ok && !cu.empty()) {
      std::vector<std::vector<char>> compat(cu.size(), std::vector<char>(cv.size(), 0));
      for (std::size_t i = 0; i < cu.size(); ++i) {
        const Edge& ea = a_.edge(cu[i].second);
        for (std::size_t j = 0; j < cv.size(); ++j) {
          const Edge& eb = b_.edge(cv[j].second);
          compat[i][j] = within(ea.mark_at(u), eb.mark_at(v), tol_) &&
                         within(ea.mark_at(cu[i].first), eb.mark_at(cv[j].first), tol_) &&
                         match(cu[i].first, cv[j].first);
        }
      }
      ok = perfect_matching(compat);
    }
    memo_.emplace(key, ok);
    return ok;
  }

  const RootedNetwork& a_;
  const RootedNetwork& b_;
  TreeView va_;
  TreeView vb_;
  double tol_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// Joint color refinement over the disjoint union of a and b, using only
// exactly invariant data (distance to root, degree, tags, mark lengths).
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> joint_colors(
    const RootedNetwork& a, const RootedNetwork& b) {
  const RootedNetwork* nets[2] = {&a, &b};
  std::vector<std::vector<int>> dist = {a.distances_from(a.root()),
                                        b.distances_from(b.root())};
  const std::size_t na = a.vertex_count();
  const std::size_t n = na + b.vertex_count();
  auto net_of = [&](std::size_t g) { return g < na ? 0 : 1; };
  auto local = [&](std::size_t g) { return static_cast<VertexId>(g < na ? g : g - na); };

  std::vector<std::vector<std::uint64_t>> sig(n);
  for (std::size_t g = 0; g < n; ++g) {
    const RootedNetwork& t = *nets[net_of(g)];
    VertexId v = local(g);
    sig[g] = {static_cast<std::uint64_t>(dist[net_of(g)][v]), t.degree(v),
              mark_shape(t.vertex_mark(v))};
  }
  std::vector<std::uint32_t> color(n, 0);
  std::size_t count = 0;
  std::vector<std::size_t> idx(n);
  while (true) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return sig[x] < sig[y]; });
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
      color[idx[i]] = next;
    }
    if (next + 1 == count) break;
    count = next + 1;
    for (std::size_t g = 0; g < n; ++g) {
      const RootedNetwork& t = *nets[net_of(g)];
      VertexId v = local(g);
      std::vector<std::uint64_t> s;
      for (const auto& inc : t.incident(v)) {
        const Edge& e = t.edge(inc.edge);
        std::size_t gn = inc.neighbor + (net_of(g) == 0 ? 0 : na);
        s.push_back(mix(mix(color[gn], mark_shape(e.mark_at(v))),
                        mark_shape(e.mark_opposite(v))));
      }
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), color[g]);
      sig[g] = std::move(s);
    }
  }
  std::vector<std::uint32_t> ca(color.begin(), color.begin() + static_cast<long>(na));
  std::vector<std::uint32_t> cb(color.begin() + static_cast<long>(na), color.end());
  return {ca, cb};
}

class GraphMatcher {
 public:
  GraphMatcher(const RootedNetwork& a, const RootedNetwork& b, double tol)
      : a_(a), b_(b), tol_(tol) {}

  bool run() {
    auto [ca, cb] = joint_colors(a_, b_);
    if (ca[a_.root()] != cb[b_.root()]) return false;
    std::vector<std::uint32_t> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    ca_ = std::move(ca);
    cb_ = std::move(cb);

    const std::size_t n = a_.vertex_count();
    order_.push_back(a_.root());
    parent_.assign(n, 0);
    std::vector<char> seen(n, 0);
    seen[a_.root()] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      VertexId x = order_[head];
      for (const auto& inc : a_.incident(x)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        parent_[inc.neighbor] = x;
        order_.push_back(inc.neighbor);
      }
    }
    f_.assign(n, 0);
    mapped_.assign(n, 0);
    used_.assign(b_.vertex_count(), 0);
    if (!within(a_.vertex_mark(a_.root()), b_.vertex_mark(b_.root()), tol_)) return false;
    assign(a_.root(), b_.root());
    return extend(1);
  }

 private:
  void assign(VertexId v, VertexId w) {
    f_[v] = w;
    mapped_[v] = 1;
    used_[w] = 1;
  }
  void unassign(VertexId v) {
    used_[f_[v]] = 0;
    mapped_[v] = 0;
  }

  bool edges_match(VertexId v, VertexId u, VertexId w, VertexId x) const {
    std::vector<EdgeId> ea, eb;
    for (const auto& inc : a_.incident(v)) {
      if (inc.neighbor == u) ea.push_back(inc.edge);
    }
    for (const auto& inc : b_.incident(w)) {
      if (inc.neighbor == x) eb.push_back(inc.edge);
    }
    if (ea.size() != eb.size()) return false;
    std::vector<std::vector<char>> compat(ea.size(), std::vector<char>(eb.size(), 0));
    for (std::size_t i = 0; i < ea.size(); ++i) {
      const Edge& e1 = a_.edge(ea[i]);
      for (std::size_t j = 0; j < eb.size(); ++j) {
        const Edge& e2 = b_.edge(eb[j]);
        compat[i][j] = within(e1.mark_at(v), e2.mark_at(w), tol_) &&
                       within(e1.mark_at(u), e2.mark_at(x), tol_);
      }
    }
    return perfect_matching(compat);
  }

  bool consistent(VertexId v, VertexId w) const {
    std::vector<VertexId> nbrs;
    for (const auto& inc : a_.incident(v)) {
      if (mapped_[inc.neighbor]) nbrs.push_back(inc.neighbor);
    }
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    std::vector<VertexId> images;
    for (const auto& inc : b_.incident(w)) {
      if (used_[inc.neighbor]) images.push_back(inc.neighbor);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (nbrs.size() != images.size()) return false;
    for (VertexId u : nbrs) {
      if (!edges_match(v, u, w, f_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t idx) {
    if (idx == order_.size()) return true;
    VertexId v = order_[idx];
    VertexId anchor = f_[parent_[v]];
    std::vector<VertexId> tried;
    for (const auto& inc : b_.incident(anchor)) {
      VertexId w = inc.neighbor;
      if (used_[w] || cb_[w] != ca_[v]) continue;
      if (std::find(tried.begin(), tried.end(), w) != tried.end()) continue;
      tried.push_back(w);
      if (!within(a_.vertex_mark(v), b_.vertex_mark(w), tol_)) continue;
      if (!consistent(v, w)) continue;
      assign(v, w);
      if (extend(idx + 1)) return true;
      unassign(v);
    }
    return false;
  }

  const RootedNetwork& a_;
  const RootedNetwork& b_;
  double tol_;
  std::vector<std::uint32_t> ca_, cb_;
  std::vector<VertexId> order_, parent_, f_;
  std::vector<char> mapped_, used_;
};

void collect_differences(const Mark& x, const Mark& y, std::vector<double>& out) {
  if (x.tag() != y.tag() || x.size() != y.size()) return;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(std::abs(x[i] - y[i]));
}

}  // namespace

bool rooted_isomorphic(const RootedNetwork& a, const RootedNetwork& b,
                       double mark_tol) {
  if (std::isnan(mark_tol) || mark_tol < 0.0) {
    throw DomainError("mark tolerance must be nonnegative");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  if (a.degree(a.root()) != b.degree(b.root())) return false;
  if (a.is_tree()) return TreeMatcher(a, b, mark_tol).run();
  return GraphMatcher(a, b, mark_tol).run();
}

double bottleneck_mark_distance(const RootedNetwork& a, const RootedNetwork& b) {
  if (!rooted_isomorphic(a, b, kInf)) return kInf;
  std::vector<double> cand{0.0};
  for (const Mark& x : a.vertex_marks()) {
    for (const Mark& y : b.vertex_marks()) collect_differences(x, y, cand);
  }
  std::vector<const Mark*> ends_a, ends_b;
  for (const Edge& e : a.edges()) {
    ends_a.push_back(&e.at_u);
    ends_a.push_back(&e.at_v);
  }
  for (const Edge& e : b.edges()) {
    ends_b.push_back(&e.at_u);
    ends_b.push_back(&e.at_v);
  }
  for (const Mark* x : ends_a) {
    for (const Mark* y : ends_b) collect_differences(*x, *y, cand);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;
  if (rooted_isomorphic(a, b, cand[lo])) return cand[lo];
  // Invariant: fails at cand[lo], succeeds at cand[hi].
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (rooted_isomorphic(a, b, cand[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return cand[hi];
}

LocalDistance local_distance(const RootedNetwork& a, const RootedNetwork& b,
                             int r_max) {
  if (r_max < 1) throw DomainError("local_distance needs r_max >= 1");
  if (a.radius() < r_max || b.radius() < r_max) {
    throw TruncationError("local_distance horizon exceeds the radius of validity");
  }
  // The admissible set of r is an initial interval (0, alpha): a smaller r
  // uses a smaller ball and a looser tolerance.
  for (int k = 0; k <= r_max; ++k) {
    double m = bottleneck_mark_distance(ball(a, a.root(), k), ball(b, b.root(), k));
    double limit = (m == 0.0) ? kInf : 1.0 / m;  // admissible iff r < limit
    if (k == r_max) {
      if (limit > r_max) return {1.0 / (1.0 + r_max), false};
      return {1.0 / (1.0 + r_max), true};
    }
    if (limit <= k) return {1.0 / (1.0 + k), true};
    if (limit < k + 1) return {1.0 / (1.0 + limit), true};
  }
  return {1.0 / (1.0 + r_max), false};  // unreachable
}

}  // namespace urt
