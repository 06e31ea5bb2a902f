#include "urt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>

#include "urt/errors.hpp"

namespace urt {

namespace {

void put_u32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t x) {
  // Big-endian so that byte order agrees with numeric order of the keys.
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

std::uint64_t quantize(double v, double q) {
  if (q > 0.0) {
    return static_cast<std::uint64_t>(std::llround(v / q));
  }
  if (v == 0.0) v = 0.0;  // fold -0.0 onto +0.0
  return std::bit_cast<std::uint64_t>(v);
}

void put_mark(std::string& out, const Mark& m, double q) {
  put_u32(out, m.tag());
  out.push_back(static_cast<char>(m.size()));
  for (double v : m.values()) put_u64(out, quantize(v, q));
}

struct Layout {
  std::vector<VertexId> order;   // BFS order from the root
  std::vector<int> dist;
  std::vector<VertexId> parent;  // parent in the BFS tree
  std::vector<EdgeId> parent_edge;
};

Layout bfs_layout(const RootedNetwork& net) {
  Layout l;
  const std::size_t n = net.vertex_count();
  l.dist.assign(n, -1);
  l.parent.assign(n, 0);
  l.parent_edge.assign(n, 0);
  l.order.reserve(n);
  l.order.push_back(net.root());
  l.dist[net.root()] = 0;
  for (std::size_t head = 0; head < l.order.size(); ++head) {
    VertexId x = l.order[head];
    for (const auto& inc : net.incident(x)) {
      if (l.dist[inc.neighbor] >= 0) continue;
      l.dist[inc.neighbor] = l.dist[x] + 1;
      l.parent[inc.neighbor] = x;
      l.parent_edge[inc.neighbor] = inc.edge;
      l.order.push_back(inc.neighbor);
    }
  }
  return l;
}

// Rooted trees: bottom-up canonical strings with sorted children (AHU).
std::string tree_bytes(const RootedNetwork& net, double q,
                       std::optional<VertexId> distinguished) {
  Layout l = bfs_layout(net);
  const std::size_t n = net.vertex_count();
  std::vector<std::string> code(n);
  std::vector<std::vector<std::string>> entries(n);
  for (auto it = l.order.rbegin(); it != l.order.rend(); ++it) {
    VertexId v = *it;
    std::string c;
    c.push_back('V');
    put_mark(c, net.vertex_mark(v), q);
    c.push_back(distinguished == v ? 'D' : '-');
    auto& kids = entries[v];
    std::sort(kids.begin(), kids.end());
    put_u32(c, static_cast<std::uint32_t>(kids.size()));
    for (auto& k : kids) c += k;
    kids.clear();
    kids.shrink_to_fit();
    if (v != net.root()) {
      const Edge& e = net.edge(l.parent_edge[v]);
      VertexId p = l.parent[v];
      std::string entry;
      entry.reserve(c.size() + 40);
      put_mark(entry, e.mark_at(p), q);
      put_mark(entry, e.mark_at(v), q);
      entry += c;
      entries[p].push_back(std::move(entry));
    } else {
      code[v] = std::move(c);
    }
  }
  return "T" + code[net.root()];
}

// General multigraphs: individualization-refinement, keeping the smallest
// encoding over all leaves of the search tree.
class GraphCanonizer {
 public:
  GraphCanonizer(const RootedNetwork& net, double q,
                 std::optional<VertexId> distinguished)
      : net_(net), n_(net.vertex_count()) {
    Layout l = bfs_layout(net);
    vertex_key_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      std::string& k = vertex_key_[v];
      put_u32(k, static_cast<std::uint32_t>(l.dist[v]));
      k.push_back(distinguished == v ? 'D' : '-');
      put_mark(k, net.vertex_mark(v), q);
    }
    // Edge-end labels, ranked by their canonical bytes.
    std::vector<std::string> end_keys;
    for (VertexId v = 0; v < n_; ++v) {
      for (const auto& inc : net.incident(v)) {
        const Edge& e = net.edge(inc.edge);
        std::string k;
        put_mark(k, e.mark_at(v), q);
        put_mark(k, e.mark_opposite(v), q);
        end_keys.push_back(std::move(k));
      }
    }
    std::vector<std::string> uniq = end_keys;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    end_label_.resize(end_keys.size());
    for (std::size_t i = 0; i < end_keys.size(); ++i) {
      end_label_[i] = static_cast<std::uint32_t>(
          std::lower_bound(uniq.begin(), uniq.end(), end_keys[i]) - uniq.begin());
    }
    // Per-edge byte form used by the final encoding.
    edge_keys_.resize(net.edge_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      put_mark(edge_keys_[e].first, net.edge(e).at_u, q);
      put_mark(edge_keys_[e].second, net.edge(e).at_v, q);
    }
    initial_colors_ = rank_strings(vertex_key_);
  }

  std::string run() {
    std::vector<std::uint32_t> colors = initial_colors_;
    search(colors);
    return "G" + best_;
  }

 private:
  static std::vector<std::uint32_t> rank_strings(const std::vector<std::string>& keys) {
    std::vector<std::string> uniq = keys;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<std::uint32_t> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<std::uint32_t>(
          std::lower_bound(uniq.begin(), uniq.end(), keys[i]) - uniq.begin());
    }
    return out;
  }

  // Refines to the coarsest equitable partition finer than `colors`.
  // Color ids are ranks of signatures whose first entry is the old color, so
  // the refinement never reorders existing cells.
  std::size_t refine(std::vector<std::uint32_t>& colors) const {
    std::size_t count = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<std::uint64_t>> sig(n_);
    std::vector<VertexId> idx(n_);
    while (true) {
      std::size_t slot = 0;
      for (VertexId v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        for (const auto& inc : net_.incident(v)) {
          s.push_back((static_cast<std::uint64_t>(colors[inc.neighbor]) << 32) |
                      end_label_[slot++]);
        }
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), colors[v]);
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](VertexId a, VertexId b) { return sig[a] < sig[b]; });
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
        colors[idx[i]] = next;
      }
      std::size_t fresh = next + 1;
      if (fresh == count) return count;
      count = fresh;
    }
  }

  std::string encode(const std::vector<std::uint32_t>& label) const {
    std::string out;
    std::vector<VertexId> by_label(n_);
    for (VertexId v = 0; v < n_; ++v) by_label[label[v]] = v;
    for (VertexId v : by_label) out += vertex_key_[v];
    std::vector<std::string> edges;
    edges.reserve(net_.edge_count());
    for (EdgeId e = 0; e < net_.edge_count(); ++e) {
      const Edge& ed = net_.edge(e);
      std::uint32_t a = label[ed.u];
      std::uint32_t b = label[ed.v];
      std::string k;
      if (a < b) {
        put_u64(k, (static_cast<std::uint64_t>(a) << 32) | b);
        k += edge_keys_[e].first;
        k += edge_keys_[e].second;
      } else {
        put_u64(k, (static_cast<std::uint64_t>(b) << 32) | a);
        k += edge_keys_[e].second;
        k += edge_keys_[e].first;
      }
      edges.push_back(std::move(k));
    }
    std::sort(edges.begin(), edges.end());
    put_u32(out, static_cast<std::uint32_t>(edges.size()));
    for (auto& k : edges) out += k;
    return out;
  }

  void search(std::vector<std::uint32_t>& colors) {
    std::size_t count = refine(colors);
    if (count == n_) {
      std::string candidate = encode(colors);
      if (!have_best_ || candidate < best_) {
        best_ = std::move(candidate);
        have_best_ = true;
      }
      return;
    }
    std::vector<std::uint32_t> size(count, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    while (size[target] < 2) ++target;
    for (VertexId v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::uint32_t> next = colors;
      for (VertexId w = 0; w < n_; ++w) {
        if (colors[w] > target || (colors[w] == target && w != v)) ++next[w];
      }
      search(next);
    }
  }

  const RootedNetwork& net_;
  std::size_t n_;
  std::vector<std::string> vertex_key_;
  std::vector<std::uint32_t> end_label_;
  std::vector<std::pair<std::string, std::string>> edge_keys_;
  std::vector<std::uint32_t> initial_colors_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalCode::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string canonical_bytes(const RootedNetwork& net, double quantization,
                            std::optional<VertexId> distinguished) {
  if (!(quantization >= 0.0) || !std::isfinite(quantization)) {
    throw DomainError("quantization step must be a finite nonnegative number");
  }
  if (distinguished && *distinguished >= net.vertex_count()) {
    throw DomainError("distinguished vertex is not in the network");
  }
  if (net.is_tree()) return tree_bytes(net, quantization, distinguished);
  return GraphCanonizer(net, quantization, distinguished).run();
}

CanonicalCode canonical_code(const RootedNetwork& net, int depth,
                             double quantization) {
  if (depth > net.radius()) {
    throw TruncationError("code depth exceeds the radius of validity");
  }
  RootedNetwork b = ball(net, net.root(), depth);
  return {canonical_bytes(b, quantization), depth, quantization};
}

CanonicalCode canonical_code(const DoublyRootedNetwork& net, int depth,
                             double quantization) {
  const RootedNetwork& g = net.network();
  if (depth > g.radius()) {
    throw TruncationError("code depth exceeds the radius of validity");
  }
  std::vector<VertexId> ids;
  RootedNetwork b = ball(g, g.root(), depth, &ids);
  auto it = std::find(ids.begin(), ids.end(), net.second());
  if (it == ids.end()) {
    throw DomainError("second root lies outside the coded ball");
  }
  auto local = static_cast<VertexId>(it - ids.begin());
  return {canonical_bytes(b, quantization, local), depth, quantization};
}

}  // namespace urt
