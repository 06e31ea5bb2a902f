#include "urt/network.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "urt/errors.hpp"

namespace urt {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

// Maps global vertex ids to ball-local ids; dense for small networks, hashed
// for large ones so that a ball costs time proportional to its own size.
class LocalIndex {
 public:
  explicit LocalIndex(std::size_t n) {
    if (n <= kDenseLimit) dense_.assign(n, kNone);
  }
  VertexId find(VertexId v) const {
    if (!dense_.empty()) return dense_[v];
    auto it = sparse_.find(v);
    return it == sparse_.end() ? kNone : it->second;
  }
  void set(VertexId v, VertexId local) {
    if (!dense_.empty()) {
      dense_[v] = local;
    } else {
      sparse_.emplace(v, local);
    }
  }

 private:
  static constexpr std::size_t kDenseLimit = 4096;
  std::vector<VertexId> dense_;
  std::unordered_map<VertexId, VertexId> sparse_;
};

}  // namespace

RootedNetwork::RootedNetwork(std::vector<Mark> vertex_marks,
                             std::vector<Edge> edges, VertexId root,
                             int radius_of_validity)
    : marks_(std::move(vertex_marks)),
      edges_(std::move(edges)),
      root_(root),
      radius_(radius_of_validity) {
  const std::size_t n = marks_.size();
  if (n == 0) throw DomainError("network has no vertices");
  if (root_ >= n) throw DomainError("root is not a vertex of the network");
  if (radius_ < 0) throw DomainError("radius of validity must be nonnegative");

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge endpoint is not a vertex of the network");
    }
    if (e.u == e.v) throw DomainError("loops are not supported");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  incidences_.resize(offsets_[n]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidences_[fill[e.u]++] = {e.v, id};
    incidences_[fill[e.v]++] = {e.u, id};
  }

  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{root_};
  seen[root_] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != n) throw DomainError("network is not connected");
}

std::size_t RootedNetwork::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> RootedNetwork::distances_from(VertexId from, int limit) const {
  if (from >= vertex_count()) throw DomainError("vertex is not in the network");
  std::vector<int> dist(vertex_count(), -1);
  std::vector<VertexId> queue{from};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    if (dist[x] >= limit) continue;
    for (const Incidence& inc : incident(x)) {
      if (dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

RootedNetwork RootedNetwork::with_root(VertexId root) const {
  return RootedNetwork(marks_, edges_, root, radius_);
}

RootedNetwork RootedNetwork::with_radius(int radius) const {
  return RootedNetwork(marks_, edges_, root_, radius);
}

DoublyRootedNetwork::DoublyRootedNetwork(RootedNetwork net, VertexId second)
    : net_(std::move(net)), second_(second) {
  if (second_ >= net_.vertex_count()) {
    throw DomainError("second root is not a vertex of the network");
  }
}

NetworkBuilder::NetworkBuilder(std::size_t vertex_hint, std::size_t edge_hint) {
  marks_.reserve(vertex_hint);
  edges_.reserve(edge_hint);
}

VertexId NetworkBuilder::add_vertex(Mark mark) {
  marks_.push_back(mark);
  return static_cast<VertexId>(marks_.size() - 1);
}

EdgeId NetworkBuilder::add_edge(VertexId u, VertexId v, Mark at_u, Mark at_v) {
  edges_.push_back(Edge{u, v, at_u, at_v});
  return static_cast<EdgeId>(edges_.size() - 1);
}

RootedNetwork NetworkBuilder::build(VertexId root, int radius) && {
  return RootedNetwork(std::move(marks_), std::move(edges_), root, radius);
}

RootedNetwork ball(const RootedNetwork& net, VertexId center, int r,
                   std::vector<VertexId>* global_ids) {
  if (center >= net.vertex_count()) {
    throw DomainError("ball center is not a vertex of the network");
  }
  if (r < 0) throw DomainError("ball radius must be nonnegative");
  if (!net.is_finite()) {
    int offset = 0;
    if (center != net.root()) {
      offset = net.distances_from(net.root())[center];
    }
    if (static_cast<long long>(offset) + r > net.radius()) {
      throw TruncationError("ball of radius " + std::to_string(r) +
                            " exceeds the radius of validity " +
                            std::to_string(net.radius()));
    }
  }

  LocalIndex local(net.vertex_count());
  std::vector<VertexId> order{center};
  std::vector<int> depth{0};
  local.set(center, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (depth[head] == r) continue;
    for (const auto& inc : net.incident(order[head])) {
      if (local.find(inc.neighbor) == kNone) {
        local.set(inc.neighbor, static_cast<VertexId>(order.size()));
        order.push_back(inc.neighbor);
        depth.push_back(depth[head] + 1);
      }
    }
  }

  NetworkBuilder out(order.size(), order.size());
  for (VertexId g : order) out.add_vertex(net.vertex_mark(g));
  for (VertexId i = 0; i < order.size(); ++i) {
    for (const auto& inc : net.incident(order[i])) {
      VertexId j = local.find(inc.neighbor);
      if (j == kNone || j < i) continue;
      const Edge& e = net.edge(inc.edge);
      if (e.u == order[i]) {
        out.add_edge(i, j, e.at_u, e.at_v);
      } else {
        out.add_edge(j, i, e.at_u, e.at_v);
      }
    }
  }
  if (global_ids != nullptr) *global_ids = order;
  return std::move(out).build(0, r);
}

RootedNetwork root_component(const RootedNetwork& net,
                             const std::vector<bool>& keep, int radius) {
  if (keep.size() != net.edge_count()) {
    throw DomainError("edge mask size does not match the network");
  }
  LocalIndex local(net.vertex_count());
  std::vector<VertexId> order{net.root()};
  local.set(net.root(), 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& inc : net.incident(order[head])) {
      if (!keep[inc.edge] || local.find(inc.neighbor) != kNone) continue;
      local.set(inc.neighbor, static_cast<VertexId>(order.size()));
      order.push_back(inc.neighbor);
    }
  }
  NetworkBuilder out(order.size(), order.size());
  for (VertexId g : order) out.add_vertex(net.vertex_mark(g));
  for (VertexId i = 0; i < order.size(); ++i) {
    for (const auto& inc : net.incident(order[i])) {
      if (!keep[inc.edge]) continue;
      VertexId j = local.find(inc.neighbor);
      if (j < i) continue;
      const Edge& e = net.edge(inc.edge);
      if (e.u == order[i]) {
        out.add_edge(i, j, e.at_u, e.at_v);
      } else {
        out.add_edge(j, i, e.at_u, e.at_v);
      }
    }
  }
  return std::move(out).build(0, radius);
}

}  // namespace urt
