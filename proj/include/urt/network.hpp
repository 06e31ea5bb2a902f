#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "urt/mark.hpp"

namespace urt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// An edge with one mark at each endpoint.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Mark at_u;
  Mark at_v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  const Mark& mark_at(VertexId x) const { return x == u ? at_u : at_v; }
  const Mark& mark_opposite(VertexId x) const { return x == u ? at_v : at_u; }
};

/// A connected, marked multigraph with a root.
///
/// The radius of validity R states how much of the (possibly infinite)
/// underlying network this object describes exactly: the induced ball of
/// radius R around the root is complete, so every vertex at distance < R has
/// its whole neighborhood present. Finite networks use kUnbounded.
///
/// Immutable once built; vertex ids are dense indices 0..n-1.
class RootedNetwork {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
  };

  /// Validates: at least one vertex, root in range, endpoints in range, no
  /// loops, connected, radius >= 0.
  RootedNetwork(std::vector<Mark> vertex_marks, std::vector<Edge> edges,
                VertexId root, int radius_of_validity);

  std::size_t vertex_count() const { return marks_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexId root() const { return root_; }
  int radius() const { return radius_; }
  bool is_finite() const { return radius_ == kUnbounded; }

  const Mark& vertex_mark(VertexId v) const { return marks_[v]; }
  std::span<const Mark> vertex_marks() const { return marks_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  /// BFS distances from `from`; -1 marks vertices farther than `limit`.
  std::vector<int> distances_from(VertexId from, int limit = kUnbounded) const;

  /// Connected with |E| = |V| - 1 (hence no parallel edges either).
  bool is_tree() const { return edges_.size() + 1 == marks_.size(); }

  RootedNetwork with_root(VertexId root) const;
  RootedNetwork with_radius(int radius) const;

 private:
  std::vector<Mark> marks_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Incidence> incidences_;
  VertexId root_ = 0;
  int radius_ = 0;
};

/// A rooted network with a second distinguished vertex.
class DoublyRootedNetwork {
 public:
  DoublyRootedNetwork(RootedNetwork net, VertexId second);

  const RootedNetwork& network() const { return net_; }
  VertexId first() const { return net_.root(); }
  VertexId second() const { return second_; }

 private:
  RootedNetwork net_;
  VertexId second_;
};

/// Incremental construction of a RootedNetwork.
class NetworkBuilder {
 public:
  NetworkBuilder() = default;
  explicit NetworkBuilder(std::size_t vertex_hint, std::size_t edge_hint = 0);

  VertexId add_vertex(Mark mark = {});
  EdgeId add_edge(VertexId u, VertexId v, Mark at_u = {}, Mark at_v = {});

  std::size_t vertex_count() const { return marks_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  void set_vertex_mark(VertexId v, Mark mark) { marks_.at(v) = mark; }

  RootedNetwork build(VertexId root,
                      int radius = RootedNetwork::kUnbounded) &&;

 private:
  std::vector<Mark> marks_;
  std::vector<Edge> edges_;
};

/// Induced sub-network on the vertices within distance r of `center`,
/// rooted at `center`, with radius of validity r.
///
/// Throws DomainError if `center` is absent and TruncationError if the ball is
/// not determined by the known part of `net`. When `global_ids` is given it
/// receives, for each ball vertex, the id it has in `net`.
RootedNetwork ball(const RootedNetwork& net, VertexId center, int r,
                   std::vector<VertexId>* global_ids = nullptr);

/// Connected component of the root after keeping only the edges e with
/// keep[e]; ids are renumbered in BFS order from the root.
RootedNetwork root_component(const RootedNetwork& net,
                             const std::vector<bool>& keep, int radius);

}  // namespace urt
