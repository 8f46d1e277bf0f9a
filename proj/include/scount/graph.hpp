#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace scount {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on the vertex labels 0..vertex_count-1.
///
/// Values are immutable once built; every "modifying" operation returns a
/// new graph. The edge list is kept sorted so that equality is structural.
class Graph {
public:
  Graph() = default;

  /// Validating constructor. Throws scount::Error (Validation) naming the
  /// offending pair on loops, out-of-range endpoints and duplicate edges.
  Graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);
  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_list)
      : Graph(vertex_count,
              std::span<const std::pair<int, int>>(edge_list.begin(),
                                                   edge_list.size())) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex x) const;
  std::vector<std::vector<Vertex>> adjacency() const;
  bool is_connected() const;

  /// Set union with {a, b}; adding an existing edge returns an equal graph.
  Graph with_edge(Vertex a, Vertex b) const;
  /// Appends a fresh vertex (label vertex_count()) with the given neighbours.
  Graph with_vertex(std::span<const Vertex> neighbours) const;
  Graph without_edge(Vertex a, Vertex b) const;

  /// Graph with every vertex x renamed to perm[x]; perm must be a bijection.
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph on `vertices` (which become 0..k-1 in the given order) with
  /// exactly the listed edges. Edges must have both endpoints in `vertices`.
  static Graph from_subset(std::span<const Vertex> vertices,
                           std::span<const Edge> edges);

  bool operator==(const Graph &) const = default;

private:
  static Graph from_sorted(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
};

} // namespace scount
