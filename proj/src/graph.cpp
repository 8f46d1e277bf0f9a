#include "scount/graph.hpp"

#include <algorithm>
#include <string>

#include "scount/error.hpp"

namespace scount {
namespace {

std::string pair_str(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edge_list)
    : n_(vertex_count) {
  if (vertex_count < 0)
    throw Error(ErrorKind::Validation, "negative vertex count");
  edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a == b)
      throw Error(ErrorKind::Validation, "loop edge " + pair_str(a, b));
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw Error(ErrorKind::Validation,
                  "edge endpoint out of range " + pair_str(a, b));
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(ErrorKind::Validation,
                "duplicate edge " + pair_str(dup->u, dup->v));
}

Graph Graph::from_sorted(int n, std::vector<Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b)
    return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int Graph::degree(Vertex x) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [x](const Edge &e) { return e.contains(x); }));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge &e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool Graph::is_connected() const {
  if (n_ <= 1)
    return true;
  auto adj = adjacency();
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n_;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
    throw Error(ErrorKind::Validation, "cannot add edge " + pair_str(a, b));
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    return *this;
  std::vector<Edge> edges = edges_;
  edges.insert(edges.begin() + (it - edges_.begin()), e);
  return from_sorted(n_, std::move(edges));
}

Graph Graph::with_vertex(std::span<const Vertex> neighbours) const {
  std::vector<Edge> edges = edges_;
  for (Vertex x : neighbours) {
    if (x < 0 || x >= n_)
      throw Error(ErrorKind::Validation,
                  "neighbour out of range " + std::to_string(x));
    edges.emplace_back(x, n_);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return from_sorted(n_ + 1, std::move(edges));
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
  std::vector<Edge> edges = edges_;
  edges.erase(std::remove(edges.begin(), edges.end(), Edge(a, b)), edges.end());
  return from_sorted(n_, std::move(edges));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorKind::Validation, "relabeling has wrong size");
  std::vector<char> seen(n_, 0);
  for (Vertex x : perm) {
    if (x < 0 || x >= n_ || seen[x])
      throw Error(ErrorKind::Validation, "relabeling is not a permutation");
    seen[x] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge &e : edges_)
    edges.emplace_back(perm[e.u], perm[e.v]);
  std::sort(edges.begin(), edges.end());
  return from_sorted(n_, std::move(edges));
}

Graph Graph::from_subset(std::span<const Vertex> vertices,
                         std::span<const Edge> edges) {
  Vertex hi = 0;
  for (Vertex x : vertices)
    hi = std::max(hi, x + 1);
  std::vector<int> local(hi, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge &e : edges) {
    if (e.u >= hi || e.v >= hi || local[e.u] < 0 || local[e.v] < 0)
      throw Error(ErrorKind::Validation,
                  "subgraph edge " + pair_str(e.u, e.v) + " leaves vertex set");
    out.emplace_back(local[e.u], local[e.v]);
  }
  std::sort(out.begin(), out.end());
  return from_sorted(static_cast<int>(vertices.size()), std::move(out));
}

} // namespace scount
