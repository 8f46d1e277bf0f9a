#include "scount/rigidity.hpp"

#include <algorithm>

#include "scount/error.hpp"

namespace scount {
namespace {

constexpr int kPebblesPerVertex = 2;
constexpr int kAcceptThreshold = 4; // l + 1 for the (2,3) game
constexpr int kBruteForceLimit = 8;

class PebbleGame {
public:
  explicit PebbleGame(int n)
      : pebbles_(n, kPebblesPerVertex), out_(n), parent_(n), seen_(n) {}

  bool insert(Vertex u, Vertex v) {
    while (pebbles_[u] + pebbles_[v] < kAcceptThreshold) {
      if (!(pebbles_[u] < kPebblesPerVertex && gather(u, v)) &&
          !(pebbles_[v] < kPebblesPerVertex && gather(v, u)))
        return false;
    }
    if (pebbles_[u] > 0) {
      --pebbles_[u];
      out_[u].push_back(v);
    } else {
      --pebbles_[v];
      out_[v].push_back(u);
    }
    return true;
  }

private:
  // Moves one free pebble to `root` along reversed out-edges, never touching
  // `blocked`.
  bool gather(Vertex root, Vertex blocked) {
    std::fill(seen_.begin(), seen_.end(), 0);
    seen_[root] = seen_[blocked] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : out_[x]) {
        if (seen_[y])
          continue;
        seen_[y] = 1;
        parent_[y] = x;
        if (pebbles_[y] > 0) {
          --pebbles_[y];
          ++pebbles_[root];
          for (Vertex cur = y; cur != root; cur = parent_[cur]) {
            Vertex prev = parent_[cur];
            auto &edges = out_[prev];
            edges.erase(std::find(edges.begin(), edges.end(), cur));
            out_[cur].push_back(prev);
          }
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<Vertex> parent_;
  std::vector<char> seen_;
};

void require_nontrivial(const Graph &g) {
  if (g.vertex_count() < 2)
    throw Error(ErrorKind::Domain, "rigidity undefined for trivial graphs");
}

std::size_t laman_edges(const Graph &g) {
  return static_cast<std::size_t>(2 * g.vertex_count() - 3);
}

} // namespace

std::size_t independent_edge_count(const Graph &g) {
  PebbleGame game(g.vertex_count());
  std::size_t accepted = 0;
  for (const Edge &e : g.edges())
    accepted += game.insert(e.u, e.v) ? 1 : 0;
  return accepted;
}

bool is_tight_2_3(const Graph &g) {
  require_nontrivial(g);
  if (g.edge_count() != laman_edges(g))
    return false;
  return independent_edge_count(g) == g.edge_count();
}

bool is_minimally_rigid(const Graph &g) { return is_tight_2_3(g); }

bool is_rigid_spanning(const Graph &g) {
  require_nontrivial(g);
  if (g.edge_count() < laman_edges(g))
    return false;
  return independent_edge_count(g) == laman_edges(g);
}

bool brute_force_laman(const Graph &g) {
  require_nontrivial(g);
  const int n = g.vertex_count();
  if (n > kBruteForceLimit)
    throw Error(ErrorKind::Domain,
                "brute-force Laman check refuses more than 8 vertices");
  if (g.edge_count() != laman_edges(g))
    return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 2)
      continue;
    int inside = 0;
    for (const Edge &e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1))
        ++inside;
    if (inside > 2 * k - 3)
      return false;
  }
  return true;
}

} // namespace scount
