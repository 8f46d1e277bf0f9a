#pragma once

// Independent reference implementations and fixtures shared by the tests.
// Nothing here calls into the library beyond the Graph container.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "scount/graph.hpp"

namespace fixtures {

using scount::Edge;
using scount::Graph;
using scount::Vertex;

inline Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Two copies of the C gadget glued along apex 0 and base {1, 2}.
inline Graph double_c() {
  return Graph(5, {{1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33() {
  return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// K_{3,3} minus one edge: left column 0,1,2, right column 3,4,5, edge {2,5}
// missing.
inline Graph k33_minus_edge() {
  return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
}

// 17-vertex graph made of two 10-vertex calligraphs sharing apex 0 and base
// {1, 2}.
inline Graph two_calligraph_17() {
  return Graph(17, {{3, 4},  {3, 0},   {3, 6},   {4, 6},   {4, 7},   {5, 0},   {5, 7},
                    {5, 8},  {6, 1},   {6, 0},   {0, 9},   {7, 2},   {7, 8},   {2, 9},
                    {9, 8},  {0, 15},  {0, 16},  {1, 12},  {1, 10},  {1, 11},  {2, 12},
                    {2, 11}, {10, 15}, {10, 13}, {11, 14}, {12, 13}, {13, 14}, {14, 15},
                    {14, 16}, {16, 15}, {1, 2}});
}

inline std::vector<Vertex> identity(int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Isomorphism by trying every permutation; fine up to 8 vertices.
inline bool isomorphic_brute(const Graph &a, const Graph &b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<Vertex> p = identity(a.vertex_count());
  do {
    if (a.relabeled(p) == b)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Minimal graph6 decoder written straight from the format description.
inline Graph decode_graph6(const std::string &s) {
  int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int k = 5; k >= 0; --k)
      bits.push_back(((s[i] - 63) >> k) & 1);
  std::vector<std::pair<int, int>> edges;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[idx++])
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64 &rng, int n) {
  std::vector<Vertex> p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every graph on n labelled vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1)
        edges.push_back(slots[k]);
    out.emplace_back(n, edges);
  }
  return out;
}

} // namespace fixtures
