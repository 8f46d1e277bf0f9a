#include "scount/enumerate.hpp"

#include <map>
#include <set>

#include "scount/canonical.hpp"
#include "scount/error.hpp"

namespace scount {

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0)
    throw Error(ErrorKind::Domain, "negative vertex count");
  std::vector<Graph> all;
  std::vector<Graph> level{Graph(n, {})};
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::map<std::string, Graph> next;
    for (const Graph &g : level)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) {
            Graph h = g.with_edge(u, v);
            next.try_emplace(canonical_key(h).bytes, std::move(h));
          }
    level.clear();
    for (auto &[key, g] : next)
      level.push_back(std::move(g));
  }
  return all;
}

std::vector<Graph> enumerate_laman_graphs(int n) {
  if (n < 2)
    throw Error(ErrorKind::Domain, "Laman graphs need at least two vertices");
  std::vector<Graph> level{Graph(2, {{0, 1}})};
  for (int k = 2; k < n; ++k) {
    std::map<std::string, Graph> next;
    auto keep = [&](Graph h) {
      next.try_emplace(canonical_key(h).bytes, std::move(h));
    };
    for (const Graph &g : level) {
      // Vertex addition: new vertex joined to two existing ones.
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          const Vertex nb[] = {a, b};
          keep(g.with_vertex(nb));
        }
      // Edge split: remove {a,b}, join the new vertex to a, b and some c.
      for (const Edge &e : g.edges())
        for (int c = 0; c < k; ++c) {
          if (e.contains(c))
            continue;
          const Vertex nb[] = {e.u, e.v, c};
          keep(g.without_edge(e.u, e.v).with_vertex(nb));
        }
    }
    level.clear();
    for (auto &[key, g] : next)
      level.push_back(std::move(g));
  }
  return level;
}

} // namespace scount
